//! Command-line front end for permutation-power LDPC constructions.
//!
//! Four modes, selected by `--mode`:
//!
//! * `build` — construct the block matrix from a job description,
//!   report length/dimension/rate, and write `.proto` + `.alist` files.
//! * `analyze` — print the closed-form cycle report and the brute-force
//!   oracle girth side by side with an agreement flag (exit 3 when they
//!   disagree), or oracle-only for an existing `--alist` file.
//! * `search` — enumerate column exponent sets reaching a target girth,
//!   oracle-verified, ranked by rate descending.
//! * `export` — write the expanded matrix as a single alist file.
//!
//! Jobs come from a flat `key=value` file (`--config`) and/or flags;
//! flags override file entries. Exit codes: 0 success/agreement, 1
//! usage error, 2 invariant violation, 3 theorem/oracle disagreement.

mod config;
mod search;

use clap::Parser;
use permldpc::{
    classify, from_alist, oracle, to_alist, CycleNotation, Permutation, ProtoMatrix, ResidueSet,
};
use search::{SearchSpec, Strategy};
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "permldpc",
    version,
    about = "Build, analyze, search, and export LDPC parity-check matrices whose blocks are powers of one permutation"
)]
struct Cli {
    /// Job mode: build | analyze | search | export.
    #[arg(long)]
    mode: Option<String>,
    /// Flat key=value job file; flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Block generator: cycle notation "(0 1 2 ...)" or shorthand cycle:<n>.
    #[arg(long)]
    f: Option<String>,
    /// Row exponent multipliers, e.g. "{0,1}".
    #[arg(long = "A", value_name = "SET")]
    a: Option<String>,
    /// Column exponents, e.g. "{0,1,4,6,13}".
    #[arg(long = "I", value_name = "SET")]
    i: Option<String>,
    /// Extra weight-one block columns, "row:exp,row:exp".
    #[arg(long)]
    extend: Option<String>,
    /// Modulus for search mode (defaults to the order of --f when given).
    #[arg(long)]
    m: Option<String>,
    /// Target girth for search mode: 6, 8, or 12.
    #[arg(long = "target-girth")]
    target_girth: Option<String>,
    /// Largest column exponent set size searched (default 5).
    #[arg(long = "max-set-size")]
    max_set_size: Option<String>,
    /// Search strategy: greedy_b2 | exhaustive | random (default greedy_b2).
    #[arg(long)]
    strategy: Option<String>,
    /// Seed driving all randomness in search mode (default 0).
    #[arg(long)]
    seed: Option<String>,
    /// Output path: build uses it as a prefix for .proto/.alist, export
    /// writes the alist exactly there.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Analyze an existing alist file with the girth oracle alone.
    #[arg(long)]
    alist: Option<PathBuf>,
}

/// Parses arguments, runs the selected mode, and returns the process
/// exit code. Errors print to stderr; results print to stdout.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests print to stdout and succeed;
            // real usage errors print to stderr and exit 1.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

/// CLI-level failures, split by exit code.
#[derive(Debug)]
enum CliError {
    /// Missing or contradictory command-line inputs → exit 1.
    Usage(String),
    /// Invalid values, violated construction invariants, I/O and parse
    /// failures → exit 2.
    Invariant(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Invariant(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Invariant(msg) => write!(out, "{msg}"),
        }
    }
}

impl From<permldpc::Error> for CliError {
    fn from(err: permldpc::Error) -> CliError {
        CliError::Invariant(err.to_string())
    }
}

/// Job settings after merging the config file with flag overrides.
struct Settings {
    mode: Option<String>,
    f: Option<String>,
    a: Option<String>,
    i: Option<String>,
    extend: Option<String>,
    m: Option<String>,
    target_girth: Option<String>,
    max_set_size: Option<String>,
    strategy: Option<String>,
    seed: Option<String>,
    out: Option<PathBuf>,
    alist: Option<PathBuf>,
}

impl Settings {
    fn assemble(cli: Cli) -> Result<Settings, CliError> {
        let mut file = BTreeMap::new();
        if let Some(path) = &cli.config {
            let text = fs::read_to_string(path).map_err(|err| {
                CliError::Invariant(format!("cannot read config {}: {err}", path.display()))
            })?;
            file = config::parse(&text).map_err(CliError::Invariant)?;
        }
        let entry = |key: &str| file.get(key).cloned();
        Ok(Settings {
            mode: cli.mode.or_else(|| entry("mode")),
            f: cli.f.or_else(|| entry("f")),
            a: cli.a.or_else(|| entry("A")),
            i: cli.i.or_else(|| entry("I")),
            extend: cli.extend.or_else(|| entry("extend")),
            m: cli.m.or_else(|| entry("m")),
            target_girth: cli.target_girth.or_else(|| entry("target-girth")),
            max_set_size: cli.max_set_size.or_else(|| entry("max-set-size")),
            strategy: cli.strategy.or_else(|| entry("strategy")),
            seed: cli.seed.or_else(|| entry("seed")),
            out: cli.out.or_else(|| entry("out").map(PathBuf::from)),
            alist: cli.alist.or_else(|| entry("alist").map(PathBuf::from)),
        })
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    let settings = Settings::assemble(cli)?;
    let mode = settings
        .mode
        .clone()
        .ok_or_else(|| CliError::Usage("missing --mode (build | analyze | search | export)".into()))?;
    match mode.as_str() {
        "build" => cmd_build(&settings),
        "analyze" => cmd_analyze(&settings),
        "search" => cmd_search(&settings),
        "export" => cmd_export(&settings),
        other => Err(CliError::Usage(format!(
            "unknown mode `{other}`; expected build, analyze, search, or export"
        ))),
    }
}

/// Builds the block matrix a job describes: generator, row set, column
/// set, then optional weight-one extension columns.
fn job_matrix(settings: &Settings) -> Result<ProtoMatrix, CliError> {
    let f_text = settings
        .f
        .as_ref()
        .ok_or_else(|| CliError::Usage("missing --f (cycle notation or cycle:<n>)".into()))?;
    let f = parse_generator(f_text)?;
    let m = f.order();
    let a_text = settings
        .a
        .as_ref()
        .ok_or_else(|| CliError::Usage("missing --A (row exponent set)".into()))?;
    let i_text = settings
        .i
        .as_ref()
        .ok_or_else(|| CliError::Usage("missing --I (column exponent set)".into()))?;
    let a = parse_set(a_text, m, "A")?;
    let i = parse_set(i_text, m, "I")?;
    let mut proto = ProtoMatrix::build_regular(f, &a, &i)?;
    if let Some(extend_text) = &settings.extend {
        let additions = parse_extensions(extend_text)?;
        proto = proto.extend_irregular(&additions)?;
    }
    Ok(proto)
}

fn parse_generator(text: &str) -> Result<Permutation, CliError> {
    if let Some(rest) = text.strip_prefix("cycle:") {
        let n: usize = rest.trim().parse().map_err(|_| {
            CliError::Invariant(format!("invalid cycle length `{rest}` in `{text}`"))
        })?;
        if n == 0 {
            return Err(CliError::Invariant("cycle length must be at least 1".into()));
        }
        Ok(Permutation::make_m_cycle(n))
    } else {
        let cycles = CycleNotation::parse(text, None)?;
        Ok(Permutation::from_cycles(&cycles))
    }
}

fn parse_set(text: &str, m: u64, name: &str) -> Result<ResidueSet, CliError> {
    let set = ResidueSet::parse(text, m)?;
    if !set.contains(0) {
        return Err(CliError::Invariant(format!(
            "{name} must contain 0, got {set} (mod {m})"
        )));
    }
    Ok(set)
}

fn parse_extensions(text: &str) -> Result<Vec<(usize, i64)>, CliError> {
    let mut additions = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let Some((row, exp)) = part.split_once(':') else {
            return Err(CliError::Invariant(format!(
                "invalid extension `{part}`: expected row:exponent"
            )));
        };
        let row = row.trim().parse::<usize>().map_err(|_| {
            CliError::Invariant(format!("invalid extension row in `{part}`"))
        })?;
        let exp = exp.trim().parse::<i64>().map_err(|_| {
            CliError::Invariant(format!("invalid extension exponent in `{part}`"))
        })?;
        additions.push((row, exp));
    }
    if additions.is_empty() {
        return Err(CliError::Invariant(
            "--extend given but lists no row:exponent pairs".into(),
        ));
    }
    Ok(additions)
}

fn parse_scalar<T: std::str::FromStr>(text: &str, name: &str) -> Result<T, CliError> {
    text.trim()
        .parse()
        .map_err(|_| CliError::Invariant(format!("invalid {name} value `{text}`")))
}

fn girth_text(girth: Option<usize>) -> String {
    match girth {
        Some(g) => g.to_string(),
        None => "infinity".into(),
    }
}

/// Appends `.ext` to a path without clobbering any existing extension.
fn path_with_suffix(base: &Path, ext: &str) -> PathBuf {
    let mut os = base.as_os_str().to_os_string();
    os.push(format!(".{ext}"));
    PathBuf::from(os)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|err| CliError::Invariant(format!("cannot write {}: {err}", path.display())))
}

fn cmd_build(settings: &Settings) -> Result<i32, CliError> {
    let proto = job_matrix(settings)?;
    let out = settings.out.as_ref().ok_or_else(|| {
        CliError::Usage("missing --out (path prefix for the .proto and .alist files)".into())
    })?;
    let h = proto.expand();
    let n = h.cols();
    let k = n - h.gf2_rank();
    println!("n={n} k={k} rate={k}/{n}");
    let proto_path = path_with_suffix(out, "proto");
    let alist_path = path_with_suffix(out, "alist");
    write_file(&proto_path, &proto.to_string())?;
    write_file(&alist_path, &to_alist(&h))?;
    println!("wrote {}", proto_path.display());
    println!("wrote {}", alist_path.display());
    Ok(0)
}

fn cmd_analyze(settings: &Settings) -> Result<i32, CliError> {
    if let Some(path) = &settings.alist {
        let text = fs::read_to_string(path).map_err(|err| {
            CliError::Invariant(format!("cannot read {}: {err}", path.display()))
        })?;
        let h = from_alist(&text)?;
        println!("oracle girth: {}", girth_text(oracle::girth(&h)));
        return Ok(0);
    }
    let proto = job_matrix(settings)?;
    let report = classify(&proto);
    let oracle_girth = oracle::girth(&proto.expand());
    print!("{report}");
    println!("oracle girth: {}", girth_text(oracle_girth));
    let agree = report.girth == oracle_girth;
    println!("agreement: {}", if agree { "yes" } else { "no" });
    Ok(if agree { 0 } else { 3 })
}

fn cmd_search(settings: &Settings) -> Result<i32, CliError> {
    // The modulus comes from --m, from the order of --f, or both when
    // they agree.
    let f = match (&settings.f, &settings.m) {
        (Some(f_text), maybe_m) => {
            let f = parse_generator(f_text)?;
            if let Some(m_text) = maybe_m {
                let m: u64 = parse_scalar(m_text, "m")?;
                if m != f.order() {
                    return Err(CliError::Invariant(format!(
                        "--m {m} conflicts with the order {} of --f",
                        f.order()
                    )));
                }
            }
            f
        }
        (None, Some(m_text)) => {
            let m: u64 = parse_scalar(m_text, "m")?;
            if m == 0 {
                return Err(CliError::Invariant("m must be at least 1".into()));
            }
            Permutation::make_m_cycle(m as usize)
        }
        (None, None) => {
            return Err(CliError::Usage("search needs --m or --f".into()));
        }
    };
    let m = f.order();

    let target_text = settings
        .target_girth
        .as_ref()
        .ok_or_else(|| CliError::Usage("missing --target-girth (6, 8, or 12)".into()))?;
    let target_girth: usize = parse_scalar(target_text, "target-girth")?;
    if !matches!(target_girth, 6 | 8 | 12) {
        return Err(CliError::Invariant(format!(
            "target girth must be 6, 8, or 12, got {target_girth}"
        )));
    }

    let max_set_size: usize = match &settings.max_set_size {
        Some(text) => parse_scalar(text, "max-set-size")?,
        None => 5,
    };
    if max_set_size == 0 {
        return Err(CliError::Invariant("max-set-size must be at least 1".into()));
    }

    let strategy_text = settings.strategy.as_deref().unwrap_or("greedy_b2");
    let strategy = Strategy::parse(strategy_text).ok_or_else(|| {
        CliError::Invariant(format!(
            "unknown strategy `{strategy_text}`; expected greedy_b2, exhaustive, or random"
        ))
    })?;
    if strategy == Strategy::GreedyB2 && max_set_size > 63 {
        return Err(CliError::Invariant(
            "greedy_b2 supports max-set-size up to 63".into(),
        ));
    }

    let seed: u64 = match &settings.seed {
        Some(text) => parse_scalar(text, "seed")?,
        None => 0,
    };

    let a = match &settings.a {
        Some(text) => parse_set(text, m, "A")?,
        None => {
            let default: &[i64] = if m >= 2 { &[0, 1] } else { &[0] };
            ResidueSet::new(m, default.iter().copied())?
        }
    };

    let spec = SearchSpec {
        target_girth,
        max_set_size,
        strategy,
        seed,
    };
    let outcome = search::run_search(&f, &a, &spec)?;
    for note in &outcome.notes {
        println!("note: {note}");
    }
    for candidate in &outcome.candidates {
        println!(
            "candidate: A={a} I={} n={} k={} rate={}/{} girth={}",
            candidate.set,
            candidate.length,
            candidate.dimension,
            candidate.dimension,
            candidate.length,
            girth_text(candidate.girth)
        );
    }
    Ok(0)
}

fn cmd_export(settings: &Settings) -> Result<i32, CliError> {
    let proto = job_matrix(settings)?;
    let out = settings
        .out
        .as_ref()
        .ok_or_else(|| CliError::Usage("missing --out (alist file path)".into()))?;
    write_file(out, &to_alist(&proto.expand()))?;
    println!("wrote {}", out.display());
    Ok(0)
}
