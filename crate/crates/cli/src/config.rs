//! Flat `key=value` job-file parser.
//!
//! One entry per line; `#` starts a comment; blank lines are ignored.
//! Keys mirror the command-line flag names, and flags override file
//! entries, so a job file plus ad-hoc overrides scripts cleanly.

use std::collections::BTreeMap;

/// Every key a job file may set. Mirrors the long flag names.
pub const KNOWN_KEYS: &[&str] = &[
    "mode",
    "f",
    "A",
    "I",
    "extend",
    "out",
    "alist",
    "m",
    "target-girth",
    "max-set-size",
    "strategy",
    "seed",
];

/// Parses a job file into a key → value map.
///
/// Rejects malformed lines, unknown keys, empty values, and duplicate
/// keys, naming the offending line in the message.
pub fn parse(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut map = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let Some((key, value)) = body.split_once('=') else {
            return Err(format!(
                "config line {line}: expected key=value, found `{body}`"
            ));
        };
        let key = key.trim();
        let value = value.trim();
        if !KNOWN_KEYS.contains(&key) {
            return Err(format!("config line {line}: unknown key `{key}`"));
        }
        if value.is_empty() {
            return Err(format!("config line {line}: empty value for `{key}`"));
        }
        if map.insert(key.to_string(), value.to_string()).is_some() {
            return Err(format!("config line {line}: duplicate key `{key}`"));
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_entries_comments_and_blanks() {
        let text = "# job\nmode = analyze\nf=cycle:29\n\nA = {0,1}  # rows\nI={0,1,4,6,13}\n";
        let map = parse(text).unwrap();
        assert_eq!(map.get("mode").unwrap(), "analyze");
        assert_eq!(map.get("f").unwrap(), "cycle:29");
        assert_eq!(map.get("A").unwrap(), "{0,1}");
        assert_eq!(map.get("I").unwrap(), "{0,1,4,6,13}");
        assert_eq!(map.len(), 4);
    }

    #[test]
    fn rejects_bad_lines_with_line_numbers() {
        let err = parse("mode=build\nnot a pair\n").unwrap_err();
        assert!(err.contains("line 2"), "{err}");
        let err = parse("mode=build\nmode=search\n").unwrap_err();
        assert!(err.contains("line 2") && err.contains("duplicate"), "{err}");
        let err = parse("shape=wide\n").unwrap_err();
        assert!(err.contains("unknown key `shape`"), "{err}");
        let err = parse("out=\n").unwrap_err();
        assert!(err.contains("empty value"), "{err}");
    }
}
