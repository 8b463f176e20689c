//! Permutation algebra on `Z_n`.
//!
//! A [`Permutation`] is a bijection on `{0, 1, …, n-1}` stored as an image
//! table. This module supplies the group operations (composition, powers,
//! inverse), the order, fixed-point and derangement queries, disjoint-cycle
//! constructors, and the text cycle notation used by the CLI.
//!
//! Symbols are always 0-based. Where a source writes a cycle on symbols
//! `1..=n`, symbol `n` is taken to mean `0`.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{0, …, n-1}`, stored as its image table.
///
/// `image[x]` is the value the permutation sends `x` to. The table is
/// validated to be a bijection at every construction site, and `n ≥ 1`.
///
/// # Examples
///
/// ```
/// use permldpc::perm::Permutation;
///
/// let f = Permutation::make_m_cycle(5); // x ↦ x+1 (mod 5)
/// assert_eq!(f.apply(4), 0);
/// assert_eq!(f.order(), 5);
/// assert!(f.is_derangement());
/// ```
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// The identity on `{0, …, n-1}`.
    ///
    /// # Panics
    ///
    /// Panics if `n == 0`; the domain must be nonempty.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutation domain must be nonempty");
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// The full cycle `x ↦ x+1 (mod n)`, the canonical order-`n` generator.
    ///
    /// # Panics
    ///
    /// Panics if `n == 0`.
    pub fn make_m_cycle(n: usize) -> Self {
        assert!(n >= 1, "permutation domain must be nonempty");
        Permutation {
            image: (0..n).map(|x| (x + 1) % n).collect(),
        }
    }

    /// Builds a permutation from an explicit image table.
    ///
    /// Fails unless the table is a nonempty bijection on `0..len`.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::InvalidImage("empty image table".into()));
        }
        let mut seen = vec![false; n];
        for (x, &y) in image.iter().enumerate() {
            if y >= n {
                return Err(Error::InvalidImage(format!(
                    "image[{x}] = {y} is outside 0..{n}"
                )));
            }
            if seen[y] {
                return Err(Error::InvalidImage(format!("value {y} appears twice")));
            }
            seen[y] = true;
        }
        Ok(Permutation { image })
    }

    /// Builds the permutation whose disjoint-cycle factorization is `c`.
    ///
    /// Fixed points are the symbols omitted from every cycle.
    pub fn from_cycles(c: &CycleNotation) -> Self {
        let mut image: Vec<usize> = (0..c.n).collect();
        for cycle in &c.cycles {
            for w in 0..cycle.len() {
                image[cycle[w]] = cycle[(w + 1) % cycle.len()];
            }
        }
        Permutation { image }
    }

    /// Domain size `n`.
    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// Applies the permutation to one point.
    ///
    /// # Panics
    ///
    /// Panics if `x ≥ n`.
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// The raw image table.
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Composition `self ∘ other`: the map `x ↦ self(other(x))`.
    ///
    /// Fails when the domain sizes differ.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DomainSizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            image: other.image.iter().map(|&y| self.image[y]).collect(),
        })
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut image = vec![0usize; self.n()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y] = x;
        }
        Permutation { image }
    }

    /// The `k`-th power. `k` may be negative or exceed the order; it is
    /// reduced modulo the order first, then evaluated by repeated squaring
    /// on image tables (`O(n log k)`).
    pub fn power(&self, k: i64) -> Self {
        let m = self.order_u128();
        let mut e = (k as i128).rem_euclid(m as i128) as u128;
        // Square-and-multiply over image-table composition.
        let mut acc = Permutation::identity(self.n());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base).expect("equal domain sizes");
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base).expect("equal domain sizes");
            }
        }
        acc
    }

    /// The order: the least `m ≥ 1` with `f^m = id`, i.e. the lcm of the
    /// disjoint-cycle lengths.
    ///
    /// # Panics
    ///
    /// Panics if the lcm exceeds `u64::MAX` (requires a domain of several
    /// hundred points; far outside this crate's working range).
    pub fn order(&self) -> u64 {
        let m = self.order_u128();
        u64::try_from(m).expect("permutation order exceeds u64")
    }

    fn order_u128(&self) -> u128 {
        self.orbit_lists()
            .iter()
            .map(|orbit| orbit.len() as u128)
            .fold(1u128, num_integer::lcm)
    }

    /// True when the permutation has no fixed point.
    pub fn is_derangement(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x != y)
    }

    /// The fixed points `{ x : f(x) = x }`, ascending.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.image
            .iter()
            .enumerate()
            .filter(|&(x, &y)| x == y)
            .map(|(x, _)| x)
            .collect()
    }

    /// Disjoint cycles of length ≥ 2 in canonical form: each cycle starts at
    /// its least symbol, cycles sorted by that symbol. Fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.orbit_lists()
            .into_iter()
            .filter(|orbit| orbit.len() >= 2)
            .collect()
    }

    /// All orbits (including singletons), each starting at its least symbol
    /// and listed in traversal order `x, f(x), f²(x), …`; orbits sorted by
    /// least symbol.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        self.orbit_lists()
    }

    fn orbit_lists(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut x = self.image[start];
            while x != start {
                seen[x] = true;
                orbit.push(x);
                x = self.image[x];
            }
            out.push(orbit);
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Canonical cycle notation, e.g. `(0 1 2)(3 4)`; the identity prints as `id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, sym) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{sym}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A disjoint-cycle description: a list of cycles over distinct symbols in
/// `0..n`, each of length ≥ 2, with fixed points omitted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleNotation {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleNotation {
    /// Validates and wraps a cycle list: symbols distinct across all cycles,
    /// all `< n`, every cycle of length ≥ 2, and `n ≥ 1`.
    pub fn new(cycles: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedCycles("domain must be nonempty".into()));
        }
        let mut seen = vec![false; n];
        for cycle in &cycles {
            if cycle.len() < 2 {
                return Err(Error::MalformedCycles(format!(
                    "cycle of length {} (fixed points are omitted, not written)",
                    cycle.len()
                )));
            }
            for &sym in cycle {
                if sym >= n {
                    return Err(Error::MalformedCycles(format!(
                        "symbol {sym} is outside 0..{n}"
                    )));
                }
                if seen[sym] {
                    return Err(Error::MalformedCycles(format!("repeated symbol {sym}")));
                }
                seen[sym] = true;
            }
        }
        Ok(CycleNotation { n, cycles })
    }

    /// Parses text cycle notation: `(0 1 2)(3 4)` with whitespace-separated
    /// symbols, or `id` for the identity.
    ///
    /// When `n` is `None` the domain size is inferred as the largest symbol
    /// plus one; `id` then has no inferable size and is rejected.
    pub fn parse(s: &str, n: Option<usize>) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed == "id" {
            return match n {
                Some(n) => CycleNotation::new(Vec::new(), n),
                None => Err(Error::MalformedCycles(
                    "`id` needs an explicit domain size".into(),
                )),
            };
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut token = String::new();
        let flush =
            |token: &mut String, current: &mut Option<Vec<usize>>| -> Result<()> {
                if token.is_empty() {
                    return Ok(());
                }
                let sym: usize = token.parse().map_err(|_| {
                    Error::MalformedCycles(format!("bad symbol `{token}`"))
                })?;
                token.clear();
                match current {
                    Some(cycle) => {
                        cycle.push(sym);
                        Ok(())
                    }
                    None => Err(Error::MalformedCycles(format!(
                        "symbol {sym} outside parentheses"
                    ))),
                }
            };
        for ch in trimmed.chars() {
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(Error::MalformedCycles("nested `(`".into()));
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    flush(&mut token, &mut current)?;
                    match current.take() {
                        Some(cycle) => cycles.push(cycle),
                        None => return Err(Error::MalformedCycles("unmatched `)`".into())),
                    }
                }
                c if c.is_whitespace() || c == ',' => flush(&mut token, &mut current)?,
                c if c.is_ascii_digit() => token.push(c),
                c => {
                    return Err(Error::MalformedCycles(format!("unexpected character `{c}`")))
                }
            }
        }
        if current.is_some() {
            return Err(Error::MalformedCycles("unmatched `(`".into()));
        }
        if !token.is_empty() {
            return Err(Error::MalformedCycles(format!(
                "trailing symbol `{token}` outside parentheses"
            )));
        }
        if cycles.is_empty() {
            return Err(Error::MalformedCycles("no cycles found".into()));
        }
        let inferred = cycles
            .iter()
            .flat_map(|c| c.iter())
            .copied()
            .max()
            .map(|max| max + 1)
            .unwrap_or(0);
        let n = match n {
            Some(n) if n >= inferred => n,
            Some(n) => {
                return Err(Error::MalformedCycles(format!(
                    "symbol {} is outside 0..{n}",
                    inferred - 1
                )))
            }
            None => inferred,
        };
        CycleNotation::new(cycles, n)
    }

    /// Domain size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The cycle lists.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }
}

impl fmt::Display for CycleNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "id");
        }
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (i, sym) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{sym}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Orbit decomposition of one permutation, prepared once so that arbitrary
/// powers can be evaluated pointwise in `O(1)` and fixed-point questions
/// about `f^e` answered without composing permutations.
///
/// `f^e(x)` is the element `e` steps further along the orbit of `x`, and
/// `f^e` has a fixed point exactly when some orbit length divides `e`.
#[derive(Clone, Debug)]
pub(crate) struct Orbits {
    /// x → (orbit id, position of x inside that orbit).
    place: Vec<(usize, usize)>,
    orbits: Vec<Vec<usize>>,
    /// Distinct orbit lengths, ascending.
    lengths: Vec<u64>,
}

impl Orbits {
    pub(crate) fn new(f: &Permutation) -> Self {
        let orbits = f.orbits();
        let mut place = vec![(0usize, 0usize); f.n()];
        for (id, orbit) in orbits.iter().enumerate() {
            for (pos, &x) in orbit.iter().enumerate() {
                place[x] = (id, pos);
            }
        }
        let mut lengths: Vec<u64> = orbits.iter().map(|o| o.len() as u64).collect();
        lengths.sort_unstable();
        lengths.dedup();
        Orbits {
            place,
            orbits,
            lengths,
        }
    }

    /// `f^e(x)` in constant time.
    pub(crate) fn apply_power(&self, e: u64, x: usize) -> usize {
        let (id, pos) = self.place[x];
        let orbit = &self.orbits[id];
        let len = orbit.len() as u64;
        orbit[((pos as u64 + e % len) % len) as usize]
    }

    /// True when `f^e` has a fixed point: some orbit length divides `e`.
    pub(crate) fn fix_exists(&self, e: u64) -> bool {
        self.lengths.iter().any(|&len| e % len == 0)
    }

    /// Shortest orbit length.
    pub(crate) fn min_orbit_len(&self) -> u64 {
        self.lengths[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
        let mut image: Vec<usize> = (0..n).collect();
        // Fisher–Yates.
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            image.swap(i, j);
        }
        Permutation::from_image(image).unwrap()
    }

    /// The 26-symbol permutation (0 1 … 12)(13 14 … 25): two 13-cycles.
    fn two_thirteen_cycles() -> Permutation {
        let c = CycleNotation::new(
            vec![(0..13).collect(), (13..26).collect()],
            26,
        )
        .unwrap();
        Permutation::from_cycles(&c)
    }

    #[test]
    fn compose_identities() {
        let id = Permutation::identity(5);
        assert_eq!(id.compose(&id).unwrap(), id);
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let f = Permutation::make_m_cycle(17);
        assert_eq!(f.compose(&f.inverse()).unwrap(), Permutation::identity(17));
    }

    #[test]
    fn compose_three_cycle_with_itself() {
        // (0 1 2) ∘ (0 1 2) = (0 2 1) on n = 3.
        let c = CycleNotation::parse("(0 1 2)", None).unwrap();
        let f = Permutation::from_cycles(&c);
        let expected = Permutation::from_cycles(&CycleNotation::parse("(0 2 1)", None).unwrap());
        assert_eq!(f.compose(&f).unwrap(), expected);
    }

    #[test]
    fn compose_size_mismatch_errors() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(
            a.compose(&b),
            Err(Error::DomainSizeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn power_at_order_is_identity() {
        let f = Permutation::make_m_cycle(17);
        assert_eq!(f.power(17), Permutation::identity(17));
        assert_eq!(f.power(1), f);
    }

    #[test]
    fn power_of_two_thirteen_cycles() {
        let f = two_thirteen_cycles();
        assert_eq!(f.order(), 13);
        assert_eq!(f.power(13), Permutation::identity(26));
        assert_ne!(f.power(12), Permutation::identity(26));
    }

    #[test]
    fn negative_powers_are_inverses() {
        let f = two_thirteen_cycles();
        assert_eq!(f.power(-3), f.power(3).inverse());
        assert_eq!(f.power(-1).compose(&f).unwrap(), Permutation::identity(26));
    }

    #[test]
    fn order_examples() {
        assert_eq!(Permutation::identity(10).order(), 1);
        assert_eq!(two_thirteen_cycles().order(), 13);
        assert_eq!(Permutation::make_m_cycle(29).order(), 29);
    }

    #[test]
    fn derangement_examples() {
        assert!(!Permutation::identity(4).is_derangement());
        let f = Permutation::make_m_cycle(11);
        for i in 1..11 {
            assert!(f.power(i).is_derangement(), "f^{i} must be a derangement");
        }
        assert!(!f.power(0).is_derangement());
        // (0 1 2)(3 4) cubed fixes 0, 1, 2.
        let g = Permutation::from_cycles(
            &CycleNotation::new(vec![vec![0, 1, 2], vec![3, 4]], 5).unwrap(),
        );
        let g3 = g.power(3);
        assert!(!g3.is_derangement());
        assert_eq!(g3.fixed_points(), vec![0, 1, 2]);
    }

    #[test]
    fn fixed_point_examples() {
        assert_eq!(Permutation::identity(4).fixed_points(), vec![0, 1, 2, 3]);
        assert!(Permutation::make_m_cycle(9).fixed_points().is_empty());
        let f = Permutation::from_cycles(
            &CycleNotation::new(vec![vec![0, 1, 2], vec![3, 4]], 6).unwrap(),
        );
        assert_eq!(f.fixed_points(), vec![5]);
    }

    #[test]
    fn from_cycles_examples() {
        let id = Permutation::from_cycles(&CycleNotation::new(vec![], 5).unwrap());
        assert_eq!(id, Permutation::identity(5));

        let f = Permutation::make_m_cycle(17);
        assert_eq!(f.order(), 17);
        assert!(f.is_derangement());

        let g = two_thirteen_cycles();
        assert_eq!(g.apply(12), 0);
        assert_eq!(g.apply(25), 13);
        assert_eq!(g.apply(5), 6);
    }

    #[test]
    fn cycle_notation_rejects_bad_input() {
        assert!(matches!(
            CycleNotation::new(vec![vec![0, 1, 0]], 3),
            Err(Error::MalformedCycles(_))
        ));
        assert!(matches!(
            CycleNotation::new(vec![vec![0, 1], vec![1, 2]], 3),
            Err(Error::MalformedCycles(_))
        ));
        assert!(matches!(
            CycleNotation::new(vec![vec![0, 5]], 3),
            Err(Error::MalformedCycles(_))
        ));
        assert!(matches!(
            CycleNotation::new(vec![vec![0]], 3),
            Err(Error::MalformedCycles(_))
        ));
    }

    #[test]
    fn parse_and_print_round_trip() {
        let texts = ["(0 1 2)(3 4)", "(0 5)(1 3)(2 4)", "(0 1 2 3 4 5 6)"];
        for text in texts {
            let c = CycleNotation::parse(text, None).unwrap();
            let f = Permutation::from_cycles(&c);
            assert_eq!(f.to_string(), text);
            let reparsed = CycleNotation::parse(&f.to_string(), Some(f.n())).unwrap();
            assert_eq!(Permutation::from_cycles(&reparsed), f);
        }
        assert_eq!(Permutation::identity(6).to_string(), "id");
        let id = CycleNotation::parse("id", Some(6)).unwrap();
        assert_eq!(Permutation::from_cycles(&id), Permutation::identity(6));
    }

    #[test]
    fn parse_rejects_bad_text() {
        assert!(CycleNotation::parse("id", None).is_err());
        assert!(CycleNotation::parse("(0 1", None).is_err());
        assert!(CycleNotation::parse("0 1)", None).is_err());
        assert!(CycleNotation::parse("(0 1) 2", None).is_err());
        assert!(CycleNotation::parse("(0 x)", None).is_err());
        assert!(CycleNotation::parse("", None).is_err());
        assert!(CycleNotation::parse("(0 1 2)", Some(2)).is_err());
    }

    #[test]
    fn power_reduces_mod_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
        for _ in 0..50 {
            let n = rng.gen_range(1..=30);
            let f = random_perm(&mut rng, n);
            let m = f.order() as i64;
            let k = rng.gen_range(-3 * m..3 * m + 1);
            assert_eq!(f.power(k), f.power(k.rem_euclid(m)));
            assert_eq!(f.power(k + m), f.power(k));
        }
    }

    #[test]
    fn compose_inverse_is_identity_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
        for _ in 0..50 {
            let n = rng.gen_range(1..=40);
            let f = random_perm(&mut rng, n);
            assert_eq!(f.compose(&f.inverse()).unwrap(), Permutation::identity(n));
            assert_eq!(f.inverse(), f.power(f.order() as i64 - 1));
        }
    }

    #[test]
    fn derangement_powers_coprime_to_order() {
        // If f is a derangement and gcd(i, order) = 1 then f^i is a derangement.
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
        let mut checked = 0usize;
        while checked < 40 {
            let n = rng.gen_range(2..=50);
            let f = random_perm(&mut rng, n);
            if !f.is_derangement() {
                continue;
            }
            let m = f.order();
            let i = rng.gen_range(1..=3 * m) % m;
            if num_integer::gcd(i, m) != 1 {
                continue;
            }
            assert!(
                f.power(i as i64).is_derangement(),
                "f = {f}, i = {i}, order = {m}"
            );
            checked += 1;
        }
    }

    #[test]
    fn fixed_points_carry_to_all_powers() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
        for _ in 0..40 {
            let n = rng.gen_range(1..=40);
            let f = random_perm(&mut rng, n);
            let base = f.fixed_points();
            for i in 1..=6i64 {
                let fi = f.power(i);
                for &x in &base {
                    assert_eq!(fi.apply(x), x);
                }
            }
        }
    }

    #[test]
    fn order_matches_iterated_composition() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
        for _ in 0..30 {
            let n = rng.gen_range(1..=50);
            let f = random_perm(&mut rng, n);
            let id = Permutation::identity(n);
            let mut g = f.clone();
            let mut steps = 1u64;
            while g != id {
                g = g.compose(&f).unwrap();
                steps += 1;
            }
            assert_eq!(f.order(), steps);
        }
    }

    #[test]
    fn orbit_table_matches_direct_powers() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
        for _ in 0..30 {
            let n = rng.gen_range(1..=30);
            let f = random_perm(&mut rng, n);
            let orbits = Orbits::new(&f);
            let m = f.order();
            for e in 0..m.min(40) {
                let fe = f.power(e as i64);
                for x in 0..n {
                    assert_eq!(orbits.apply_power(e, x), fe.apply(x));
                }
                assert_eq!(orbits.fix_exists(e), !fe.is_derangement());
            }
            assert_eq!(
                orbits.min_orbit_len(),
                f.orbits().iter().map(|o| o.len() as u64).min().unwrap()
            );
        }
    }
}
