//! Modular set arithmetic for exponent sets.
//!
//! The exponent sets driving the block constructions live in `Z_m`. This
//! module provides their difference/sum/product sets, the Sidon `B_t`
//! property and its three equivalent characterizations for `t = 2`, the
//! doubling-based greedy `B₂` constructor, and the lazy enumeration of the
//! cyclically adjacent-distinct tuples used by the cycle criteria.

use std::fmt;

use crate::error::{Error, Result};

/// A set of residues modulo `m`: strictly increasing elements, all `< m`.
///
/// Construction reduces arbitrary signed integers modulo `m` and rejects
/// inputs that collapse onto the same residue, so a `ResidueSet` is always a
/// genuine set.
///
/// # Examples
///
/// ```
/// use permldpc::sets::ResidueSet;
///
/// let a = ResidueSet::new(17, [0, 1, -1]).unwrap();
/// assert_eq!(a.elements(), &[0, 1, 16]);
/// assert!(a.contains(16));
/// ```
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidueSet {
    modulus: u64,
    elements: Vec<u64>,
}

impl ResidueSet {
    /// Builds a set from signed integers, reducing each modulo `modulus`.
    ///
    /// Fails when `modulus == 0` or when two inputs reduce to the same
    /// residue (the caller almost certainly did not mean that).
    pub fn new(modulus: u64, elements: impl IntoIterator<Item = i64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidResidueSet("modulus must be positive".into()));
        }
        let mut reduced: Vec<u64> = Vec::new();
        for raw in elements {
            let r = raw.rem_euclid(modulus as i64) as u64;
            reduced.push(r);
        }
        reduced.sort_unstable();
        for w in reduced.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidResidueSet(format!(
                    "duplicate residue {} (mod {modulus})",
                    w[0]
                )));
            }
        }
        Ok(ResidueSet {
            modulus,
            elements: reduced,
        })
    }

    /// Internal builder for computed sets: sorts and deduplicates.
    fn from_computed(modulus: u64, mut elements: Vec<u64>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        ResidueSet { modulus, elements }
    }

    /// Parses a set literal such as `{0, 1, 4, 6, 13}` or `{0, 1, -1}`.
    /// Negative entries are reduced modulo `modulus`.
    pub fn parse(text: &str, modulus: u64) -> Result<Self> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| {
                Error::InvalidResidueSet(format!("`{trimmed}` is not a braced set literal"))
            })?;
        let mut values = Vec::new();
        for token in inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let v: i64 = token.parse().map_err(|_| {
                Error::InvalidResidueSet(format!("bad set element `{token}`"))
            })?;
            values.push(v);
        }
        ResidueSet::new(modulus, values)
    }

    /// The modulus `m`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The residues, ascending.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// True when the set is empty.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Membership test.
    pub fn contains(&self, r: u64) -> bool {
        self.elements.binary_search(&r).is_ok()
    }

    /// The difference set `B_Δ = { a − b : a, b ∈ B, a ≠ b }` (mod m).
    ///
    /// Never contains 0: distinct residues cannot differ by a multiple of m.
    pub fn difference_set(&self) -> ResidueSet {
        let m = self.modulus;
        let mut out = Vec::new();
        for &a in &self.elements {
            for &b in &self.elements {
                if a != b {
                    out.push(sub_mod(a, b, m));
                }
            }
        }
        ResidueSet::from_computed(m, out)
    }

    /// The sum set `B_+ = { a + b : a, b ∈ B }` (mod m), with `a = b` allowed.
    pub fn sum_set(&self) -> ResidueSet {
        let m = self.modulus;
        let mut out = Vec::new();
        for (i, &a) in self.elements.iter().enumerate() {
            for &b in &self.elements[i..] {
                out.push(add_mod(a, b, m));
            }
        }
        ResidueSet::from_computed(m, out)
    }

    /// The elementwise product set `{ a·b mod m : a ∈ self, b ∈ other }`.
    ///
    /// Fails when the moduli differ.
    pub fn product_set(&self, other: &ResidueSet) -> Result<ResidueSet> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        let m = self.modulus;
        let mut out = Vec::new();
        for &a in &self.elements {
            for &b in &other.elements {
                out.push(mul_mod(a, b, m));
            }
        }
        Ok(ResidueSet::from_computed(m, out))
    }

    /// True when every multiset of `t` elements has a distinct sum mod m
    /// (the Sidon `B_t` property).
    ///
    /// `t = 2` runs the `O(|B|²)` pair-sum count; general `t` enumerates all
    /// multisets.
    ///
    /// # Panics
    ///
    /// Panics when the multiset count for a general `t` exceeds 10⁷; such
    /// parameters appear in definitions, not in any construction this crate
    /// performs.
    pub fn is_bt_set(&self, t: u32) -> bool {
        assert!(t >= 1, "t must be positive");
        let m = self.modulus;
        if t == 1 {
            return true; // a set already has distinct 1-element sums
        }
        if t == 2 {
            let mut sums = Vec::with_capacity(self.len() * (self.len() + 1) / 2);
            for (i, &a) in self.elements.iter().enumerate() {
                for &b in &self.elements[i..] {
                    sums.push(add_mod(a, b, m));
                }
            }
            sums.sort_unstable();
            return sums.windows(2).all(|w| w[0] != w[1]);
        }
        let n = self.len();
        if n == 0 {
            return true;
        }
        let count = multiset_count(n as u128, t);
        assert!(
            count <= 10_000_000,
            "B_t check over {count} multisets exceeds the supported bound"
        );
        // Odometer over nondecreasing index tuples = multisets.
        let mut sums = Vec::with_capacity(count as usize);
        let mut idx = vec![0usize; t as usize];
        'tuples: loop {
            let sum = idx
                .iter()
                .fold(0u64, |acc, &i| add_mod(acc, self.elements[i], m));
            sums.push(sum);
            let mut pos = t as usize;
            loop {
                if pos == 0 {
                    break 'tuples; // every position saturated: done
                }
                pos -= 1;
                if idx[pos] + 1 < n {
                    idx[pos] += 1;
                    let v = idx[pos];
                    for p in pos + 1..t as usize {
                        idx[p] = v;
                    }
                    break;
                }
            }
        }
        debug_assert_eq!(sums.len() as u128, count);
        sums.sort_unstable();
        sums.windows(2).all(|w| w[0] != w[1])
    }

    /// Differences of sums over distinct 2-multisets: the set
    /// `{ s(M) − s(M′) : M ≠ M′ two-element multisets over B }` (mod m).
    ///
    /// Unlike [`difference_set`](Self::difference_set) this *can* contain 0 —
    /// exactly when two distinct 2-multisets share a sum, i.e. exactly when
    /// the set is not `B₂`.
    pub fn paired_sum_differences(&self) -> ResidueSet {
        let m = self.modulus;
        let mut sums = Vec::with_capacity(self.len() * (self.len() + 1) / 2);
        for (i, &a) in self.elements.iter().enumerate() {
            for &b in &self.elements[i..] {
                sums.push(add_mod(a, b, m));
            }
        }
        let mut out = Vec::new();
        for (i, &s) in sums.iter().enumerate() {
            for (j, &t) in sums.iter().enumerate() {
                if i != j {
                    out.push(sub_mod(s, t, m));
                }
            }
        }
        ResidueSet::from_computed(m, out)
    }

    /// Evaluates, independently, the three equivalent `B₂` characterizations:
    ///
    /// 1. every 2-multiset has a distinct sum;
    /// 2. `|B_+| = (|B|² + |B|)/2`;
    /// 3. `0 ∉ (B_+)_Δ`, the pairwise-sum differences of
    ///    [`paired_sum_differences`](Self::paired_sum_differences).
    ///
    /// All three booleans are returned so tests can confirm they agree.
    pub fn b2_equivalences(&self) -> (bool, bool, bool) {
        let s = self.len();
        let first = self.is_bt_set(2);
        let second = self.sum_set().len() == (s * s + s) / 2;
        let third = !self.paired_sum_differences().contains(0);
        (first, second, third)
    }
}

impl fmt::Display for ResidueSet {
    /// Canonical set literal, e.g. `{0, 1, 4, 6, 13}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + m as u128 - b as u128) % m as u128) as u64
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Number of t-element multisets over an n-element set: C(n+t-1, t).
fn multiset_count(n: u128, t: u32) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut num = 1u128;
    for k in 0..t as u128 {
        num = num.saturating_mul(n + k) / (k + 1);
    }
    num
}

/// The doubling construction `i_1 = 0, i_l = 1 + 2·i_{l-1}`, i.e.
/// `i_l = 2^{l-1} − 1`.
///
/// Returns the set `{0, 1, 3, 7, 15, …}` of `count` elements together with
/// the minimal safe odd modulus: the smallest odd `m` exceeding every
/// pairwise sum (`2^count − 1`), from which the set is `B₂` for **every**
/// odd `m` at least that large. The returned set carries that minimal
/// modulus; reduce the same elements into a larger modulus as needed.
///
/// # Panics
///
/// Panics when `count` is 0 or large enough to overflow `u64` (count > 63).
pub fn greedy_b2(count: u32) -> (ResidueSet, u64) {
    assert!((1..=63).contains(&count), "count must be in 1..=63");
    let elements: Vec<i64> = (1..=count)
        .map(|l| ((1u64 << (l - 1)) - 1) as i64)
        .collect();
    let min_modulus = (1u64 << count) - 1;
    let set = ResidueSet::new(min_modulus, elements)
        .expect("doubling elements are distinct below the modulus");
    (set, min_modulus)
}

/// Which family a tuple belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SequenceKind {
    /// Member tuples `(a_0, …, a_t)` with cyclically adjacent terms distinct.
    S,
    /// Their difference tuples `(a_0 − a_t, a_1 − a_0, …, a_t − a_{t-1})`.
    D,
}

/// One tuple yielded by [`enumerate_sequences`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExponentSequence {
    modulus: u64,
    terms: Vec<u64>,
    kind: SequenceKind,
}

impl ExponentSequence {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }
}

impl fmt::Display for ExponentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// Lazily enumerates, in lexicographic order, the `(t+1)`-term tuples over
/// `B` whose cyclically adjacent terms differ (`a_i ≠ a_{i+1}` and
/// `a_t ≠ a_0`). For [`SequenceKind::D`] each member tuple is mapped to its
/// difference tuple `(a_0 − a_t, a_1 − a_0, …, a_t − a_{t-1})` mod m, in the
/// same order and without deduplication.
///
/// `|B| ≤ 1` yields nothing: no pair of adjacent terms can differ.
pub fn enumerate_sequences(
    b: &ResidueSet,
    t: usize,
    kind: SequenceKind,
) -> impl Iterator<Item = ExponentSequence> {
    Sequences {
        elements: b.elements().to_vec(),
        modulus: b.modulus(),
        kind,
        idx: Vec::new(),
        len: t + 1,
        done: b.len() < 2 || t == 0,
    }
}

struct Sequences {
    elements: Vec<u64>,
    modulus: u64,
    kind: SequenceKind,
    /// Element indices of the current tuple; empty before the first call.
    idx: Vec<usize>,
    len: usize,
    done: bool,
}

impl Sequences {
    /// Fills positions `from..` with the least indices satisfying the
    /// adjacent-distinct constraint (always possible with ≥ 2 elements).
    fn refill(&mut self, from: usize) {
        for pos in from..self.len {
            let next = if pos > 0 && self.idx[pos - 1] == 0 { 1 } else { 0 };
            if pos < self.idx.len() {
                self.idx[pos] = next;
            } else {
                self.idx.push(next);
            }
        }
    }

    /// Advances to the lexicographically next tuple honoring the chain
    /// constraint (wrap constraint checked by the caller). Returns false when
    /// exhausted.
    fn advance(&mut self) -> bool {
        let n = self.elements.len();
        let mut pos = self.len;
        while pos > 0 {
            pos -= 1;
            let mut cand = self.idx[pos] + 1;
            while cand < n && pos > 0 && cand == self.idx[pos - 1] {
                cand += 1;
            }
            if cand < n {
                self.idx[pos] = cand;
                self.refill(pos + 1);
                return true;
            }
        }
        false
    }

    fn wrap_ok(&self) -> bool {
        self.idx[self.len - 1] != self.idx[0]
    }

    fn emit(&self) -> ExponentSequence {
        let m = self.modulus;
        let values: Vec<u64> = self.idx.iter().map(|&i| self.elements[i]).collect();
        let terms = match self.kind {
            SequenceKind::S => values,
            SequenceKind::D => {
                let t = self.len - 1;
                let mut diffs = Vec::with_capacity(self.len);
                diffs.push(sub_mod(values[0], values[t], m));
                for l in 1..=t {
                    diffs.push(sub_mod(values[l], values[l - 1], m));
                }
                diffs
            }
        };
        ExponentSequence {
            modulus: m,
            terms,
            kind: self.kind,
        }
    }
}

impl Iterator for Sequences {
    type Item = ExponentSequence;

    fn next(&mut self) -> Option<ExponentSequence> {
        if self.done {
            return None;
        }
        loop {
            if self.idx.is_empty() {
                self.refill(0);
            } else if !self.advance() {
                self.done = true;
                return None;
            }
            if self.wrap_ok() {
                return Some(self.emit());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(m: u64, elems: &[i64]) -> ResidueSet {
        ResidueSet::new(m, elems.iter().copied()).unwrap()
    }

    fn random_set(rng: &mut ChaCha8Rng, max_m: u64, max_len: usize) -> ResidueSet {
        loop {
            let m = rng.gen_range(1..=max_m);
            let len = rng.gen_range(0..=max_len.min(m as usize));
            let mut picked = Vec::new();
            let mut tries = 0;
            while picked.len() < len && tries < 200 {
                let v = rng.gen_range(0..m) as i64;
                if !picked.contains(&v) {
                    picked.push(v);
                }
                tries += 1;
            }
            if picked.len() == len {
                return set(m, &picked);
            }
        }
    }

    #[test]
    fn construction_reduces_and_rejects_duplicates() {
        let a = set(17, &[0, 1, -1]);
        assert_eq!(a.elements(), &[0, 1, 16]);
        assert!(matches!(
            ResidueSet::new(13, [0, 1, 14]),
            Err(Error::InvalidResidueSet(_))
        ));
        assert!(matches!(
            ResidueSet::new(0, [0]),
            Err(Error::InvalidResidueSet(_))
        ));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let a = ResidueSet::parse("{0, 1, 4, 6, 13}", 29).unwrap();
        assert_eq!(a.elements(), &[0, 1, 4, 6, 13]);
        assert_eq!(a.to_string(), "{0, 1, 4, 6, 13}");
        let b = ResidueSet::parse("{0,1,-1}", 17).unwrap();
        assert_eq!(b.elements(), &[0, 1, 16]);
        assert!(ResidueSet::parse("0, 1", 7).is_err());
        assert!(ResidueSet::parse("{0, x}", 7).is_err());
        let empty = ResidueSet::parse("{}", 7).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn difference_set_of_singleton_is_empty() {
        assert!(set(7, &[0]).difference_set().is_empty());
    }

    #[test]
    fn difference_set_of_five_element_exponents() {
        // {0,1,4,6,13} has differences ±{1,2,3,4,5,6,7,9,12,13}.
        let m = 29u64;
        let i = set(m, &[0, 1, 4, 6, 13]);
        let expected: Vec<i64> = [1u64, 2, 3, 4, 5, 6, 7, 9, 12, 13]
            .iter()
            .flat_map(|&d| [d as i64, -(d as i64)])
            .collect();
        assert_eq!(i.difference_set(), set(m, &expected));
    }

    #[test]
    fn difference_set_of_eight_element_exponents() {
        // {0,1,4,6,12,10,15,24}: 17 symmetric difference pairs.
        let m = 53u64;
        let i = set(m, &[0, 1, 4, 6, 12, 10, 15, 24]);
        let expected: Vec<i64> = [
            1u64, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 14, 15, 18, 20, 23, 24,
        ]
        .iter()
        .flat_map(|&d| [d as i64, -(d as i64)])
        .collect();
        assert_eq!(expected.len(), 34);
        assert_eq!(i.difference_set(), set(m, &expected));
    }

    #[test]
    fn sum_set_examples() {
        assert_eq!(set(5, &[0]).sum_set(), set(5, &[0]));
        let i = set(29, &[0, 1, 4, 6, 13]);
        assert_eq!(
            i.sum_set(),
            set(29, &[0, 1, 2, 4, 5, 6, 7, 8, 10, 12, 13, 14, 17, 19, 26])
        );
        assert_eq!(set(100, &[0, 1, 2]).sum_set(), set(100, &[0, 1, 2, 3, 4]));
    }

    #[test]
    fn product_set_examples() {
        let b = set(17, &[0, 2, 4, 6, 8]);
        assert_eq!(set(17, &[1]).product_set(&b).unwrap(), b);
        assert_eq!(
            set(17, &[1, -1]).product_set(&set(17, &[3])).unwrap(),
            set(17, &[3, 14])
        );
        // A_Δ · I_Δ for A = {0,1,-1}: A_Δ = {±1, ±2}, so the product is
        // I_Δ ∪ 2I_Δ (recomputed from the definitions).
        let a_delta = set(17, &[0, 1, -1]).difference_set();
        assert_eq!(a_delta, set(17, &[1, -1, 2, -2]));
        let i_delta = b.difference_set();
        let doubled = set(17, &[2]).product_set(&i_delta).unwrap();
        let mut expected: Vec<i64> = i_delta.elements().iter().map(|&x| x as i64).collect();
        expected.extend(doubled.elements().iter().map(|&x| x as i64));
        expected.sort_unstable();
        expected.dedup();
        assert_eq!(
            a_delta.product_set(&i_delta).unwrap(),
            set(17, &expected)
        );
        assert!(matches!(
            set(17, &[1]).product_set(&set(19, &[1])),
            Err(Error::ModulusMismatch { .. })
        ));
    }

    #[test]
    fn bt_examples() {
        assert!(set(7, &[0]).is_bt_set(2));
        assert!(set(7, &[3]).is_bt_set(2));
        assert!(set(29, &[0, 1, 4, 6, 13]).is_bt_set(2));
        assert!(!set(17, &[0, 1, 2, 3, 4]).is_bt_set(2)); // 2+2 = 0+4
        assert!(set(31, &[0, 1, 3, 7, 15]).is_bt_set(2));
    }

    #[test]
    fn bt_general_t_matches_bruteforce() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1001);
        for _ in 0..40 {
            let b = random_set(&mut rng, 40, 5);
            let m = b.modulus();
            let t = rng.gen_range(1..=3u32);
            // Brute force: nondecreasing tuples via nested loops.
            let elems = b.elements();
            let mut sums = Vec::new();
            let n = elems.len();
            match t {
                1 => {
                    for i in 0..n {
                        sums.push(elems[i] % m);
                    }
                }
                2 => {
                    for i in 0..n {
                        for j in i..n {
                            sums.push((elems[i] + elems[j]) % m);
                        }
                    }
                }
                _ => {
                    for i in 0..n {
                        for j in i..n {
                            for k in j..n {
                                sums.push((elems[i] + elems[j] + elems[k]) % m);
                            }
                        }
                    }
                }
            }
            sums.sort_unstable();
            let distinct = sums.windows(2).all(|w| w[0] != w[1]);
            assert_eq!(b.is_bt_set(t), distinct, "B = {b}, t = {t}, m = {m}");
        }
    }

    #[test]
    fn b2_equivalence_examples() {
        let good = set(29, &[0, 1, 4, 6, 13]);
        assert_eq!(good.b2_equivalences(), (true, true, true));
        assert_eq!(good.sum_set().len(), 15);
        let bad = set(17, &[0, 1, 2, 3, 4]);
        assert_eq!(bad.b2_equivalences(), (false, false, false));
        assert_eq!(set(7, &[0]).b2_equivalences(), (true, true, true));
    }

    #[test]
    fn difference_set_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1002);
        for _ in 0..200 {
            let b = random_set(&mut rng, 101, 8);
            let d = b.difference_set();
            let m = b.modulus();
            assert!(!d.contains(0), "B = {b}");
            for &x in d.elements() {
                assert!(d.contains((m - x) % m), "B = {b}: missing -{x}");
            }
        }
    }

    #[test]
    fn sum_set_size_bound_with_equality_iff_b2() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1003);
        for _ in 0..300 {
            let b = random_set(&mut rng, 101, 8);
            let s = b.len();
            let bound = (s * s + s) / 2;
            assert!(b.sum_set().len() <= bound, "B = {b}");
            assert_eq!(b.sum_set().len() == bound, b.is_bt_set(2), "B = {b}");
        }
    }

    #[test]
    fn b2_equivalences_agree_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1004);
        for _ in 0..300 {
            let b = random_set(&mut rng, 101, 8);
            let (x, y, z) = b.b2_equivalences();
            assert!(x == y && y == z, "B = {b}: ({x}, {y}, {z})");
        }
    }

    #[test]
    fn greedy_b2_examples() {
        let (one, m1) = greedy_b2(1);
        assert_eq!(one.elements(), &[0]);
        assert_eq!(m1, 1);
        let (four, m4) = greedy_b2(4);
        assert_eq!(four.elements(), &[0, 1, 3, 7]);
        assert_eq!(m4, 15);
        let (five, m5) = greedy_b2(5);
        assert_eq!(five.elements(), &[0, 1, 3, 7, 15]);
        assert_eq!(m5, 31);
        assert!(ResidueSet::new(31, five.elements().iter().map(|&x| x as i64))
            .unwrap()
            .is_bt_set(2));
    }

    #[test]
    fn greedy_b2_is_b2_for_all_odd_moduli_beyond_bound() {
        for count in 1..=6u32 {
            let (base, min_m) = greedy_b2(count);
            let elems: Vec<i64> = base.elements().iter().map(|&x| x as i64).collect();
            let mut m = min_m;
            for _ in 0..8 {
                let b = ResidueSet::new(m, elems.iter().copied()).unwrap();
                assert!(b.is_bt_set(2), "count = {count}, m = {m}");
                m += 2;
            }
        }
    }

    #[test]
    fn sequences_of_singleton_are_empty() {
        let b = set(7, &[3]);
        assert_eq!(enumerate_sequences(&b, 4, SequenceKind::S).count(), 0);
        assert_eq!(enumerate_sequences(&b, 4, SequenceKind::D).count(), 0);
    }

    #[test]
    fn sequences_of_pair() {
        let b = set(9, &[0, 1]);
        let s1: Vec<Vec<u64>> = enumerate_sequences(&b, 1, SequenceKind::S)
            .map(|s| s.terms().to_vec())
            .collect();
        assert_eq!(s1, vec![vec![0, 1], vec![1, 0]]);
        let s3: Vec<Vec<u64>> = enumerate_sequences(&b, 3, SequenceKind::S)
            .map(|s| s.terms().to_vec())
            .collect();
        assert_eq!(s3, vec![vec![0, 1, 0, 1], vec![1, 0, 1, 0]]);
        let d1: Vec<Vec<u64>> = enumerate_sequences(&b, 1, SequenceKind::D)
            .map(|s| s.terms().to_vec())
            .collect();
        assert_eq!(d1, vec![vec![8, 1], vec![1, 8]]);
    }

    #[test]
    fn sequences_are_lexicographic_and_valid() {
        let b = set(11, &[0, 2, 5]);
        let tuples: Vec<Vec<u64>> = enumerate_sequences(&b, 2, SequenceKind::S)
            .map(|s| s.terms().to_vec())
            .collect();
        // 3 choices for a_0, 2 for a_1, and a_2 ∉ {a_1, a_0}: 3·2·1 = 6.
        assert_eq!(tuples.len(), 6);
        for w in tuples.windows(2) {
            assert!(w[0] < w[1], "not lexicographic: {:?} then {:?}", w[0], w[1]);
        }
        for t in &tuples {
            for i in 0..t.len() {
                assert_ne!(t[i], t[(i + 1) % t.len()], "adjacent repeat in {t:?}");
            }
        }
    }

    #[test]
    fn difference_sequences_sum_to_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1005);
        for _ in 0..60 {
            let b = random_set(&mut rng, 30, 4);
            let t = rng.gen_range(1..=4usize);
            for d in enumerate_sequences(&b, t, SequenceKind::D).take(200) {
                let m = d.modulus();
                let total = d.terms().iter().fold(0u64, |acc, &x| (acc + x) % m);
                assert_eq!(total, 0, "B = {b}, d = {d}");
            }
        }
    }

    #[test]
    fn s_and_d_streams_pair_up() {
        let b = set(13, &[0, 1, 4, 6]);
        let s: Vec<_> = enumerate_sequences(&b, 3, SequenceKind::S).collect();
        let d: Vec<_> = enumerate_sequences(&b, 3, SequenceKind::D).collect();
        assert_eq!(s.len(), d.len());
        let m = 13u64;
        for (st, dt) in s.iter().zip(&d) {
            let a = st.terms();
            let t = a.len() - 1;
            assert_eq!(dt.terms()[0], (a[0] + m - a[t]) % m);
            for l in 1..=t {
                assert_eq!(dt.terms()[l], (a[l] + m - a[l - 1]) % m);
            }
        }
    }
}
