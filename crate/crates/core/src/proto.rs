//! Block prototype matrices whose blocks are powers of one fixed
//! permutation.
//!
//! A `ProtoMatrix` is an `R × C` grid of blocks, each either a power `f^e`
//! of the generator (with `1` short for `f^0 = id`) or an all-zero block.
//! Expanding the grid replaces each block by its `n × n` 0/1 matrix, giving
//! a parity-check matrix whose Tanner-graph cycle structure the analysis
//! modules classify. The regular construction takes two residue sets `A`
//! and `I` modulo the order of `f` and places `f^{a·i}` at block `(a, i)`;
//! those sets are kept as provenance so set-theoretic cycle criteria can
//! dispatch on them later. Weight-one column extensions raise the rate
//! without touching the cycle structure.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::gf2::BinaryMatrix;
use crate::perm::{Orbits, Permutation};
use crate::sets::ResidueSet;

/// One block of a prototype matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BlockEntry {
    /// The identity block (`f^0`).
    Identity,
    /// A nonzero power of the generator; the exponent is kept reduced
    /// modulo the generator's order and is never 0.
    Power(u64),
    /// The all-zero block.
    Zero,
}

impl BlockEntry {
    /// A power block with the exponent reduced modulo `m`; exponent 0
    /// becomes `Identity`.
    pub fn power(e: i64, m: u64) -> BlockEntry {
        let e = e.rem_euclid(m as i64) as u64;
        if e == 0 {
            BlockEntry::Identity
        } else {
            BlockEntry::Power(e)
        }
    }

    /// The exponent for permutation blocks, `None` for the zero block.
    pub fn exponent(&self) -> Option<u64> {
        match self {
            BlockEntry::Identity => Some(0),
            BlockEntry::Power(e) => Some(*e),
            BlockEntry::Zero => None,
        }
    }

    fn normalized(self, m: u64) -> BlockEntry {
        match self {
            BlockEntry::Zero => BlockEntry::Zero,
            BlockEntry::Identity => BlockEntry::Identity,
            BlockEntry::Power(e) => {
                let e = e % m;
                if e == 0 {
                    BlockEntry::Identity
                } else {
                    BlockEntry::Power(e)
                }
            }
        }
    }
}

impl std::fmt::Display for BlockEntry {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BlockEntry::Identity => write!(out, "1"),
            BlockEntry::Power(e) => write!(out, "f^{e}"),
            BlockEntry::Zero => write!(out, "0"),
        }
    }
}

/// A block grid of powers of one generator permutation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProtoMatrix {
    generator: Permutation,
    order: u64,
    entries: Vec<Vec<BlockEntry>>,
    provenance: Option<(ResidueSet, ResidueSet)>,
}

impl ProtoMatrix {
    /// Builds the regular grid: block `(row k, col j)` is
    /// `f^{A_k · I_j mod m}` with the elements of `A` and `I` ascending, so
    /// row 0 and column 0 are identity blocks.
    ///
    /// Both sets must live modulo the order of `f` and contain 0.
    pub fn build_regular(f: Permutation, a: &ResidueSet, i: &ResidueSet) -> Result<Self> {
        let m = f.order();
        for set in [a, i] {
            if set.modulus() != m {
                return Err(Error::ModulusMismatch {
                    left: set.modulus(),
                    right: m,
                });
            }
            if !set.contains(0) {
                return Err(Error::InvalidArgument(format!(
                    "exponent set {set} must contain 0 so the leading row and column are identity blocks"
                )));
            }
        }
        let entries = a
            .elements()
            .iter()
            .map(|&ak| {
                i.elements()
                    .iter()
                    .map(|&ij| {
                        let e = (u128::from(ak) * u128::from(ij) % u128::from(m)) as u64;
                        BlockEntry::power(e as i64, m)
                    })
                    .collect()
            })
            .collect();
        Ok(ProtoMatrix {
            generator: f,
            order: m,
            entries,
            provenance: Some((a.clone(), i.clone())),
        })
    }

    /// Wraps a hand-assembled grid. The grid must be rectangular and
    /// nonempty; exponents are reduced modulo the order of `f`. No
    /// provenance is attached.
    pub fn from_entries(f: Permutation, entries: Vec<Vec<BlockEntry>>) -> Result<Self> {
        if entries.is_empty() || entries[0].is_empty() {
            return Err(Error::InvalidArgument(
                "a prototype matrix needs at least one block row and column".into(),
            ));
        }
        let width = entries[0].len();
        if entries.iter().any(|row| row.len() != width) {
            return Err(Error::InvalidArgument(
                "all block rows must have the same length".into(),
            ));
        }
        let m = f.order();
        let entries = entries
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.normalized(m)).collect())
            .collect();
        Ok(ProtoMatrix {
            generator: f,
            order: m,
            entries,
            provenance: None,
        })
    }

    pub fn generator(&self) -> &Permutation {
        &self.generator
    }

    /// The order `m` of the generator; exponents live modulo this.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// The block side length `n` (each block is `n × n` once expanded).
    pub fn lift(&self) -> usize {
        self.generator.n()
    }

    pub fn block_rows(&self) -> usize {
        self.entries.len()
    }

    pub fn block_cols(&self) -> usize {
        self.entries[0].len()
    }

    /// # Panics
    ///
    /// Panics when the block coordinates are out of range.
    pub fn entry(&self, row: usize, col: usize) -> BlockEntry {
        self.entries[row][col]
    }

    /// The `(A, I)` exponent sets when the grid came from the regular
    /// construction (extensions preserve them; they describe the leading
    /// columns).
    pub fn provenance(&self) -> Option<(&ResidueSet, &ResidueSet)> {
        self.provenance.as_ref().map(|(a, i)| (a, i))
    }

    /// Appends weight-one block columns: each `(row, exponent)` adds one
    /// column whose only nonzero block is `f^exponent` at that block row.
    /// Such columns can never lie on a cycle, so the cycle structure of the
    /// expansion is unchanged while the rate rises.
    pub fn extend_irregular(&self, additions: &[(usize, i64)]) -> Result<ProtoMatrix> {
        let mut out = self.clone();
        for &(row, exponent) in additions {
            if row >= self.block_rows() {
                return Err(Error::BlockRowOutOfRange {
                    row,
                    rows: self.block_rows(),
                });
            }
            for (r, grid_row) in out.entries.iter_mut().enumerate() {
                grid_row.push(if r == row {
                    BlockEntry::power(exponent, self.order)
                } else {
                    BlockEntry::Zero
                });
            }
        }
        Ok(out)
    }

    /// Expands every block to its `n × n` 0/1 matrix: a permutation block
    /// `f^e` at block `(r, c)` sets bit `(r·n + f^e(k), c·n + k)` for every
    /// `k`.
    pub fn expand(&self) -> BinaryMatrix {
        let n = self.lift();
        let orbits = Orbits::new(&self.generator);
        let mut m = BinaryMatrix::zero(self.block_rows() * n, self.block_cols() * n);
        for (r, row) in self.entries.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                if let Some(e) = entry.exponent() {
                    for k in 0..n {
                        m.set(r * n + orbits.apply_power(e, k), c * n + k, true);
                    }
                }
            }
        }
        m
    }

    /// The rate of the code the expansion checks: `(cols − rank) / cols`.
    pub fn rate(&self) -> Ratio<u64> {
        let h = self.expand();
        let cols = h.cols() as u64;
        Ratio::new(cols - h.gf2_rank() as u64, cols)
    }

    /// Parses the textual block layout (`1`, `f^e`, `0` tokens, one block
    /// row per line) against a given generator. No provenance is attached.
    pub fn parse_text(text: &str, f: Permutation) -> Result<ProtoMatrix> {
        let m = f.order();
        let mut entries: Vec<Vec<BlockEntry>> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                row.push(match tok {
                    "1" => BlockEntry::Identity,
                    "0" => BlockEntry::Zero,
                    _ => {
                        let e = tok
                            .strip_prefix("f^")
                            .and_then(|e| e.parse::<i64>().ok())
                            .ok_or_else(|| Error::ProtoParse {
                                line: line_no,
                                msg: format!("expected 1, 0, or f^<integer>, found {tok:?}"),
                            })?;
                        BlockEntry::power(e, m)
                    }
                });
            }
            if let Some(first) = entries.first() {
                if row.len() != first.len() {
                    return Err(Error::ProtoParse {
                        line: line_no,
                        msg: format!(
                            "block row has {} entries but earlier rows have {}",
                            row.len(),
                            first.len()
                        ),
                    });
                }
            }
            entries.push(row);
        }
        if entries.is_empty() {
            return Err(Error::ProtoParse {
                line: 1,
                msg: "no block rows found".into(),
            });
        }
        ProtoMatrix::from_entries(f, entries)
    }
}

impl std::fmt::Display for ProtoMatrix {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
