//! Dense bit matrices over GF(2).
//!
//! Rows are packed 64 columns per word, which keeps the Gaussian-elimination
//! rank fast enough to sit inside search loops (a few thousand columns in
//! well under a millisecond).

use crate::error::{Error, Result};

/// A dense `rows × cols` matrix over GF(2), row-major, bit-packed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BinaryMatrix {
    /// The all-zero matrix. Zero-dimensional matrices are allowed.
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        BinaryMatrix {
            rows,
            cols,
            words_per_row,
            bits: vec![0u64; rows * words_per_row],
        }
    }

    /// Builds a matrix from explicit one-positions.
    ///
    /// Fails when a coordinate is out of range.
    pub fn from_ones(
        rows: usize,
        cols: usize,
        ones: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut m = BinaryMatrix::zero(rows, cols);
        for (r, c) in ones {
            if r >= rows || c >= cols {
                return Err(Error::InvalidArgument(format!(
                    "bit ({r}, {c}) outside a {rows}×{cols} matrix"
                )));
            }
            m.set(r, c, true);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reads one bit.
    ///
    /// # Panics
    ///
    /// Panics when out of range.
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "bit index out of range");
        let word = self.bits[r * self.words_per_row + c / 64];
        (word >> (c % 64)) & 1 == 1
    }

    /// Writes one bit.
    ///
    /// # Panics
    ///
    /// Panics when out of range.
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "bit index out of range");
        let word = &mut self.bits[r * self.words_per_row + c / 64];
        let mask = 1u64 << (c % 64);
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    /// The rank over GF(2), by bit-packed Gaussian elimination on a scratch
    /// copy. The code dimension of a parity-check matrix is
    /// `cols − gf2_rank`.
    pub fn gf2_rank(&self) -> usize {
        let w = self.words_per_row;
        let mut owned: Vec<u64> = self.bits.clone();
        let mut scratch: Vec<&mut [u64]> =
            owned.chunks_mut(w.max(1)).take(self.rows).collect();
        let mut rank = 0usize;
        for col in 0..self.cols {
            let (word, bit) = (col / 64, col % 64);
            let mask = 1u64 << bit;
            let Some(pivot) = (rank..self.rows).find(|&r| scratch[r][word] & mask != 0) else {
                continue;
            };
            scratch.swap(rank, pivot);
            let (upper, lower) = scratch.split_at_mut(rank + 1);
            let pivot_row: &[u64] = upper[rank];
            for row in lower.iter_mut() {
                if row[word] & mask != 0 {
                    for (x, &p) in row.iter_mut().zip(pivot_row) {
                        *x ^= p;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// The transpose.
    pub fn transpose(&self) -> BinaryMatrix {
        let mut t = BinaryMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_support(r) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Column indices of the ones in row `r`, ascending.
    pub fn row_support(&self, r: usize) -> Vec<usize> {
        assert!(r < self.rows, "row index out of range");
        let mut out = Vec::new();
        for word in 0..self.words_per_row {
            let mut bits = self.bits[r * self.words_per_row + word];
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(word * 64 + b);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Row indices of the ones in column `c`, ascending.
    pub fn col_support(&self, c: usize) -> Vec<usize> {
        assert!(c < self.cols, "column index out of range");
        (0..self.rows).filter(|&r| self.get(r, c)).collect()
    }

    /// Weight of every row.
    pub fn row_weights(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|r| {
                self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
                    .iter()
                    .map(|w| w.count_ones() as usize)
                    .sum()
            })
            .collect()
    }

    /// Weight of every column.
    pub fn col_weights(&self) -> Vec<usize> {
        let mut weights = vec![0usize; self.cols];
        for r in 0..self.rows {
            for c in self.row_support(r) {
                weights[c] += 1;
            }
        }
        weights
    }
}
