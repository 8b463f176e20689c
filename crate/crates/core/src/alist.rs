//! Reading and writing the `alist` sparse-matrix text format.
//!
//! Layout, in order: `cols rows`, then the maximum column and row weights,
//! then every column weight, every row weight, then for each column its
//! 1-based row indices and for each row its 1-based column indices. Index
//! lines are right-padded with `0` up to the maximum weight so irregular
//! matrices still form a rectangular token grid. The parser is insensitive
//! to how tokens are split across lines, but every count, range, and the
//! column-versus-row adjacency lists are validated strictly.

use crate::error::{Error, Result};
use crate::gf2::BinaryMatrix;

/// Serializes a matrix in alist form (with trailing newline).
pub fn to_alist(m: &BinaryMatrix) -> String {
    let col_supports: Vec<Vec<usize>> = (0..m.cols()).map(|c| m.col_support(c)).collect();
    let row_supports: Vec<Vec<usize>> = (0..m.rows()).map(|r| m.row_support(r)).collect();
    let max_col = col_supports.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = row_supports.iter().map(Vec::len).max().unwrap_or(0);

    let mut out = String::new();
    out.push_str(&format!("{} {}\n", m.cols(), m.rows()));
    out.push_str(&format!("{max_col} {max_row}\n"));
    push_counts(&mut out, col_supports.iter().map(Vec::len));
    push_counts(&mut out, row_supports.iter().map(Vec::len));
    for support in &col_supports {
        push_indices(&mut out, support, max_col);
    }
    for support in &row_supports {
        push_indices(&mut out, support, max_row);
    }
    out
}

fn push_counts(out: &mut String, counts: impl Iterator<Item = usize>) {
    let line: Vec<String> = counts.map(|w| w.to_string()).collect();
    out.push_str(&line.join(" "));
    out.push('\n');
}

fn push_indices(out: &mut String, support: &[usize], width: usize) {
    let mut parts: Vec<String> = support.iter().map(|i| (i + 1).to_string()).collect();
    parts.resize(width, "0".to_string());
    out.push_str(&parts.join(" "));
    out.push('\n');
}

/// A token stream that remembers the line each token came from.
struct Tokens<'a> {
    iter: std::iter::Peekable<std::vec::IntoIter<(usize, &'a str)>>,
    last_line: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        let toks: Vec<(usize, &'a str)> = text
            .lines()
            .enumerate()
            .flat_map(|(i, line)| line.split_whitespace().map(move |t| (i + 1, t)))
            .collect();
        Tokens {
            iter: toks.into_iter().peekable(),
            last_line: 1,
        }
    }

    fn next_usize(&mut self, what: &str) -> Result<usize> {
        match self.iter.next() {
            Some((line, tok)) => {
                self.last_line = line;
                tok.parse::<usize>().map_err(|_| Error::AlistParse {
                    line,
                    msg: format!("expected {what}, found {tok:?}"),
                })
            }
            None => Err(Error::AlistParse {
                line: self.last_line,
                msg: format!("unexpected end of input while reading {what}"),
            }),
        }
    }

    fn finish(mut self) -> Result<()> {
        if let Some(&(line, tok)) = self.iter.peek() {
            return Err(Error::AlistParse {
                line,
                msg: format!("trailing data starting at {tok:?}"),
            });
        }
        Ok(())
    }
}

/// Parses alist text back into a matrix.
pub fn from_alist(text: &str) -> Result<BinaryMatrix> {
    let mut t = Tokens::new(text);
    let cols = t.next_usize("column count")?;
    let rows = t.next_usize("row count")?;
    let max_col = t.next_usize("maximum column weight")?;
    let max_row = t.next_usize("maximum row weight")?;

    let col_weights: Vec<usize> = (0..cols)
        .map(|_| t.next_usize("a column weight"))
        .collect::<Result<_>>()?;
    let row_weights: Vec<usize> = (0..rows)
        .map(|_| t.next_usize("a row weight"))
        .collect::<Result<_>>()?;
    for (c, &w) in col_weights.iter().enumerate() {
        if w > max_col {
            return Err(Error::AlistParse {
                line: t.last_line,
                msg: format!("column {c} has weight {w} above the declared maximum {max_col}"),
            });
        }
    }
    for (r, &w) in row_weights.iter().enumerate() {
        if w > max_row {
            return Err(Error::AlistParse {
                line: t.last_line,
                msg: format!("row {r} has weight {w} above the declared maximum {max_row}"),
            });
        }
    }

    let col_lists = read_index_block(&mut t, cols, &col_weights, max_col, rows, "row")?;
    let row_lists = read_index_block(&mut t, rows, &row_weights, max_row, cols, "column")?;
    t.finish()?;

    let mut m = BinaryMatrix::zero(rows, cols);
    for (c, list) in col_lists.iter().enumerate() {
        for &r in list {
            m.set(r, c, true);
        }
    }
    // The row lists are redundant; demand that they describe the same matrix.
    for (r, list) in row_lists.iter().enumerate() {
        let support = m.row_support(r);
        if support != *list {
            return Err(Error::AlistParse {
                line: 1,
                msg: format!(
                    "row {r} adjacency list {:?} disagrees with the column lists {:?}",
                    list.iter().map(|c| c + 1).collect::<Vec<_>>(),
                    support.iter().map(|c| c + 1).collect::<Vec<_>>()
                ),
            });
        }
    }
    Ok(m)
}

/// Reads `outer` padded index lists, each `weight[i]` live entries plus
/// padding zeros up to `max`, entries 1-based and below `bound + 1`.
/// Returns 0-based sorted lists.
fn read_index_block(
    t: &mut Tokens,
    outer: usize,
    weights: &[usize],
    max: usize,
    bound: usize,
    axis: &str,
) -> Result<Vec<Vec<usize>>> {
    let mut lists = Vec::with_capacity(outer);
    for (i, &w) in weights.iter().enumerate().take(outer) {
        let mut list = Vec::with_capacity(w);
        for k in 0..max {
            let v = t.next_usize(&format!("a {axis} index"))?;
            if k < w {
                if v == 0 || v > bound {
                    return Err(Error::AlistParse {
                        line: t.last_line,
                        msg: format!("{axis} index {v} out of range 1..={bound} in list {i}"),
                    });
                }
                list.push(v - 1);
            } else if v != 0 {
                return Err(Error::AlistParse {
                    line: t.last_line,
                    msg: format!("expected padding 0 after {w} entries in list {i}, found {v}"),
                });
            }
        }
        list.sort_unstable();
        if list.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::AlistParse {
                line: t.last_line,
                msg: format!("duplicate {axis} index in list {i}"),
            });
        }
        lists.push(list);
    }
    Ok(lists)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sample() -> BinaryMatrix {
        // 1 1 0 1
        // 0 1 1 0
        BinaryMatrix::from_ones(2, 4, [(0, 0), (0, 1), (0, 3), (1, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn writes_padded_irregular_lists() {
        let text = to_alist(&sample());
        let expected = "4 2\n\
                        2 3\n\
                        1 2 1 1\n\
                        3 2\n\
                        1 0\n1 2\n2 0\n1 0\n\
                        1 2 4\n2 3 0\n";
        assert_eq!(text, expected);
    }

    #[test]
    fn parses_own_output() {
        let m = sample();
        assert_eq!(from_alist(&to_alist(&m)).unwrap(), m);
    }

    #[test]
    fn whitespace_layout_is_irrelevant() {
        let squashed = to_alist(&sample()).split_whitespace().collect::<Vec<_>>().join(" ");
        assert_eq!(from_alist(&squashed).unwrap(), sample());
    }

    #[test]
    fn random_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_3001);
        for _ in 0..40 {
            let rows = rng.gen_range(1..=20);
            let cols = rng.gen_range(1..=20);
            let mut m = BinaryMatrix::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if rng.gen_bool(0.25) {
                        m.set(r, c, true);
                    }
                }
            }
            assert_eq!(from_alist(&to_alist(&m)).unwrap(), m);
        }
    }

    #[test]
    fn rejects_malformed_input() {
        // Non-numeric token.
        let err = from_alist("x 2\n").unwrap_err();
        assert!(matches!(err, Error::AlistParse { line: 1, .. }), "{err}");

        // Truncated input.
        let err = from_alist("4 2\n2 3\n1 2 1 1\n3 2\n1 0\n").unwrap_err();
        assert!(err.to_string().contains("end of input"), "{err}");

        // Index out of range.
        let bad = "1 1\n1 1\n1\n1\n2\n1\n";
        let err = from_alist(bad).unwrap_err();
        assert!(err.to_string().contains("out of range"), "{err}");

        // Row list inconsistent with column lists.
        let good = to_alist(&sample());
        let bad = good.replace("2 3 0", "2 4 0");
        let err = from_alist(&bad).unwrap_err();
        assert!(err.to_string().contains("disagrees"), "{err}");

        // Nonzero token in the padding area.
        let bad = good.replace("1 0\n1 2", "1 9\n1 2");
        let err = from_alist(&bad).unwrap_err();
        assert!(err.to_string().contains("padding"), "{err}");

        // Trailing garbage.
        let err = from_alist(&format!("{good}7\n")).unwrap_err();
        assert!(err.to_string().contains("trailing"), "{err}");
    }

    #[test]
    fn weight_above_declared_maximum_is_rejected() {
        let bad = "2 1\n1 1\n1 2\n2\n1\n1 1\n1 2\n";
        let err = from_alist(bad).unwrap_err();
        assert!(err.to_string().contains("above the declared maximum"), "{err}");
    }
}
