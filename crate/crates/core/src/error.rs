//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by construction, analysis, and parsing operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two permutations with different domain sizes were combined.
    #[error("domain size mismatch: {left} vs {right}")]
    DomainSizeMismatch { left: usize, right: usize },

    /// An image table does not describe a bijection on 0..n-1.
    #[error("invalid permutation image: {0}")]
    InvalidImage(String),

    /// Cycle notation with repeated symbols, out-of-range symbols, or bad syntax.
    #[error("malformed cycles: {0}")]
    MalformedCycles(String),

    /// A residue set violating its construction rules (duplicate residues after
    /// reduction, zero modulus, or a site-specific requirement such as `0 ∈ I`).
    #[error("invalid residue set: {0}")]
    InvalidResidueSet(String),

    /// Two residue sets with different moduli were combined.
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    /// An irregular extension referenced a block row outside the grid.
    #[error("block row {row} out of range for a grid with {rows} block rows")]
    BlockRowOutOfRange { row: usize, rows: usize },

    /// A cycle path violating the alternation rules or referencing blocks
    /// outside the grid.
    #[error("invalid cycle path: {0}")]
    InvalidCyclePath(String),

    /// A cycle path crossed an all-zero block, which carries no edges.
    #[error("path touches an all-zero block at ({row}, {col})")]
    ZeroBlockOnPath { row: usize, col: usize },

    /// A closed-form predicate was asked about a grid that was not built from
    /// exponent sets; only the brute-force oracle can analyze such a grid.
    #[error("grid has no exponent-set provenance; use the girth oracle instead")]
    MissingProvenance,

    /// A cycle-length query outside the supported even range 4..=12.
    #[error("unsupported cycle length {0}: expected an even length between 4 and 12")]
    UnsupportedCycleLength(usize),

    /// A malformed alist file.
    #[error("alist parse error at line {line}: {msg}")]
    AlistParse { line: usize, msg: String },

    /// A malformed proto-matrix text block.
    #[error("proto-matrix parse error at line {line}: {msg}")]
    ProtoParse { line: usize, msg: String },

    /// A miscellaneous argument violating an operation's stated requirements.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
