//! Construction and girth analysis of LDPC parity-check matrices built
//! from powers of a single permutation.
//!
//! The crate has three layers:
//!
//! * **Construction** — [`perm`] for permutations in cycle notation,
//!   [`sets`] for residue arithmetic (difference/sum/product sets, Sidon-type
//!   `B_t` tests, a greedy `B_2` builder), and [`proto`] for block prototype
//!   matrices `f^{a·i}` plus their GF(2) expansion ([`gf2`]) and
//!   serialization ([`alist`]).
//! * **Classification** — [`cycles`] decides which short Tanner-graph cycle
//!   lengths are present using closed-form predicates on the exponent sets
//!   wherever they are exact, falling back to bounded path enumeration, and
//!   produces a checkable witness for the girth.
//! * **Verification** — [`oracle`] measures girth on the expanded 0/1
//!   matrix by breadth-first search, with no reference to how the matrix
//!   was built, so every classification can be cross-checked independently.

pub mod alist;
pub mod cycles;
pub mod error;
pub mod gf2;
pub mod oracle;
pub mod perm;
pub mod proto;
pub mod sets;

pub use alist::{from_alist, to_alist};
pub use cycles::{
    classify, exponent_of_path, forced_12cycle, fossorier_check, girth_2x2, has_4cycle,
    has_6cycle, has_8cycle, odd_multiple_cycle_check, verify_cycle, CyclePath, CycleReport,
    Detection, EightCycles,
};
pub use error::{Error, Result};
pub use gf2::BinaryMatrix;
pub use perm::{CycleNotation, Permutation};
pub use proto::{BlockEntry, ProtoMatrix};
pub use sets::{enumerate_sequences, greedy_b2, ExponentSequence, ResidueSet, SequenceKind};
