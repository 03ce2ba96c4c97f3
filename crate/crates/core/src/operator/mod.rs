//! Fixed-length rankings and the operators they induce.
//!
//! An operator of dimension `n` maps every sequence `A1 ... An` of non-empty
//! model sets to a non-empty model set. A ranking `r` on `X^n` induces the
//! operator that keeps the last coordinates of the minimal-rank tuples in
//! `A1 x ... x An`.

mod ranking;
mod sequence;
mod table;

pub use ranking::{rank_of_set_sequence, update_from_ranking, FixedRanking};
pub use sequence::{SequenceSpace, SetSequence};
pub use table::{table_from_ranking, OperatorTable, DEFAULT_TABLE_BUDGET};
