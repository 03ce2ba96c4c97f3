//! Iterated belief update by preferred histories.
//!
//! The crate computes update operators from rankings of histories, checks
//! the logical properties such operators must satisfy, decides whether a
//! finite operator table is induced by some ranking, and synthesizes that
//! ranking when it is.
//!
//! Layout:
//! - [`logic`]: universes, model sets, formulas and their parser.
//! - [`history`]: general preferred-history semantics over variable-length histories.
//! - [`operator`]: fixed-length rankings and the operator tables they induce.
//! - [`relations`]: patches and the "provably preferable" relations over set sequences.
//! - [`representation`]: condition checkers, ranking synthesis and a brute-force oracle.
//! - [`postulates`]: executable checks of the logical properties of the general semantics.
//! - [`lab`]: the built-in counterexample and exhaustive operator sweeps.
//! - [`format`]: the line-oriented ranking and table file formats.
//!
//! Rank codomains are generic: anything totally ordered and `Copy` works, so
//! integer, rational or ordered-float scales can be used interchangeably.

pub mod error;
pub mod format;
pub mod history;
pub mod lab;
pub mod logic;
pub mod operator;
pub mod postulates;
pub mod relations;
pub mod representation;

pub use error::{Error, Result};

/// A totally ordered rank scale.
pub trait Rank: Ord + Copy + std::fmt::Debug + Send + Sync {}

impl<T: Ord + Copy + std::fmt::Debug + Send + Sync> Rank for T {}

/// Ranking of fixed-length histories on the natural-number scale.
pub type NatFixedRanking = operator::FixedRanking<u32>;

/// Ranking of variable-length histories on the natural-number scale.
pub type NatGeneralRanking = history::GeneralRanking<u32>;

pub use history::{GeneralRanking, History, ObservationSequence};
pub use logic::{Formula, ModelSet, Universe};
pub use operator::{FixedRanking, OperatorTable, SequenceSpace, SetSequence};
