//! Deciding whether an operator table comes from a ranking.
//!
//! Three routes: the coordinate-wise conditions ([`check_theorem_2d`],
//! [`check_suggested_3d`]), the patch-based conditions for any dimension
//! ([`check_theorem_nd`]) with ranking synthesis, and an exhaustive search
//! over weak orders used as ground truth.

mod checks;
mod oracle;
mod report;
mod synth;

pub use checks::{
    check_suggested_3d, check_theorem_2d, check_theorem_nd, check_theorem_nd_with, Width,
};
pub use oracle::{
    find_representing_ranking, for_each_weak_order, is_representable_bruteforce, weak_order_count,
    RepresentableSet, DEFAULT_ORACLE_BUDGET,
};
pub use report::{CheckReport, Condition, Violation};
pub use synth::{preorder_classes, ranking_from_classes, synthesize_ranking, PreorderClasses};
