//! Finite propositional universes, model sets and formulas.
//!
//! A universe is either generated by `k` atoms (models are the `2^k` truth
//! assignments, bit `i` of a model index being the value of atom `p<i>`) or an
//! abstract set of `m` points. Theories are handled extensionally: a belief
//! set is the [`ModelSet`] of its models.

mod formula;
mod model_set;
mod parser;
mod render;
mod universe;

pub use formula::Formula;
pub use model_set::ModelSet;
pub use parser::parse_formula;
pub use render::render_model_set;
pub use universe::{Universe, MAX_MODELS};

/// `A ⊨ B` read extensionally: every model of `a` is a model of `b`.
pub fn entails(universe: &Universe, a: ModelSet, b: ModelSet) -> crate::Result<bool> {
    universe.check_member(a)?;
    universe.check_member(b)?;
    Ok(a.is_subset(b))
}

/// Exact set of models of `f` in `universe`. May be empty.
pub fn models_of(f: &Formula, universe: &Universe) -> ModelSet {
    f.models(universe)
}
