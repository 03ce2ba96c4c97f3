//! Patches and the "provably preferable" relations derived from an operator.

mod build;
mod patch;
mod relation;

pub use build::build_relation;
pub(crate) use build::{for_each_patch, for_each_sub_prefix};
pub(crate) use patch::submasks;
pub use patch::{make_patch, relaxed_patches, Patch, PatchMode};
pub use relation::{transitive_closure, Relation, Variant};
