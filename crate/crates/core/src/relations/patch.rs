use std::fmt;

use crate::logic::ModelSet;
use crate::operator::SetSequence;
use crate::{Error, Result};

/// How the `i`-th coordinate of the `i`-th patch member is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatchMode {
    /// `B^i_i = A_i \ A'_i`; members are disjoint from `A'` and each other.
    Tight,
    /// `B^i_i` any set with `A'_i ∪ B^i_i = A_i`.
    Relaxed,
}

/// A family of set sequences which, together with `A'`, covers the product `A`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Patch {
    members: Vec<SetSequence>,
}

impl Patch {
    pub fn members(&self) -> &[SetSequence] {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }
}

impl fmt::Debug for Patch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.members).finish()
    }
}

fn check_containment(a: &SetSequence, a_prime: &SetSequence) -> Result<()> {
    if a.len() != a_prime.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: a_prime.len(),
        });
    }
    if !a_prime.is_pointwise_subset(a) {
        return Err(Error::Containment(format!(
            "{a_prime} is not pointwise inside {a}"
        )));
    }
    Ok(())
}

fn member(a: &SetSequence, i: usize, set: ModelSet) -> SetSequence {
    let mut sets = a.as_slice().to_vec();
    sets[i] = set;
    SetSequence::new(sets).expect("patch coordinates are non-empty")
}

/// The patch to `a` from `a_prime`: one member per coordinate where they differ.
///
/// In relaxed mode the member's differing coordinate is the whole `A_i`, the
/// maximal admissible choice; [`relaxed_patches`] lists every choice.
pub fn make_patch(a: &SetSequence, a_prime: &SetSequence, mode: PatchMode) -> Result<Patch> {
    check_containment(a, a_prime)?;
    let members = a
        .as_slice()
        .iter()
        .zip(a_prime.as_slice())
        .enumerate()
        .filter(|(_, (x, y))| x != y)
        .map(|(i, (&x, &y))| match mode {
            PatchMode::Tight => member(a, i, x - y),
            PatchMode::Relaxed => member(a, i, x),
        })
        .collect();
    Ok(Patch { members })
}

/// Every relaxed patch to `a` from `a_prime`.
pub fn relaxed_patches(a: &SetSequence, a_prime: &SetSequence) -> Result<Vec<Patch>> {
    check_containment(a, a_prime)?;
    let differing: Vec<(usize, ModelSet, ModelSet)> = a
        .as_slice()
        .iter()
        .zip(a_prime.as_slice())
        .enumerate()
        .filter(|(_, (x, y))| x != y)
        .map(|(i, (&x, &y))| (i, x, y))
        .collect();
    let mut out = vec![Vec::new()];
    for &(i, full, sub) in &differing {
        let required = full - sub;
        let mut next = Vec::new();
        for prefix in &out {
            for extra in submasks(sub) {
                let mut members: Vec<SetSequence> = Vec::clone(prefix);
                members.push(member(a, i, required | extra));
                next.push(members);
            }
        }
        out = next;
    }
    Ok(out.into_iter().map(|members| Patch { members }).collect())
}

/// All subsets of `set`, including the empty set, in increasing mask order.
pub(crate) fn submasks(set: ModelSet) -> impl Iterator<Item = ModelSet> {
    let full = set.bits();
    let mut cur = Some(0u64);
    std::iter::from_fn(move || {
        let out = cur?;
        cur = if out == full {
            None
        } else {
            Some((out.wrapping_sub(full)) & full)
        };
        Some(ModelSet::from_bits(out))
    })
}
