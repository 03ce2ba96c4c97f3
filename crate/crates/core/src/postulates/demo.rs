use std::fmt;

use crate::history::{update_general, GeneralRanking, ObservationSequence};
use crate::logic::{Formula, ModelSet, Universe};
use crate::{Error, Result};

/// Outcomes of updating the trivial belief set by `φ, ψ, ¬φ∨¬ψ` in both
/// orders of the first two observations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpistemicDemo {
    pub ranking: GeneralRanking<u32>,
    /// `[φ·ψ]` and `[ψ·φ]`.
    pub prefixes: (ModelSet, ModelSet),
    /// `[φ·ψ·(¬φ∨¬ψ)]` and `[ψ·φ·(¬φ∨¬ψ)]`.
    pub full: (ModelSet, ModelSet),
    /// The same two full sequences under the canonical ranking.
    pub canonical_full: (ModelSet, ModelSet),
    /// Models of `φ ∧ ψ`.
    pub both: ModelSet,
}

impl EpistemicDemo {
    /// Equal belief sets after the two orders of `φ, ψ`, yet different
    /// outcomes once `¬φ∨¬ψ` arrives.
    pub fn order_sensitive(&self) -> bool {
        self.prefixes.0 == self.prefixes.1
            && self.prefixes.0 == self.both
            && self.full.0 != self.full.1
    }
}

impl fmt::Display for EpistemicDemo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[p0 . p1] = {}", self.prefixes.0)?;
        writeln!(f, "[p1 . p0] = {}", self.prefixes.1)?;
        writeln!(f, "[p0 . p1 . !p0 | !p1] = {}", self.full.0)?;
        writeln!(f, "[p1 . p0 . !p0 | !p1] = {}", self.full.1)?;
        writeln!(
            f,
            "canonical ranking: {} and {}",
            self.canonical_full.0, self.canonical_full.1
        )?;
        write!(
            f,
            "order-sensitive: {}",
            if self.order_sensitive() { "yes" } else { "no" }
        )
    }
}

/// Runs the two-observation scenario with `φ = p0`, `ψ = p1` under a
/// layered ranking: every one-model history below every two-model history,
/// `⟨{p0}, {p1}⟩` (only `p0` true, then only `p1` true) the unique best
/// two-model history, and all longer histories above.
pub fn epistemic_state_demo(universe: Universe) -> Result<EpistemicDemo> {
    if universe.atom_count().is_none_or(|k| k < 2) {
        return Err(Error::Precondition(
            "the demo needs at least two atoms".into(),
        ));
    }
    let (only_p0, only_p1) = (1usize, 2usize);
    let ranking = GeneralRanking::from_fn(universe, 3, |h| match h.len() {
        1 => 0,
        2 if h == [only_p0, only_p1] => 1,
        2 => 2,
        _ => 3,
    })?;
    let canonical = GeneralRanking::canonical(universe, 3);

    let phi = Formula::atom(0);
    let psi = Formula::atom(1);
    let neither_both = Formula::or(Formula::not(phi.clone()), Formula::not(psi.clone()));
    let run = |r: &GeneralRanking<u32>, fs: &[Formula]| -> Result<ModelSet> {
        update_general(&ObservationSequence::from_formulas(fs, &universe)?, r)
    };
    let forward = [phi.clone(), psi.clone(), neither_both.clone()];
    let backward = [psi.clone(), phi.clone(), neither_both];

    Ok(EpistemicDemo {
        prefixes: (
            run(&ranking, &forward[..2])?,
            run(&ranking, &backward[..2])?,
        ),
        full: (run(&ranking, &forward)?, run(&ranking, &backward)?),
        canonical_full: (run(&canonical, &forward)?, run(&canonical, &backward)?),
        both: Formula::and(phi, psi).models(&universe),
        ranking,
    })
}
