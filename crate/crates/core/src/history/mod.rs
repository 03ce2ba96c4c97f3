//! General preferred-history semantics.
//!
//! Histories are finite non-empty model sequences; a ranking assigns each
//! history (up to a length bound) a rank, lower meaning more preferred. The
//! belief set after a sequence of observations is the set of last models of
//! the minimal-rank histories that explain the sequence.

mod ranking;

use std::fmt;

use crate::logic::{Formula, ModelSet, Universe};
use crate::{Error, Rank, Result};

pub use ranking::{GeneralRanking, RankingViolation};

/// A finite, non-empty sequence of models.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct History(Vec<usize>);

impl History {
    pub fn new(models: Vec<usize>) -> Result<Self> {
        if models.is_empty() {
            return Err(Error::Precondition(
                "a history needs at least one model".into(),
            ));
        }
        Ok(History(models))
    }

    pub fn models(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn last(&self) -> usize {
        *self.0.last().expect("histories are non-empty")
    }
}

impl fmt::Display for History {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for History {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A (possibly empty) sequence of consistent observations, stored as model sets.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ObservationSequence(Vec<ModelSet>);

impl ObservationSequence {
    pub fn empty() -> Self {
        ObservationSequence(Vec::new())
    }

    pub fn new(observations: Vec<ModelSet>) -> Result<Self> {
        if let Some(i) = observations.iter().position(|o| o.is_empty()) {
            return Err(Error::Inconsistent(format!(
                "observation #{i} has no models"
            )));
        }
        Ok(ObservationSequence(observations))
    }

    pub fn from_formulas(formulas: &[Formula], universe: &Universe) -> Result<Self> {
        let sets = formulas
            .iter()
            .map(|f| {
                let s = f.models(universe);
                if s.is_empty() {
                    Err(Error::Inconsistent(f.to_string()))
                } else {
                    Ok(s)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ObservationSequence(sets))
    }

    pub fn as_slice(&self) -> &[ModelSet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<ModelSet> {
        self.0.last().copied()
    }
}

impl fmt::Debug for ObservationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

/// Whether a monotone choice of positions in `h` satisfies `tau` in order.
///
/// Greedy earliest matching is optimal: staying on the current model as long
/// as it satisfies the next observation never loses a witness.
pub fn explains(h: &History, tau: &ObservationSequence) -> bool {
    explains_models(h.models(), tau.as_slice())
}

pub(crate) fn explains_models(h: &[usize], tau: &[ModelSet]) -> bool {
    let mut pos = 0;
    for obs in tau {
        while pos < h.len() && !obs.contains(h[pos]) {
            pos += 1;
        }
        if pos == h.len() {
            return false;
        }
    }
    true
}

/// Strict sub-history: an order-preserving selection that is strictly shorter.
pub fn is_subhistory(sub: &History, h: &History) -> bool {
    if sub.len() >= h.len() {
        return false;
    }
    let mut it = h.models().iter();
    sub.models().iter().all(|m| it.any(|x| x == m))
}

fn search_bound(tau: &ObservationSequence) -> usize {
    tau.len().max(1)
}

/// All explaining histories of minimal rank.
///
/// Only histories of length at most `max(1, |tau|)` are searched: a longer
/// explaining history contains an explaining strict sub-history of that
/// length, which a valid ranking places strictly lower.
pub fn preferred_histories<Z: Rank>(
    tau: &ObservationSequence,
    ranking: &GeneralRanking<Z>,
) -> Result<Vec<History>> {
    let mut best: Option<Z> = None;
    let mut out = Vec::new();
    scan_explainers(tau, ranking, |h, z| match best {
        Some(b) if z > b => {}
        Some(b) if z == b => out.push(h.to_vec()),
        _ => {
            best = Some(z);
            out.clear();
            out.push(h.to_vec());
        }
    })?;
    Ok(out.into_iter().map(History).collect())
}

/// The belief set `[tau]`: last models of the preferred histories.
pub fn update_general<Z: Rank>(
    tau: &ObservationSequence,
    ranking: &GeneralRanking<Z>,
) -> Result<ModelSet> {
    let mut best: Option<Z> = None;
    let mut out = ModelSet::EMPTY;
    scan_explainers(tau, ranking, |h, z| {
        let last = ModelSet::singleton(*h.last().unwrap());
        match best {
            Some(b) if z > b => {}
            Some(b) if z == b => out = out | last,
            _ => {
                best = Some(z);
                out = last;
            }
        }
    })?;
    Ok(out)
}

fn scan_explainers<Z: Rank>(
    tau: &ObservationSequence,
    ranking: &GeneralRanking<Z>,
    mut visit: impl FnMut(&[usize], Z),
) -> Result<()> {
    let bound = search_bound(tau);
    if bound > ranking.max_len() {
        return Err(Error::BoundViolation {
            needed: bound,
            bound: ranking.max_len(),
        });
    }
    let universe = ranking.universe();
    for obs in tau.as_slice() {
        universe.check_member(*obs)?;
    }
    for len in 1..=bound {
        ranking.for_each_of_len(len, |h, z| {
            if explains_models(h, tau.as_slice()) {
                visit(h, z);
            }
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_formula;

    fn k2() -> Universe {
        Universe::with_atoms(2).unwrap()
    }

    fn obs(texts: &[&str]) -> ObservationSequence {
        let u = k2();
        let fs: Vec<Formula> = texts
            .iter()
            .map(|t| parse_formula(t, &u).unwrap())
            .collect();
        ObservationSequence::from_formulas(&fs, &u).unwrap()
    }

    fn h(ms: &[usize]) -> History {
        History::new(ms.to_vec()).unwrap()
    }

    #[test]
    fn one_model_explains_consecutive_observations() {
        assert!(explains(&h(&[3]), &obs(&["p0", "p1"])));
        assert!(explains(&h(&[1, 2]), &obs(&["p0", "p1"])));
        assert!(!explains(&h(&[2, 1]), &obs(&["p0", "p1"])));
        assert!(explains(&h(&[0]), &ObservationSequence::empty()));
    }

    #[test]
    fn subhistory_examples() {
        assert!(is_subhistory(&h(&[2, 4]), &h(&[1, 2, 3, 4])));
        assert!(!is_subhistory(&h(&[1, 2, 3, 4]), &h(&[1, 2, 3, 4])));
        assert!(!is_subhistory(&h(&[4, 2]), &h(&[1, 2, 3, 4])));
        assert!(is_subhistory(&h(&[1, 1]), &h(&[1, 2, 1])));
    }

    #[test]
    fn empty_history_rejected() {
        assert!(History::new(vec![]).is_err());
        assert!(ObservationSequence::new(vec![ModelSet::EMPTY]).is_err());
    }

    #[test]
    fn preferred_single_observation() {
        let r = GeneralRanking::canonical(k2(), 2);
        let p = preferred_histories(&obs(&["p0 & p1"]), &r).unwrap();
        assert_eq!(p, vec![h(&[3])]);
    }

    #[test]
    fn preferred_two_observations() {
        let r = GeneralRanking::canonical(k2(), 2);
        let p = preferred_histories(&obs(&["p0", "p1"]), &r).unwrap();
        assert_eq!(p, vec![h(&[3])]);
    }

    #[test]
    fn empty_sequence_prefers_all_singletons_under_canonical() {
        let r = GeneralRanking::canonical(k2(), 2);
        let p = preferred_histories(&ObservationSequence::empty(), &r).unwrap();
        assert_eq!(p, (0..4).map(|m| h(&[m])).collect::<Vec<_>>());
        assert_eq!(
            update_general(&ObservationSequence::empty(), &r).unwrap(),
            k2().full()
        );
    }

    #[test]
    fn update_contradicting_observations() {
        let r = GeneralRanking::canonical(k2(), 2);
        let got = update_general(&obs(&["p0", "!p0"]), &r).unwrap();
        assert_eq!(got, ModelSet::from_models([0, 2]));
        let got = update_general(&obs(&["p0", "p1"]), &r).unwrap();
        assert_eq!(got, ModelSet::singleton(3));
    }

    #[test]
    fn bound_violation() {
        let r = GeneralRanking::canonical(k2(), 1);
        assert!(matches!(
            update_general(&obs(&["p0", "p1"]), &r),
            Err(Error::BoundViolation {
                needed: 2,
                bound: 1
            })
        ));
    }
}
