use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SetSequence;
use crate::logic::{ModelSet, Universe};
use crate::{Error, Rank, Result};

const TUPLE_BUDGET: u128 = 1 << 24;

/// A ranking `r: X^n -> Z` of length-`n` histories.
///
/// Ranks are stored densely, tuples in mixed radix with the first coordinate
/// most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedRanking<Z = u32> {
    universe: Universe,
    n: usize,
    ranks: Vec<Z>,
}

impl<Z: Rank> FixedRanking<Z> {
    pub fn from_fn(
        universe: Universe,
        n: usize,
        mut rank: impl FnMut(&[usize]) -> Z,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("dimension must be at least 1".into()));
        }
        let m = universe.size();
        let total = (m as u128).saturating_pow(n as u32);
        if total > TUPLE_BUDGET {
            return Err(Error::BudgetExceeded {
                what: "ranked tuples",
                needed: total,
                budget: TUPLE_BUDGET,
            });
        }
        let mut ranks = Vec::with_capacity(total as usize);
        let mut buf = vec![0usize; n];
        for idx in 0..total as usize {
            let mut rest = idx;
            for slot in buf.iter_mut().rev() {
                *slot = rest % m;
                rest /= m;
            }
            ranks.push(rank(&buf));
        }
        Ok(FixedRanking { universe, n, ranks })
    }

    /// Ranks listed in tuple order; `ranks.len()` must be `|X|^n`.
    pub fn from_ranks(universe: Universe, n: usize, ranks: Vec<Z>) -> Result<Self> {
        let expected = universe.size().checked_pow(n as u32);
        if n == 0 || expected != Some(ranks.len()) {
            return Err(Error::DimensionMismatch {
                expected: expected.unwrap_or(usize::MAX),
                found: ranks.len(),
            });
        }
        Ok(FixedRanking { universe, n, ranks })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn ranks(&self) -> &[Z] {
        &self.ranks
    }

    pub fn tuple_index(&self, tuple: &[usize]) -> Option<usize> {
        if tuple.len() != self.n {
            return None;
        }
        let m = self.universe.size();
        tuple
            .iter()
            .try_fold(0usize, |acc, &a| (a < m).then(|| acc * m + a))
    }

    pub fn rank(&self, tuple: &[usize]) -> Option<Z> {
        self.tuple_index(tuple).map(|i| self.ranks[i])
    }

    /// Every tuple with its rank, in tuple order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, Z)> + '_ {
        let m = self.universe.size();
        self.ranks.iter().enumerate().map(move |(idx, &z)| {
            let mut t = vec![0; self.n];
            let mut rest = idx;
            for slot in t.iter_mut().rev() {
                *slot = rest % m;
                rest /= m;
            }
            (t, z)
        })
    }

    /// Minimal rank over `A1 x ... x An` and the last coordinates attaining it.
    pub(crate) fn min_over(&self, sets: &[ModelSet]) -> (Z, ModelSet) {
        let m = self.universe.size();
        let lists: Vec<Vec<usize>> = sets.iter().map(|s| s.iter().collect()).collect();
        let mut pos = vec![0usize; sets.len()];
        let mut best: Option<Z> = None;
        let mut winners = ModelSet::EMPTY;
        loop {
            let mut idx = 0;
            for (list, &p) in lists.iter().zip(&pos) {
                idx = idx * m + list[p];
            }
            let z = self.ranks[idx];
            let last = lists[sets.len() - 1][pos[sets.len() - 1]];
            match best {
                Some(b) if z > b => {}
                Some(b) if z == b => winners.insert(last),
                _ => {
                    best = Some(z);
                    winners = ModelSet::singleton(last);
                }
            }
            let mut i = sets.len();
            loop {
                if i == 0 {
                    return (best.expect("non-empty product"), winners);
                }
                i -= 1;
                pos[i] += 1;
                if pos[i] < lists[i].len() {
                    break;
                }
                pos[i] = 0;
            }
        }
    }

    fn check_sequence(&self, s: &SetSequence) -> Result<()> {
        if s.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: s.len(),
            });
        }
        s.as_slice()
            .iter()
            .try_for_each(|set| self.universe.check_member(*set))
    }
}

impl FixedRanking<u32> {
    /// Number of model changes along the tuple. For `n = 2` this is the
    /// inertia ranking `r(a, b) = [a != b]`.
    pub fn canonical(universe: Universe, n: usize) -> Result<Self> {
        Self::from_fn(universe, n, |t| {
            t.windows(2).filter(|w| w[0] != w[1]).count() as u32
        })
    }

    /// Uniform random ranks in `0..levels`, seeded.
    pub fn random(universe: Universe, n: usize, levels: u32, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::from_fn(universe, n, |_| rng.gen_range(0..levels.max(1)))
    }
}

/// `[A1 ... An]` under `r`: last coordinates of minimal-rank tuples.
pub fn update_from_ranking<Z: Rank>(r: &FixedRanking<Z>, s: &SetSequence) -> Result<ModelSet> {
    r.check_sequence(s)?;
    Ok(r.min_over(s.as_slice()).1)
}

/// `r(A1, ..., An)`: the minimal rank over the product.
pub fn rank_of_set_sequence<Z: Rank>(r: &FixedRanking<Z>, s: &SetSequence) -> Result<Z> {
    r.check_sequence(s)?;
    Ok(r.min_over(s.as_slice()).0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x2() -> Universe {
        Universe::abstract_size(2).unwrap()
    }

    fn seq(s: &str) -> SetSequence {
        s.parse().unwrap()
    }

    #[test]
    fn inertia_examples() {
        let r = FixedRanking::canonical(x2(), 2).unwrap();
        assert_eq!(
            update_from_ranking(&r, &seq("{0};{0,1}")).unwrap(),
            ModelSet::singleton(0)
        );
        assert_eq!(
            update_from_ranking(&r, &seq("{0,1};{0,1}")).unwrap(),
            ModelSet::full(2)
        );
        assert_eq!(rank_of_set_sequence(&r, &seq("{0,1};{0,1}")).unwrap(), 0);
        assert_eq!(rank_of_set_sequence(&r, &seq("{0};{1}")).unwrap(), 1);
    }

    #[test]
    fn intersection_under_inertia() {
        let u = Universe::abstract_size(3).unwrap();
        let r = FixedRanking::canonical(u, 2).unwrap();
        for a in u.nonempty_sets() {
            for b in u.nonempty_sets() {
                if a.intersects(b) {
                    let s = SetSequence::new(vec![a, b]).unwrap();
                    assert_eq!(update_from_ranking(&r, &s).unwrap(), a & b);
                }
            }
        }
    }

    #[test]
    fn singleton_rank_is_tuple_rank() {
        let r = FixedRanking::random(x2(), 3, 5, 11).unwrap();
        for (t, z) in r.entries() {
            let s = SetSequence::new(t.iter().map(|&a| ModelSet::singleton(a)).collect()).unwrap();
            assert_eq!(rank_of_set_sequence(&r, &s).unwrap(), z);
        }
    }

    #[test]
    fn errors() {
        let r = FixedRanking::canonical(x2(), 2).unwrap();
        assert!(matches!(
            update_from_ranking(&r, &seq("{0};{0};{0}")),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        ));
        assert!(update_from_ranking(&r, &seq("{0};{2}")).is_err());
        assert!(FixedRanking::from_ranks(x2(), 2, vec![0u32; 3]).is_err());
    }

    #[test]
    fn generic_rank_scale() {
        use std::cmp::Reverse;
        let r = FixedRanking::from_fn(x2(), 2, |t| Reverse(t[0] + t[1])).unwrap();
        assert_eq!(
            update_from_ranking(&r, &seq("{0,1};{0,1}")).unwrap(),
            ModelSet::singleton(1)
        );
    }
}
