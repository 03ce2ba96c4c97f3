use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::History;
use crate::logic::Universe;
use crate::{Error, Rank, Result};

/// Upper limit on the number of histories a [`GeneralRanking`] may store.
const HISTORY_BUDGET: u128 = 1 << 24;

/// A total map from histories of length `1..=max_len` to ranks.
///
/// Storage is dense: histories of length `l` occupy a block of `m^l` slots
/// (mixed radix, first model most significant), blocks ordered by length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralRanking<Z = u32> {
    universe: Universe,
    max_len: usize,
    offsets: Vec<usize>,
    ranks: Vec<Z>,
}

/// A pair violating sub-history preference: `sub` is a strict sub-history of
/// `sup` but is not ranked strictly lower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankingViolation {
    pub sub: History,
    pub sup: History,
}

fn for_each_tuple(m: usize, len: usize, mut f: impl FnMut(&[usize])) {
    let mut buf = vec![0usize; len];
    loop {
        f(&buf);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            buf[i] += 1;
            if buf[i] < m {
                break;
            }
            buf[i] = 0;
        }
    }
}

impl<Z: Rank> GeneralRanking<Z> {
    /// Builds a ranking by evaluating `rank` on every history. No validation.
    pub fn from_fn(
        universe: Universe,
        max_len: usize,
        mut rank: impl FnMut(&[usize]) -> Z,
    ) -> Result<Self> {
        if max_len == 0 {
            return Err(Error::Precondition(
                "length bound must be at least 1".into(),
            ));
        }
        let m = universe.size() as u128;
        let total: u128 = (1..=max_len as u32).map(|l| m.saturating_pow(l)).sum();
        if total > HISTORY_BUDGET {
            return Err(Error::BudgetExceeded {
                what: "history ranking",
                needed: total,
                budget: HISTORY_BUDGET,
            });
        }
        let mut offsets = Vec::with_capacity(max_len + 1);
        let mut ranks = Vec::with_capacity(total as usize);
        for len in 1..=max_len {
            offsets.push(ranks.len());
            for_each_tuple(universe.size(), len, |h| ranks.push(rank(h)));
        }
        offsets.push(ranks.len());
        Ok(GeneralRanking {
            universe,
            max_len,
            offsets,
            ranks,
        })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Number of histories covered.
    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    fn index(&self, h: &[usize]) -> Option<usize> {
        if h.is_empty() || h.len() > self.max_len {
            return None;
        }
        let m = self.universe.size();
        let mut idx = 0;
        for &x in h {
            if x >= m {
                return None;
            }
            idx = idx * m + x;
        }
        Some(self.offsets[h.len() - 1] + idx)
    }

    /// Rank of `h`, or `None` if `h` is outside the ranking's domain.
    pub fn rank(&self, h: &[usize]) -> Option<Z> {
        self.index(h).map(|i| self.ranks[i])
    }

    pub fn set_rank(&mut self, h: &[usize], z: Z) -> Result<()> {
        let i = self.index(h).ok_or_else(|| {
            Error::Precondition(format!("history {h:?} outside the ranking's domain"))
        })?;
        self.ranks[i] = z;
        Ok(())
    }

    pub(crate) fn for_each_of_len(&self, len: usize, mut f: impl FnMut(&[usize], Z)) {
        let mut slot = self.offsets[len - 1];
        for_each_tuple(self.universe.size(), len, |h| {
            f(h, self.ranks[slot]);
            slot += 1;
        });
    }

    /// Every history with its rank, by length then lexicographically.
    pub fn entries(&self) -> Vec<(History, Z)> {
        let mut out = Vec::with_capacity(self.ranks.len());
        for len in 1..=self.max_len {
            self.for_each_of_len(len, |h, z| out.push((History(h.to_vec()), z)));
        }
        out
    }

    /// First violation of sub-history preference, if any.
    ///
    /// Checking single-model deletions suffices: every strict sub-history is
    /// reached by a chain of them and ranks compose along the chain.
    pub fn find_violation(&self) -> Option<RankingViolation> {
        let mut found = None;
        for len in 2..=self.max_len {
            self.for_each_of_len(len, |h, z| {
                if found.is_some() {
                    return;
                }
                for skip in 0..h.len() {
                    let sub: Vec<usize> = h
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &x)| x)
                        .collect();
                    if self.rank(&sub).expect("sub-history in domain") >= z {
                        found = Some(RankingViolation {
                            sub: History(sub),
                            sup: History(h.to_vec()),
                        });
                        return;
                    }
                }
            });
            if found.is_some() {
                break;
            }
        }
        found
    }

    pub fn is_valid(&self) -> bool {
        self.find_violation().is_none()
    }
}

impl GeneralRanking<u32> {
    /// Lexicographic (length, number of model changes), packed into one number.
    pub fn canonical(universe: Universe, max_len: usize) -> Self {
        let width = max_len as u32;
        Self::from_fn(universe, max_len, |h| {
            let changes = h.windows(2).filter(|w| w[0] != w[1]).count() as u32;
            h.len() as u32 * width + changes
        })
        .expect("canonical ranking within budget")
    }

    /// A seeded random ranking satisfying sub-history preference.
    ///
    /// Each history draws a random priority; its rank is the larger of that
    /// priority and one more than the rank of any single-deletion
    /// sub-history, so ranks grow strictly along the sub-history order while
    /// equal-length histories can tie.
    pub fn random_valid(universe: Universe, max_len: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spread = 3 * max_len as u32 + 1;
        let mut r = Self::from_fn(universe, max_len, |_| 0)?;
        for len in 1..=max_len {
            let mut assigned = Vec::new();
            r.for_each_of_len(len, |h, _| {
                let floor = (0..h.len())
                    .filter(|_| len > 1)
                    .map(|skip| {
                        let sub: Vec<usize> = h
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != skip)
                            .map(|(_, &x)| x)
                            .collect();
                        r.rank(&sub).unwrap() + 1
                    })
                    .max()
                    .unwrap_or(0);
                let priority = rng.gen_range(0..spread);
                assigned.push(floor.max(priority));
            });
            let start = r.offsets[len - 1];
            r.ranks[start..start + assigned.len()].copy_from_slice(&assigned);
        }
        Ok(r)
    }
}
