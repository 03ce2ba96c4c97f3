use std::collections::HashSet;

use rayon::prelude::*;

use crate::logic::ModelSet;
use crate::operator::{FixedRanking, OperatorTable, SequenceSpace};
use crate::{Error, Result};

/// Default bound on `|X|^n` for the brute-force search.
pub const DEFAULT_ORACLE_BUDGET: usize = 8;

/// Number of weak orders on `n` elements (ordered Bell number).
pub fn weak_order_count(n: usize) -> u128 {
    // a(n) = sum_{k=1..n} C(n,k) a(n-k)
    let mut a = vec![1u128; n + 1];
    for m in 1..=n {
        let mut binom = 1u128;
        let mut total = 0u128;
        for k in 1..=m {
            binom = binom * (m - k + 1) as u128 / k as u128;
            total += binom * a[m - k];
        }
        a[m] = total;
    }
    a[n]
}

/// Set partitions of `0..n` as restricted growth strings, with block counts.
fn set_partitions(n: usize) -> Vec<(Vec<u8>, usize)> {
    fn go(rgs: &mut Vec<u8>, blocks: usize, n: usize, out: &mut Vec<(Vec<u8>, usize)>) {
        if rgs.len() == n {
            out.push((rgs.clone(), blocks));
            return;
        }
        for b in 0..=blocks {
            rgs.push(b as u8);
            go(rgs, blocks.max(b + 1), n, out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), 0, n, &mut out);
    out
}

/// Calls `f` with every assignment of distinct levels `0..k` to the `k`
/// blocks; stops when `f` returns false.
fn for_each_block_order(k: usize, f: &mut impl FnMut(&[u32]) -> bool) -> bool {
    fn go(level: &mut [u32], used: u64, depth: usize, f: &mut impl FnMut(&[u32]) -> bool) -> bool {
        let k = level.len();
        if depth == k {
            return f(level);
        }
        for v in 0..k as u32 {
            if used >> v & 1 == 0 {
                level[depth] = v;
                if !go(level, used | 1 << v, depth + 1, f) {
                    return false;
                }
            }
        }
        true
    }
    let mut level = vec![0u32; k];
    go(&mut level, 0, 0, f)
}

/// Calls `f` with the rank vector of every weak order on `0..n`, ranks
/// normalized onto `0..blocks`. Sequential and lazy; stops when `f` returns
/// false.
pub fn for_each_weak_order(n: usize, mut f: impl FnMut(&[u32]) -> bool) {
    fn go(
        rgs: &mut Vec<u8>,
        blocks: usize,
        n: usize,
        ranks: &mut [u32],
        f: &mut impl FnMut(&[u32]) -> bool,
    ) -> bool {
        if rgs.len() == n {
            return for_each_block_order(blocks, &mut |level| {
                for (r, &b) in ranks.iter_mut().zip(rgs.iter()) {
                    *r = level[b as usize];
                }
                f(ranks)
            });
        }
        for b in 0..=blocks {
            rgs.push(b as u8);
            let go_on = go(rgs, blocks.max(b + 1), n, ranks, f);
            rgs.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut ranks = vec![0u32; n];
    go(&mut Vec::with_capacity(n), 0, n, &mut ranks, &mut f);
}

/// For every sequence index, the tuples of its product as
/// `(tuple index, last model)`.
struct Products {
    lists: Vec<Vec<(u32, u8)>>,
}

impl Products {
    fn new(space: &SequenceSpace) -> Self {
        let m = space.universe().size();
        let n = space.dimension();
        let lists = (0..space.node_count())
            .map(|idx| {
                let mut list = vec![(0u32, 0u8)];
                for i in 0..n {
                    let set = space.coord(idx, i);
                    list = list
                        .into_iter()
                        .flat_map(|(t, _)| {
                            set.iter().map(move |a| (t * m as u32 + a as u32, a as u8))
                        })
                        .collect();
                }
                list
            })
            .collect();
        Products { lists }
    }

    #[inline]
    fn row(&self, idx: usize, ranks: &[u32]) -> ModelSet {
        let mut best = u32::MAX;
        let mut winners = 0u64;
        for &(t, a) in &self.lists[idx] {
            let z = ranks[t as usize];
            if z < best {
                best = z;
                winners = 1 << a;
            } else if z == best {
                winners |= 1 << a;
            }
        }
        ModelSet::from_bits(winners)
    }
}

fn check_budget(space: &SequenceSpace, budget: usize) -> Result<usize> {
    let tuples = (space.universe().size() as u128).saturating_pow(space.dimension() as u32);
    if tuples > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: "ranked tuples for brute-force search",
            needed: tuples,
            budget: budget as u128,
        });
    }
    Ok(tuples as usize)
}

/// Searches every weak order on `X^n` for one inducing `table`.
///
/// Returns the first ranking found in enumeration order, so the answer is
/// deterministic despite the parallel search.
pub fn find_representing_ranking(
    table: &OperatorTable,
    budget: usize,
) -> Result<Option<FixedRanking<u32>>> {
    let space = table.space();
    let tuples = check_budget(space, budget)?;
    let products = Products::new(space);
    // Rows whose last set is a singleton are forced; compare the rest, widest first.
    let mut order: Vec<usize> = (0..space.node_count()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(products.lists[i].len()));
    if order
        .iter()
        .any(|&i| space.last(i).len() == 1 && table.get(i) != space.last(i))
    {
        return Ok(None);
    }
    order.retain(|&i| space.last(i).len() > 1);

    let found = set_partitions(tuples)
        .into_par_iter()
        .find_map_first(|(rgs, k)| {
            let mut ranks = vec![0u32; tuples];
            let mut hit = None;
            for_each_block_order(k, &mut |level| {
                for (r, &b) in ranks.iter_mut().zip(&rgs) {
                    *r = level[b as usize];
                }
                if order
                    .iter()
                    .all(|&i| products.row(i, &ranks) == table.get(i))
                {
                    hit = Some(ranks.clone());
                    return false;
                }
                true
            });
            hit
        });
    Ok(found.map(|ranks| {
        FixedRanking::from_ranks(space.universe(), space.dimension(), ranks)
            .expect("rank vector sized to X^n")
    }))
}

/// True iff some ranking of `X^n` induces `table`.
pub fn is_representable_bruteforce(table: &OperatorTable, budget: usize) -> Result<bool> {
    Ok(find_representing_ranking(table, budget)?.is_some())
}

/// Every table induced by some ranking over one space, built in a single
/// pass over all weak orders.
#[derive(Clone, Debug)]
pub struct RepresentableSet {
    space: SequenceSpace,
    free: Vec<usize>,
    tables: HashSet<Box<[ModelSet]>>,
}

impl RepresentableSet {
    pub fn build(space: &SequenceSpace, budget: usize) -> Result<Self> {
        let tuples = check_budget(space, budget)?;
        let products = Products::new(space);
        let free: Vec<usize> = (0..space.node_count())
            .filter(|&i| space.last(i).len() > 1)
            .collect();
        let tables = set_partitions(tuples)
            .into_par_iter()
            .fold(HashSet::new, |mut acc, (rgs, k)| {
                let mut ranks = vec![0u32; tuples];
                for_each_block_order(k, &mut |level| {
                    for (r, &b) in ranks.iter_mut().zip(&rgs) {
                        *r = level[b as usize];
                    }
                    acc.insert(free.iter().map(|&i| products.row(i, &ranks)).collect());
                    true
                });
                acc
            })
            .reduce(HashSet::new, |mut a, b| {
                if a.len() < b.len() {
                    return b.into_iter().chain(a).collect();
                }
                a.extend(b);
                a
            });
        Ok(RepresentableSet {
            space: space.clone(),
            free,
            tables,
        })
    }

    pub fn space(&self) -> &SequenceSpace {
        &self.space
    }

    /// Number of distinct representable tables.
    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    pub fn contains(&self, table: &OperatorTable) -> bool {
        if table.space() != &self.space {
            return false;
        }
        let forced_ok = (0..self.space.node_count())
            .filter(|&i| self.space.last(i).len() == 1)
            .all(|i| table.get(i) == self.space.last(i));
        if !forced_ok {
            return false;
        }
        let key: Box<[ModelSet]> = self.free.iter().map(|&i| table.get(i)).collect();
        self.tables.contains(&key)
    }
}
