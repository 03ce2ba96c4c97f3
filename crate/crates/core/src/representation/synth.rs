use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::checks::check_theorem_nd;
use crate::logic::ModelSet;
use crate::operator::{FixedRanking, OperatorTable, SequenceSpace};
use crate::relations::{build_relation, transitive_closure, PatchMode, Variant};
use crate::{Error, Result};

/// Equivalence classes of `R*` in a total order extending `R`.
///
/// The position of a sequence's class is its value under `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreorderClasses {
    space: SequenceSpace,
    classes: Vec<Vec<usize>>,
    position: Vec<usize>,
}

impl PreorderClasses {
    pub fn space(&self) -> &SequenceSpace {
        &self.space
    }

    /// Classes in order, each listing member indices ascending.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `d(s)`: the position of the class of sequence index `s`.
    pub fn d(&self, s: usize) -> usize {
        self.position[s]
    }
}

/// Condenses the closed tight patch relation of `table` into ordered classes.
///
/// Classes are the strongly connected components of `R*`; they are emitted
/// in topological order, ties going to the class with the smallest member.
pub fn preorder_classes(table: &OperatorTable) -> PreorderClasses {
    let space = table.space().clone();
    let r = build_relation(table, Variant::NdPatch(PatchMode::Tight))
        .expect("patch relation has no dimension constraint");
    let c = transitive_closure(&r);
    let n = space.node_count();

    let mut comp = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if comp[i] != usize::MAX {
            continue;
        }
        let id = members.len();
        let mut group = vec![i];
        comp[i] = id;
        for j in c.successors(i) {
            if j > i && comp[j] == usize::MAX && c.has_edge(j, i) {
                comp[j] = id;
                group.push(j);
            }
        }
        group.sort_unstable();
        members.push(group);
    }

    let k = members.len();
    let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut indegree = vec![0usize; k];
    let mut seen = vec![false; k * k];
    for (a, b) in r.edges() {
        let (ca, cb) = (comp[a], comp[b]);
        if ca != cb && !seen[ca * k + cb] {
            seen[ca * k + cb] = true;
            out_edges[ca].push(cb);
            indegree[cb] += 1;
        }
    }

    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..k)
        .filter(|&x| indegree[x] == 0)
        .map(|x| Reverse((members[x][0], x)))
        .collect();
    let mut order = Vec::with_capacity(k);
    while let Some(Reverse((_, x))) = heap.pop() {
        order.push(x);
        for &y in &out_edges[x] {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                heap.push(Reverse((members[y][0], y)));
            }
        }
    }
    debug_assert_eq!(order.len(), k, "condensation is acyclic");

    let mut position = vec![0usize; n];
    let mut classes = Vec::with_capacity(k);
    for (pos, &x) in order.iter().enumerate() {
        for &m in &members[x] {
            position[m] = pos;
        }
        classes.push(std::mem::take(&mut members[x]));
    }
    PreorderClasses {
        space,
        classes,
        position,
    }
}

/// A ranking inducing `table`, read off the singleton sequences:
/// `r(a1..an) = d({a1}..{an})`.
///
/// Fails with the violated conditions when `table` does not satisfy the
/// characterization.
pub fn synthesize_ranking(table: &OperatorTable) -> Result<FixedRanking<u32>> {
    let report = check_theorem_nd(table);
    if !report.verdict() {
        let failed: Vec<String> = report
            .violations()
            .map(|v| v.condition.to_string())
            .collect();
        return Err(Error::Precondition(format!(
            "table violates condition(s): {}",
            failed.join(", ")
        )));
    }
    Ok(ranking_from_classes(&preorder_classes(table)))
}

/// Restricts `d` to singleton sequences.
pub fn ranking_from_classes(classes: &PreorderClasses) -> FixedRanking<u32> {
    let space = classes.space();
    let mut buf = vec![ModelSet::EMPTY; space.dimension()];
    FixedRanking::from_fn(space.universe(), space.dimension(), |t| {
        for (slot, &a) in buf.iter_mut().zip(t) {
            *slot = ModelSet::singleton(a);
        }
        let idx = space.index_of(&buf).expect("singletons lie in the space");
        classes.d(idx) as u32
    })
    .expect("tuple count is bounded by the sequence count")
}
