use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::operator::{SequenceSpace, SetSequence};
use crate::Result;

use super::PatchMode;

/// Which definition of "provably preferable" a relation was built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Pairs; right and left cases with exact-equality shape.
    TwoDTight,
    /// Pairs; adds pointwise inclusion, union-shaped targets.
    TwoDWide,
    /// Triples; right, middle and left cases.
    ThreeDTight,
    /// Triples; adds pointwise inclusion, union-shaped targets.
    ThreeDWide,
    /// Any dimension; inclusion, last-coordinate and patch cases.
    NdPatch(PatchMode),
}

impl Variant {
    pub fn required_dimension(self) -> Option<usize> {
        match self {
            Variant::TwoDTight | Variant::TwoDWide => Some(2),
            Variant::ThreeDTight | Variant::ThreeDWide => Some(3),
            Variant::NdPatch(_) => None,
        }
    }
}

/// A directed graph on all set sequences of one space, as a dense bit matrix.
///
/// An edge `s' -> s` reads "`s'` is provably at least as preferable as `s`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    space: SequenceSpace,
    variant: Variant,
    words: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn empty(space: SequenceSpace, variant: Variant) -> Self {
        let n = space.node_count();
        let words = n.div_ceil(64);
        Relation {
            space,
            variant,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_edges(
        space: SequenceSpace,
        variant: Variant,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut r = Self::empty(space, variant);
        for (a, b) in edges {
            r.add_edge(a, b);
        }
        r
    }

    pub fn space(&self) -> &SequenceSpace {
        &self.space
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn node_count(&self) -> usize {
        self.space.node_count()
    }

    #[inline]
    pub fn add_edge(&mut self, from: usize, to: usize) {
        self.bits[from * self.words + to / 64] |= 1 << (to % 64);
    }

    #[inline]
    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.bits[from * self.words + to / 64] >> (to % 64) & 1 == 1
    }

    /// Edge lookup by sequence.
    pub fn relates(&self, from: &SetSequence, to: &SetSequence) -> Result<bool> {
        Ok(self.has_edge(self.space.index(from)?, self.space.index(to)?))
    }

    fn row(&self, from: usize) -> &[u64] {
        &self.bits[from * self.words..(from + 1) * self.words]
    }

    pub fn successors(&self, from: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(from).iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.node_count()).flat_map(move |a| self.successors(a).map(move |b| (a, b)))
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Shortest edge path from `from` to `to` (at least one edge), endpoints included.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let n = self.node_count();
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in self.successors(from) {
            if parent[s] == usize::MAX {
                parent[s] = from;
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![to];
                let mut cur = to;
                loop {
                    cur = parent[cur];
                    path.push(cur);
                    if cur == from {
                        break;
                    }
                }
                path.reverse();
                return Some(path);
            }
            for s in self.successors(v) {
                if parent[s] == usize::MAX {
                    parent[s] = v;
                    queue.push_back(s);
                }
            }
        }
        None
    }

    /// One edge per line: `{..};{..} -> {..};{..}`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.edges() {
            let _ = writeln!(
                out,
                "{} -> {}",
                self.space.sequence(a),
                self.space.sequence(b)
            );
        }
        out
    }
}

/// Transitive closure `R*`. No reflexive pairs are added beyond those on cycles.
pub fn transitive_closure(r: &Relation) -> Relation {
    let mut c = r.clone();
    let n = c.node_count();
    let w = c.words;
    for k in 0..n {
        let row_k: Vec<u64> = c.row(k).to_vec();
        for i in 0..n {
            if c.has_edge(i, k) {
                let row_i = &mut c.bits[i * w..(i + 1) * w];
                for (dst, src) in row_i.iter_mut().zip(&row_k) {
                    *dst |= src;
                }
            }
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::Universe;

    fn space(nodes_universe: usize, n: usize) -> SequenceSpace {
        SequenceSpace::new(Universe::abstract_size(nodes_universe).unwrap(), n).unwrap()
    }

    #[test]
    fn chain_closes() {
        let s = space(2, 2);
        let r = Relation::from_edges(s, Variant::TwoDTight, [(0, 1), (1, 2)]);
        let c = transitive_closure(&r);
        assert!(c.has_edge(0, 2));
        assert!(!c.has_edge(2, 0));
        assert!(!c.has_edge(0, 0));
        assert_eq!(c.edge_count(), 3);
    }

    #[test]
    fn empty_closure() {
        let r = Relation::empty(space(2, 2), Variant::TwoDTight);
        assert_eq!(transitive_closure(&r).edge_count(), 0);
    }

    #[test]
    fn cycles_become_reflexive() {
        let r = Relation::from_edges(space(2, 2), Variant::TwoDTight, [(3, 4), (4, 3)]);
        let c = transitive_closure(&r);
        assert!(c.has_edge(3, 3) && c.has_edge(4, 4));
    }

    #[test]
    fn shortest_paths() {
        let r = Relation::from_edges(
            space(2, 2),
            Variant::TwoDWide,
            [(0, 1), (1, 2), (2, 3), (0, 3)],
        );
        assert_eq!(r.shortest_path(0, 3), Some(vec![0, 3]));
        assert_eq!(r.shortest_path(1, 3), Some(vec![1, 2, 3]));
        assert_eq!(r.shortest_path(3, 0), None);
        assert_eq!(r.shortest_path(0, 0), None);
    }

    #[test]
    fn wide_rows() {
        // 7^3 = 343 nodes spans several words per row.
        let s = space(3, 3);
        let r = Relation::from_edges(s, Variant::ThreeDWide, [(0, 300), (300, 70), (70, 342)]);
        let c = transitive_closure(&r);
        assert!(c.has_edge(0, 342));
        assert_eq!(c.successors(0).collect::<Vec<_>>(), vec![70, 300, 342]);
    }
}
