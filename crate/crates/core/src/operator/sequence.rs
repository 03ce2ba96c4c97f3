use std::fmt;
use std::str::FromStr;

use crate::logic::{ModelSet, Universe};
use crate::{Error, Result};

/// A sequence `A1 ... An` of non-empty model sets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetSequence(Vec<ModelSet>);

impl SetSequence {
    pub fn new(sets: Vec<ModelSet>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::Precondition(
                "set sequences have dimension at least 1".into(),
            ));
        }
        if let Some(i) = sets.iter().position(|s| s.is_empty()) {
            return Err(Error::EmptySet(format!("coordinate {i} of a set sequence")));
        }
        Ok(SetSequence(sets))
    }

    pub fn as_slice(&self) -> &[ModelSet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn last(&self) -> ModelSet {
        *self.0.last().expect("non-empty")
    }

    /// Pointwise inclusion `self_i ⊆ other_i` for every coordinate.
    pub fn is_pointwise_subset(&self, other: &SetSequence) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a.is_subset(*b))
    }

    /// Number of tuples in the product.
    pub fn product_size(&self) -> usize {
        self.0.iter().map(|s| s.len()).product()
    }

    pub fn contains_tuple(&self, tuple: &[usize]) -> bool {
        tuple.len() == self.len() && self.0.iter().zip(tuple).all(|(s, &a)| s.contains(a))
    }
}

/// Table syntax: `{0};{0,1};{1}`.
impl fmt::Display for SetSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SetSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SetSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sets = s
            .split(';')
            .map(str::parse)
            .collect::<Result<Vec<ModelSet>>>()?;
        SetSequence::new(sets)
    }
}

/// Indexing of all set sequences of dimension `n` over a universe.
///
/// Index order is lexicographic on coordinates (first most significant), each
/// coordinate ordered by its mask, so indices sort the same way the canonical
/// table rows do.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SequenceSpace {
    universe: Universe,
    n: usize,
    sets: usize,
    stride: Vec<usize>,
    nodes: usize,
}

/// Largest number of set sequences a space may hold.
pub const SPACE_LIMIT: u128 = 1 << 26;

impl SequenceSpace {
    pub fn new(universe: Universe, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("dimension must be at least 1".into()));
        }
        let sets = universe
            .nonempty_set_count()
            .filter(|&s| s <= 1 << 20)
            .ok_or_else(|| Error::BudgetExceeded {
                what: "subsets of the universe",
                needed: 1u128 << universe.size().min(127),
                budget: 1 << 20,
            })? as usize;
        let nodes = (sets as u128).saturating_pow(n as u32);
        if nodes > SPACE_LIMIT {
            return Err(Error::BudgetExceeded {
                what: "set sequences",
                needed: nodes,
                budget: SPACE_LIMIT,
            });
        }
        let stride = (0..n).map(|i| sets.pow((n - 1 - i) as u32)).collect();
        Ok(SequenceSpace {
            universe,
            n,
            sets,
            stride,
            nodes: nodes as usize,
        })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    /// Number of non-empty subsets of the universe.
    pub fn set_count(&self) -> usize {
        self.sets
    }

    #[inline]
    pub fn coord(&self, idx: usize, i: usize) -> ModelSet {
        ModelSet::from_bits(((idx / self.stride[i]) % self.sets + 1) as u64)
    }

    #[inline]
    pub fn last(&self, idx: usize) -> ModelSet {
        ModelSet::from_bits((idx % self.sets + 1) as u64)
    }

    /// Index of the sequence equal to `idx` except coordinate `i` is `set`.
    #[inline]
    pub fn with_coord(&self, idx: usize, i: usize, set: ModelSet) -> usize {
        let old = (idx / self.stride[i]) % self.sets;
        let new = set.bits() as usize - 1;
        idx - old * self.stride[i] + new * self.stride[i]
    }

    /// Index of a sequence given by raw non-empty coordinates.
    pub fn index_of(&self, sets: &[ModelSet]) -> Result<usize> {
        if sets.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: sets.len(),
            });
        }
        let mut idx = 0;
        for s in sets {
            if s.is_empty() {
                return Err(Error::EmptySet("set sequence coordinate".into()));
            }
            self.universe.check_member(*s)?;
            idx = idx * self.sets + (s.bits() as usize - 1);
        }
        Ok(idx)
    }

    pub fn index(&self, seq: &SetSequence) -> Result<usize> {
        self.index_of(seq.as_slice())
    }

    pub fn sequence(&self, idx: usize) -> SetSequence {
        SetSequence((0..self.n).map(|i| self.coord(idx, i)).collect())
    }

    /// Writes the coordinates of `idx` into `buf` (length `n`).
    #[inline]
    pub fn decode_into(&self, idx: usize, buf: &mut [ModelSet]) {
        for (i, slot) in buf.iter_mut().enumerate() {
            *slot = self.coord(idx, i);
        }
    }

    /// Pointwise inclusion of the sequences at two indices.
    #[inline]
    pub fn is_pointwise_subset(&self, sub: usize, sup: usize) -> bool {
        (0..self.n).all(|i| self.coord(sub, i).is_subset(self.coord(sup, i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x2() -> Universe {
        Universe::abstract_size(2).unwrap()
    }

    #[test]
    fn index_roundtrip() {
        let space = SequenceSpace::new(x2(), 3).unwrap();
        assert_eq!(space.node_count(), 27);
        for idx in 0..27 {
            let seq = space.sequence(idx);
            assert_eq!(space.index(&seq).unwrap(), idx);
        }
        assert_eq!(space.sequence(0).to_string(), "{0};{0};{0}");
        assert_eq!(space.sequence(26).to_string(), "{0,1};{0,1};{0,1}");
    }

    #[test]
    fn with_coord_replaces_one_coordinate() {
        let space = SequenceSpace::new(x2(), 3).unwrap();
        let idx = space.index(&"{1};{0};{0,1}".parse().unwrap()).unwrap();
        let j = space.with_coord(idx, 1, ModelSet::full(2));
        assert_eq!(space.sequence(j).to_string(), "{1};{0,1};{0,1}");
    }

    #[test]
    fn rejects_bad_sequences() {
        let space = SequenceSpace::new(x2(), 2).unwrap();
        assert!(space.index_of(&[ModelSet::singleton(0)]).is_err());
        assert!(space
            .index_of(&[ModelSet::singleton(0), ModelSet::EMPTY])
            .is_err());
        assert!(space
            .index_of(&[ModelSet::singleton(0), ModelSet::singleton(2)])
            .is_err());
        assert!("{0};{}".parse::<SetSequence>().is_err());
    }
}
