use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};
use std::str::FromStr;

use crate::Error;

/// A set of models, stored as a bitmask over model indices `0..64`.
///
/// Ordering is by the raw mask, which is the canonical order used for table
/// rows and tie-breaking everywhere in the crate.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModelSet(u64);

impl ModelSet {
    pub const EMPTY: ModelSet = ModelSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ModelSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All models `0..size`.
    pub fn full(size: usize) -> Self {
        debug_assert!(size <= 64);
        if size == 64 {
            ModelSet(u64::MAX)
        } else {
            ModelSet((1u64 << size) - 1)
        }
    }

    pub fn singleton(model: usize) -> Self {
        debug_assert!(model < 64);
        ModelSet(1 << model)
    }

    pub fn from_models<I: IntoIterator<Item = usize>>(models: I) -> Self {
        models
            .into_iter()
            .fold(ModelSet::EMPTY, |acc, m| acc | ModelSet::singleton(m))
    }

    pub fn contains(self, model: usize) -> bool {
        model < 64 && self.0 >> model & 1 == 1
    }

    pub fn insert(&mut self, model: usize) {
        self.0 |= 1 << model;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: ModelSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: ModelSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest model, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Models {
        Models(self.0)
    }
}

/// Iterator over the models of a [`ModelSet`] in increasing order.
#[derive(Clone)]
pub struct Models(u64);

impl Iterator for Models {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let m = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(m)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Models {}

impl IntoIterator for ModelSet {
    type Item = usize;
    type IntoIter = Models;

    fn into_iter(self) -> Models {
        self.iter()
    }
}

impl FromIterator<usize> for ModelSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ModelSet::from_models(iter)
    }
}

impl BitOr for ModelSet {
    type Output = ModelSet;
    fn bitor(self, rhs: ModelSet) -> ModelSet {
        ModelSet(self.0 | rhs.0)
    }
}

impl BitAnd for ModelSet {
    type Output = ModelSet;
    fn bitand(self, rhs: ModelSet) -> ModelSet {
        ModelSet(self.0 & rhs.0)
    }
}

impl Sub for ModelSet {
    type Output = ModelSet;
    fn sub(self, rhs: ModelSet) -> ModelSet {
        ModelSet(self.0 & !rhs.0)
    }
}

/// `{0,2,3}`; the empty set prints as `{}`.
impl fmt::Display for ModelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ModelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ModelSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |msg: &str| Error::Format {
            line: 0,
            msg: format!("{msg} in set `{s}`"),
        };
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| bad("expected braces"))?;
        let mut set = ModelSet::EMPTY;
        if inner.trim().is_empty() {
            return Ok(set);
        }
        for part in inner.split(',') {
            let m: usize = part.trim().parse().map_err(|_| bad("bad model index"))?;
            if m >= 64 {
                return Err(bad("model index out of range"));
            }
            set.insert(m);
        }
        Ok(set)
    }
}
