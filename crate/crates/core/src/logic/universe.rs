use super::ModelSet;
use crate::{Error, Result};

/// Largest universe a [`ModelSet`] can address.
pub const MAX_MODELS: usize = 64;

/// A finite, complete universe of models.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Universe {
    atoms: Option<usize>,
    size: usize,
}

impl Universe {
    /// The `2^k` truth assignments over atoms `p0..p{k-1}`.
    pub fn with_atoms(k: usize) -> Result<Self> {
        if k > 6 {
            return Err(Error::InvalidUniverse(format!(
                "{k} atoms give more than {MAX_MODELS} models"
            )));
        }
        Ok(Universe {
            atoms: Some(k),
            size: 1 << k,
        })
    }

    /// An abstract universe of `m` points with no atoms.
    pub fn abstract_size(m: usize) -> Result<Self> {
        if m == 0 || m > MAX_MODELS {
            return Err(Error::InvalidUniverse(format!(
                "abstract universe size must be in 1..={MAX_MODELS}, got {m}"
            )));
        }
        Ok(Universe {
            atoms: None,
            size: m,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn atom_count(&self) -> Option<usize> {
        self.atoms
    }

    pub fn full(&self) -> ModelSet {
        ModelSet::full(self.size)
    }

    /// Number of non-empty subsets, `2^size - 1`, if it fits in a `u64`.
    pub fn nonempty_set_count(&self) -> Option<u64> {
        (self.size < 64).then(|| (1u64 << self.size) - 1)
    }

    /// Non-empty subsets in canonical (mask) order.
    pub fn nonempty_sets(&self) -> impl Iterator<Item = ModelSet> {
        let top = self
            .nonempty_set_count()
            .expect("universe too large to enumerate subsets");
        (1..=top).map(ModelSet::from_bits)
    }

    pub fn contains(&self, set: ModelSet) -> bool {
        set.is_subset(self.full())
    }

    pub(crate) fn check_member(&self, set: ModelSet) -> Result<()> {
        if self.contains(set) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch(format!(
                "{set} is not a subset of a universe of {} models",
                self.size
            )))
        }
    }

    /// Header fragment used by the text formats: `atoms=k` or `universe=m`.
    pub fn header(&self) -> String {
        match self.atoms {
            Some(k) => format!("atoms={k}"),
            None => format!("universe={}", self.size),
        }
    }
}
