//! The built-in three-place counterexample and exhaustive or sampled sweeps
//! over all operator tables of a space.

mod sweep;

pub use sweep::{sweep, ConditionSet, Reference, SweepOptions, SweepResult};

use crate::logic::{ModelSet, Universe};
use crate::operator::{OperatorTable, SequenceSpace};
use crate::{Error, Result};

/// Default cap on the number of tables [`enumerate_operators`] will produce.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 1 << 24;

/// The operator on `X = {0,1}`, `n = 3`, that satisfies all six coordinate-wise
/// conditions under the tight relation yet is induced by no ranking.
///
/// With `0 = {0}`, `1 = {1}`, `X = {0,1}`: rows ending in a singleton return
/// it; rows ending in `X` are
///
/// ```text
/// 0·0 -> 0   0·1 -> 0   0·X -> 0
/// 1·0 -> 1   1·1 -> X   1·X -> 1
/// X·0 -> 0   X·1 -> X   X·X -> X
/// ```
pub fn builtin_counterexample() -> OperatorTable {
    let universe = Universe::abstract_size(2).expect("two points");
    let space = SequenceSpace::new(universe, 3).expect("27 sequences");
    OperatorTable::from_fn(space.clone(), |idx| {
        let c = space.last(idx);
        if c.len() == 1 {
            return c;
        }
        let bits = match (space.coord(idx, 0).bits(), space.coord(idx, 1).bits()) {
            (1, 1) | (1, 2) | (1, 3) | (3, 1) => 0b01,
            (2, 1) | (2, 3) => 0b10,
            _ => 0b11,
        };
        ModelSet::from_bits(bits)
    })
    .expect("rows are non-empty")
}

/// Number of tables with every row a non-empty subset of its last set:
/// the product over rows of `2^|C| - 1`.
pub fn operator_count(space: &SequenceSpace) -> u128 {
    (0..space.node_count())
        .map(|i| (1u128 << space.last(i).len()) - 1)
        .try_fold(1u128, |acc, c| acc.checked_mul(c))
        .unwrap_or(u128::MAX)
}

/// Every non-empty subset of `set`, in increasing mask order.
fn row_choices(set: ModelSet) -> Vec<ModelSet> {
    crate::relations::submasks(set).skip(1).collect()
}

/// Decodes table number `index` in the enumeration order of
/// [`enumerate_operators`].
pub(crate) fn operator_at(
    space: &SequenceSpace,
    choices: &[Vec<ModelSet>],
    mut index: u128,
) -> OperatorTable {
    let mut rows = vec![ModelSet::EMPTY; space.node_count()];
    for (row, opts) in rows.iter_mut().zip(choices).rev() {
        let k = opts.len() as u128;
        *row = opts[(index % k) as usize];
        index /= k;
    }
    OperatorTable::new(space.clone(), rows).expect("choices are non-empty subsets")
}

pub(crate) fn all_row_choices(space: &SequenceSpace) -> Vec<Vec<ModelSet>> {
    (0..space.node_count())
        .map(|i| row_choices(space.last(i)))
        .collect()
}

/// All tables whose rows are non-empty subsets of the last input set.
///
/// Tables come in lexicographic order: rows in sequence order, the first row
/// most significant, each row running through its options by increasing mask.
pub fn enumerate_operators(
    space: &SequenceSpace,
    budget: u128,
) -> Result<impl Iterator<Item = OperatorTable> + '_> {
    let total = operator_count(space);
    if total > budget {
        return Err(Error::BudgetExceeded {
            what: "operator tables",
            needed: total,
            budget,
        });
    }
    let choices = all_row_choices(space);
    Ok((0..total).map(move |i| operator_at(space, &choices, i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(m: usize, n: usize) -> SequenceSpace {
        SequenceSpace::new(Universe::abstract_size(m).unwrap(), n).unwrap()
    }

    #[test]
    fn counterexample_rows() {
        let t = builtin_counterexample();
        let row = |s: &str| t.apply(&s.parse().unwrap()).unwrap().to_string();
        assert_eq!(row("{1};{1};{0,1}"), "{0,1}");
        assert_eq!(row("{0,1};{0};{0,1}"), "{0}");
        assert_eq!(row("{1};{0,1};{0,1}"), "{1}");
        assert_eq!(row("{0,1};{1};{0}"), "{0}");
        for idx in 0..27 {
            let c = t.space().last(idx);
            assert!(t.get(idx).is_subset(c));
            if c.len() == 1 {
                assert_eq!(t.get(idx), c);
            }
        }
    }

    #[test]
    fn operator_counts() {
        assert_eq!(operator_count(&space(2, 3)), 19683);
        assert_eq!(operator_count(&space(2, 2)), 27);
        assert_eq!(operator_count(&space(1, 3)), 1);
        assert_eq!(enumerate_operators(&space(2, 2), 100).unwrap().count(), 27);
        assert_eq!(enumerate_operators(&space(1, 4), 100).unwrap().count(), 1);
        assert!(enumerate_operators(&space(2, 3), 100).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic_and_distinct() {
        let s = space(2, 2);
        let tables: Vec<_> = enumerate_operators(&s, 100).unwrap().collect();
        for w in tables.windows(2) {
            assert!(w[0].rows() < w[1].rows());
        }
        assert!(tables
            .iter()
            .all(|t| (0..9).all(|i| t.get(i).is_subset(s.last(i)))));
    }
}
