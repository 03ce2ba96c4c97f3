use super::{FixedRanking, SequenceSpace, SetSequence};
use crate::logic::{ModelSet, Universe};
use crate::{Error, Rank, Result};

/// Default cap on the number of rows materialized for a table.
pub const DEFAULT_TABLE_BUDGET: usize = 1 << 20;

/// A total operator `P(X)^n -> P(X)`, one output row per set sequence.
///
/// Outputs are non-empty subsets of the universe. Inclusion of the output in
/// the last input set is *not* enforced here: it is the first condition the
/// checkers test, so tables violating it must be representable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorTable {
    space: SequenceSpace,
    rows: Vec<ModelSet>,
}

impl OperatorTable {
    pub fn new(space: SequenceSpace, rows: Vec<ModelSet>) -> Result<Self> {
        if rows.len() != space.node_count() {
            return Err(Error::DimensionMismatch {
                expected: space.node_count(),
                found: rows.len(),
            });
        }
        let universe = space.universe();
        for (idx, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::EmptySet(format!(
                    "output for {}",
                    space.sequence(idx)
                )));
            }
            universe.check_member(*row)?;
        }
        Ok(OperatorTable { space, rows })
    }

    pub fn from_fn(space: SequenceSpace, mut f: impl FnMut(usize) -> ModelSet) -> Result<Self> {
        let rows = (0..space.node_count()).map(&mut f).collect();
        Self::new(space, rows)
    }

    pub fn space(&self) -> &SequenceSpace {
        &self.space
    }

    pub fn universe(&self) -> Universe {
        self.space.universe()
    }

    pub fn dimension(&self) -> usize {
        self.space.dimension()
    }

    pub fn rows(&self) -> &[ModelSet] {
        &self.rows
    }

    #[inline]
    pub fn get(&self, idx: usize) -> ModelSet {
        self.rows[idx]
    }

    pub fn apply(&self, seq: &SetSequence) -> Result<ModelSet> {
        Ok(self.rows[self.space.index(seq)?])
    }

    /// Copy of the table with one row replaced.
    pub fn with_row(&self, seq: &SetSequence, out: ModelSet) -> Result<Self> {
        let idx = self.space.index(seq)?;
        let mut rows = self.rows.clone();
        rows[idx] = out;
        Self::new(self.space.clone(), rows)
    }

    /// Rows that disagree between two tables of the same shape.
    pub fn diff(&self, other: &OperatorTable) -> Vec<usize> {
        (0..self.rows.len().min(other.rows.len()))
            .filter(|&i| self.rows[i] != other.rows[i])
            .collect()
    }
}

/// Materializes the operator induced by `r`.
pub fn table_from_ranking<Z: Rank>(r: &FixedRanking<Z>, budget: usize) -> Result<OperatorTable> {
    let space = SequenceSpace::new(r.universe(), r.dimension())?;
    if space.node_count() > budget {
        return Err(Error::BudgetExceeded {
            what: "operator table rows",
            needed: space.node_count() as u128,
            budget: budget as u128,
        });
    }
    let mut buf = vec![ModelSet::EMPTY; space.dimension()];
    let rows = (0..space.node_count())
        .map(|idx| {
            space.decode_into(idx, &mut buf);
            r.min_over(&buf).1
        })
        .collect();
    Ok(OperatorTable { space, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::update_from_ranking;

    fn x2() -> Universe {
        Universe::abstract_size(2).unwrap()
    }

    #[test]
    fn table_sizes() {
        let r2 = FixedRanking::canonical(x2(), 2).unwrap();
        assert_eq!(
            table_from_ranking(&r2, DEFAULT_TABLE_BUDGET)
                .unwrap()
                .rows()
                .len(),
            9
        );
        let r3 = FixedRanking::canonical(x2(), 3).unwrap();
        assert_eq!(
            table_from_ranking(&r3, DEFAULT_TABLE_BUDGET)
                .unwrap()
                .rows()
                .len(),
            27
        );
        assert!(matches!(
            table_from_ranking(&r3, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn rows_agree_with_pointwise_update_and_stay_inside_last_set() {
        let u = Universe::abstract_size(3).unwrap();
        for seed in 0..5 {
            let r = FixedRanking::random(u, 2, 4, seed).unwrap();
            let t = table_from_ranking(&r, DEFAULT_TABLE_BUDGET).unwrap();
            for idx in 0..t.rows().len() {
                let s = t.space().sequence(idx);
                assert_eq!(t.get(idx), update_from_ranking(&r, &s).unwrap());
                assert!(t.get(idx).is_subset(s.last()));
            }
        }
    }

    #[test]
    fn rejects_empty_rows() {
        let space = SequenceSpace::new(x2(), 1).unwrap();
        assert!(OperatorTable::new(space.clone(), vec![ModelSet::EMPTY; 3]).is_err());
        assert!(OperatorTable::new(space, vec![ModelSet::singleton(0); 2]).is_err());
    }
}
