use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{all_row_choices, operator_at, operator_count};
use crate::operator::{table_from_ranking, OperatorTable, SequenceSpace, DEFAULT_TABLE_BUDGET};
use crate::representation::{
    check_suggested_3d, check_theorem_nd, synthesize_ranking, RepresentableSet, Width,
    DEFAULT_ORACLE_BUDGET,
};
use crate::Result;

/// Which conditions a sweep evaluates on each table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConditionSet {
    SuggestedTight,
    SuggestedWide,
    TheoremNd,
}

impl ConditionSet {
    fn passes(self, table: &OperatorTable) -> Result<bool> {
        Ok(match self {
            ConditionSet::SuggestedTight => check_suggested_3d(table, Width::Tight)?.verdict(),
            ConditionSet::SuggestedWide => check_suggested_3d(table, Width::Wide)?.verdict(),
            ConditionSet::TheoremNd => check_theorem_nd(table).verdict(),
        })
    }
}

/// How representability was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reference {
    /// Exhaustive search over weak orders.
    Oracle,
    /// A table counts as representable when the ranking synthesized from it
    /// reproduces it. Used when the oracle budget is too small; this relies
    /// on the patch conditions being necessary.
    Synthesis,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    /// At most this many example tables are kept per list.
    pub cap: usize,
    /// `Some((count, seed))` samples tables uniformly over free rows instead
    /// of enumerating them all.
    pub sample: Option<(usize, u64)>,
    /// Bound on `|X|^n` for the oracle.
    pub oracle_budget: usize,
    /// Bound on the number of tables enumerated exhaustively.
    pub enumeration_budget: u128,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            cap: 10,
            sample: None,
            oracle_budget: DEFAULT_ORACLE_BUDGET,
            enumeration_budget: super::DEFAULT_ENUMERATION_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepResult {
    pub conditions: ConditionSet,
    pub reference: Reference,
    pub examined: usize,
    pub passed: usize,
    pub representable: usize,
    /// Tables passing the conditions that are not representable.
    pub counterexamples: usize,
    /// Representable tables failing the conditions.
    pub false_negatives: usize,
    /// The first counterexample tables, up to the cap.
    pub counterexample_tables: Vec<OperatorTable>,
    /// The first false-negative tables, up to the cap.
    pub false_negative_tables: Vec<OperatorTable>,
}

impl SweepResult {
    pub fn summary(&self) -> String {
        format!(
            "examined={} passed={} representable={} counterexamples={}",
            self.examined, self.passed, self.representable, self.counterexamples
        )
    }
}

/// Evaluates `conditions` and representability on every table of `space`
/// (or on a seeded sample), collecting disagreements.
pub fn sweep(
    space: &SequenceSpace,
    conditions: ConditionSet,
    options: &SweepOptions,
) -> Result<SweepResult> {
    let choices = all_row_choices(space);
    let tables: Vec<OperatorTable> = match options.sample {
        Some((count, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| {
                    let rows = choices
                        .iter()
                        .map(|c| c[rng.gen_range(0..c.len())])
                        .collect();
                    OperatorTable::new(space.clone(), rows).expect("choices are non-empty subsets")
                })
                .collect()
        }
        None => {
            let total = operator_count(space);
            if total > options.enumeration_budget {
                return Err(crate::Error::BudgetExceeded {
                    what: "operator tables",
                    needed: total,
                    budget: options.enumeration_budget,
                });
            }
            (0..total)
                .map(|i| operator_at(space, &choices, i))
                .collect()
        }
    };

    let oracle = match RepresentableSet::build(space, options.oracle_budget) {
        Ok(set) => Some(set),
        Err(crate::Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let reference = if oracle.is_some() {
        Reference::Oracle
    } else {
        Reference::Synthesis
    };

    let verdicts: Vec<(bool, bool)> = tables
        .par_iter()
        .map(|t| {
            let pass = conditions.passes(t)?;
            let rep = match &oracle {
                Some(set) => set.contains(t),
                None => match synthesize_ranking(t) {
                    Ok(r) => table_from_ranking(&r, DEFAULT_TABLE_BUDGET)? == *t,
                    Err(_) => false,
                },
            };
            Ok((pass, rep))
        })
        .collect::<Result<_>>()?;

    let mut result = SweepResult {
        conditions,
        reference,
        examined: tables.len(),
        passed: 0,
        representable: 0,
        counterexamples: 0,
        false_negatives: 0,
        counterexample_tables: Vec::new(),
        false_negative_tables: Vec::new(),
    };
    for (t, (pass, rep)) in tables.iter().zip(verdicts) {
        result.passed += pass as usize;
        result.representable += rep as usize;
        if pass && !rep {
            result.counterexamples += 1;
            if result.counterexample_tables.len() < options.cap {
                result.counterexample_tables.push(t.clone());
            }
        }
        if rep && !pass {
            result.false_negatives += 1;
            if result.false_negative_tables.len() < options.cap {
                result.false_negative_tables.push(t.clone());
            }
        }
    }
    Ok(result)
}
