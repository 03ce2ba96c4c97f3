use std::fmt;

use crate::logic::{ModelSet, Universe};
use crate::operator::{update_from_ranking, FixedRanking, SetSequence};
use crate::representation::for_each_weak_order;
use crate::Rank;

/// A two-place ranking and sets with `[(A∪A')·B] ≠ [A·B] ∪ [A'·B]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct U8Witness {
    pub ranking: FixedRanking<u32>,
    pub a: ModelSet,
    pub a_prime: ModelSet,
    pub b: ModelSet,
    /// `[(A∪A')·B]`.
    pub joint: ModelSet,
    /// `[A·B] ∪ [A'·B]`.
    pub separate: ModelSet,
}

impl fmt::Display for U8Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "A={} A'={} B={}: [(A|A')·B] = {} but [A·B] | [A'·B] = {}",
            self.a, self.a_prime, self.b, self.joint, self.separate
        )?;
        write!(f, "ranks:")?;
        for (t, z) in self.ranking.entries() {
            let t: Vec<String> = t.iter().map(|x| x.to_string()).collect();
            write!(f, " r({})={z}", t.join(","))?;
        }
        Ok(())
    }
}

fn apply<Z: Rank>(r: &FixedRanking<Z>, a: ModelSet, b: ModelSet) -> ModelSet {
    let s = SetSequence::new(vec![a, b]).expect("non-empty sets");
    update_from_ranking(r, &s).expect("sets lie in the ranking's universe")
}

/// First `(A, A', B)` in set order where the two-place operator of `r` fails
/// to distribute over a union in its first argument.
pub fn find_u8_violation_in<Z: Rank>(
    r: &FixedRanking<Z>,
) -> Option<(ModelSet, ModelSet, ModelSet, ModelSet, ModelSet)> {
    if r.dimension() != 2 {
        return None;
    }
    let sets: Vec<ModelSet> = r.universe().nonempty_sets().collect();
    for &a in &sets {
        for &a_prime in &sets {
            for &b in &sets {
                let joint = apply(r, a | a_prime, b);
                let separate = apply(r, a, b) | apply(r, a_prime, b);
                if joint != separate {
                    return Some((a, a_prime, b, joint, separate));
                }
            }
        }
    }
    None
}

/// Searches weak orders on `X^2`, in enumeration order, for a ranking whose
/// operator violates distribution of the first argument over unions.
///
/// Returns `None` for one-point universes, where no such ranking exists.
pub fn find_km_u8_violation(universe: Universe) -> Option<U8Witness> {
    if universe.size() < 2 {
        return None;
    }
    let tuples = universe.size() * universe.size();
    let mut found = None;
    for_each_weak_order(tuples, |ranks| {
        let r = FixedRanking::from_ranks(universe, 2, ranks.to_vec())
            .expect("rank vector sized to X^2");
        match find_u8_violation_in(&r) {
            Some((a, a_prime, b, joint, separate)) => {
                found = Some(U8Witness {
                    ranking: r,
                    a,
                    a_prime,
                    b,
                    joint,
                    separate,
                });
                false
            }
            None => true,
        }
    });
    found
}
