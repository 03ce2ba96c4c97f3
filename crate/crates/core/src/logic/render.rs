//! Rendering a model set back into a compact formula (two-level minimization).

use std::collections::BTreeSet;

use super::{Formula, ModelSet, Universe};

/// A product term: `fixed` bits must equal `value`, other atoms are free.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Cube {
    fixed: usize,
    value: usize,
}

impl Cube {
    fn covers(self, model: usize) -> bool {
        model & self.fixed == self.value
    }

    fn to_formula(self, atoms: usize) -> Formula {
        let mut lits = (0..atoms).filter(|i| self.fixed >> i & 1 == 1).map(|i| {
            if self.value >> i & 1 == 1 {
                Formula::atom(i)
            } else {
                Formula::not(Formula::atom(i))
            }
        });
        let first = lits.next().unwrap_or(Formula::True);
        lits.fold(first, Formula::and)
    }
}

fn prime_implicants(set: ModelSet, atoms: usize) -> Vec<Cube> {
    let all = (1usize << atoms) - 1;
    let mut layer: BTreeSet<Cube> = set
        .iter()
        .map(|m| Cube {
            fixed: all,
            value: m,
        })
        .collect();
    let mut primes = Vec::new();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        let mut merged = BTreeSet::new();
        let cubes: Vec<Cube> = layer.iter().copied().collect();
        for (i, a) in cubes.iter().enumerate() {
            for b in &cubes[i + 1..] {
                let diff = a.value ^ b.value;
                if a.fixed == b.fixed && diff.count_ones() == 1 {
                    next.insert(Cube {
                        fixed: a.fixed & !diff,
                        value: a.value & !diff,
                    });
                    merged.insert(*a);
                    merged.insert(*b);
                }
            }
        }
        primes.extend(cubes.into_iter().filter(|c| !merged.contains(c)));
        layer = next;
    }
    primes
}

/// Formula whose models are exactly `set`, or `None` for abstract universes.
///
/// `{}` renders as `false`, the full universe as `true`; otherwise a
/// disjunction of prime implicants chosen by essential-then-greedy cover.
pub fn render_model_set(set: ModelSet, universe: &Universe) -> Option<Formula> {
    let atoms = universe.atom_count()?;
    if set.is_empty() {
        return Some(Formula::False);
    }
    if set == universe.full() {
        return Some(Formula::True);
    }
    let primes = prime_implicants(set, atoms);
    let mut uncovered: Vec<usize> = set.iter().collect();
    let mut chosen: Vec<Cube> = Vec::new();

    for m in set.iter() {
        let covering: Vec<&Cube> = primes.iter().filter(|c| c.covers(m)).collect();
        if let [only] = covering[..] {
            if !chosen.contains(only) {
                chosen.push(*only);
            }
        }
    }
    uncovered.retain(|&m| !chosen.iter().any(|c| c.covers(m)));
    while !uncovered.is_empty() {
        let best = primes
            .iter()
            .filter(|c| !chosen.contains(c))
            .max_by_key(|c| {
                (
                    uncovered.iter().filter(|&&m| c.covers(m)).count(),
                    std::cmp::Reverse(c.fixed.count_ones()),
                    std::cmp::Reverse(**c),
                )
            })
            .copied()
            .expect("prime implicants cover the set");
        chosen.push(best);
        uncovered.retain(|&m| !best.covers(m));
    }
    chosen.sort_by_key(|c| (c.fixed.count_ones(), std::cmp::Reverse(c.value), c.fixed));
    let mut terms = chosen.into_iter().map(|c| c.to_formula(atoms));
    let first = terms.next()?;
    Some(terms.fold(first, Formula::or))
}
