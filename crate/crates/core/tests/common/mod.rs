#![allow(dead_code)]

use histupdate::logic::{ModelSet, Universe};
use histupdate::operator::{OperatorTable, SequenceSpace};
use histupdate::Formula;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn formula(atoms: usize) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        1 => Just(Formula::True),
        1 => Just(Formula::False),
        6 => (0..atoms).prop_map(Formula::atom),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
}

pub fn space(m: usize, n: usize) -> SequenceSpace {
    SequenceSpace::new(Universe::abstract_size(m).unwrap(), n).unwrap()
}

/// Rows drawn uniformly among non-empty subsets of the last set.
pub fn random_table(space: &SequenceSpace, seed: u64) -> OperatorTable {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    OperatorTable::from_fn(space.clone(), |idx| {
        let last = space.last(idx);
        loop {
            let pick = ModelSet::from_bits(rng.gen_range(1..=last.bits())) & last;
            if !pick.is_empty() {
                return pick;
            }
        }
    })
    .unwrap()
}
