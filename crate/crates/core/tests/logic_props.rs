mod common;

use common::formula;
use histupdate::history::{update_general, ObservationSequence};
use histupdate::logic::{entails, models_of, parse_formula, render_model_set, ModelSet, Universe};
use histupdate::{Formula, GeneralRanking};
use proptest::prelude::*;

fn k(atoms: usize) -> Universe {
    Universe::with_atoms(atoms).unwrap()
}

#[test]
fn documented_examples() {
    let u = k(2);
    assert_eq!(
        models_of(&parse_formula("p0 & !p1", &u).unwrap(), &u),
        ModelSet::singleton(1)
    );
    assert_eq!(models_of(&parse_formula("true", &u).unwrap(), &u), u.full());
    assert!(models_of(&parse_formula("p0 & !p0", &u).unwrap(), &u).is_empty());
    let s = |t: &str| t.parse::<ModelSet>().unwrap();
    assert!(entails(&u, s("{1}"), s("{1,3}")).unwrap());
    assert!(entails(&u, s("{}"), s("{2}")).unwrap());
    assert!(!entails(&u, s("{1,2}"), s("{1}")).unwrap());
    assert!(entails(&u, s("{4}"), s("{1}")).is_err());
}

proptest! {
    #[test]
    fn connectives_act_on_model_sets(a in formula(4), b in formula(4)) {
        let u = k(4);
        let (ma, mb) = (models_of(&a, &u), models_of(&b, &u));
        let full = u.full();
        prop_assert_eq!(models_of(&Formula::and(a.clone(), b.clone()), &u), ma & mb);
        prop_assert_eq!(models_of(&Formula::or(a.clone(), b.clone()), &u), ma | mb);
        prop_assert_eq!(models_of(&Formula::not(a.clone()), &u), full - ma);
        prop_assert_eq!(models_of(&Formula::implies(a.clone(), b.clone()), &u), (full - ma) | mb);
        prop_assert_eq!(models_of(&Formula::iff(a, b), &u), (ma & mb) | (full - (ma | mb)));
    }

    #[test]
    fn connectives_in_small_universes(atoms in 1usize..=3, a in formula(1), b in formula(1)) {
        let u = k(atoms);
        let (ma, mb) = (models_of(&a, &u), models_of(&b, &u));
        prop_assert_eq!(models_of(&Formula::and(a.clone(), b.clone()), &u), ma & mb);
        prop_assert_eq!(models_of(&Formula::or(a.clone(), b), &u), ma | mb);
        prop_assert_eq!(models_of(&Formula::not(a), &u), u.full() - ma);
    }

    #[test]
    fn printing_then_parsing_is_identity(f in formula(3)) {
        let u = k(3);
        let text = f.to_string();
        prop_assert_eq!(parse_formula(&text, &u).unwrap(), f);
    }

    #[test]
    fn rendering_preserves_models(bits in 0u64..256) {
        let u = k(3);
        let set = ModelSet::from_bits(bits);
        let f = render_model_set(set, &u).unwrap();
        prop_assert_eq!(models_of(&f, &u), set);
    }

    /// Equivalent observations give identical updates.
    #[test]
    fn update_is_syntax_independent(
        a in formula(2),
        rest in proptest::collection::vec(formula(2), 0..2),
        seed in 0u64..50,
    ) {
        let u = k(2);
        prop_assume!(!models_of(&a, &u).is_empty());
        prop_assume!(rest.iter().all(|f| !models_of(f, &u).is_empty()));
        let r = GeneralRanking::random_valid(u, 3, seed).unwrap();
        let rewritten = [
            Formula::not(Formula::not(a.clone())),
            Formula::and(a.clone(), Formula::or(a.clone(), Formula::atom(0))),
            render_model_set(models_of(&a, &u), &u).unwrap(),
        ];
        let mut original = vec![a.clone()];
        original.extend(rest.iter().cloned());
        let base = update_general(&ObservationSequence::from_formulas(&original, &u).unwrap(), &r).unwrap();
        for alt in rewritten {
            let mut seq = vec![alt];
            seq.extend(rest.iter().cloned());
            let got = update_general(&ObservationSequence::from_formulas(&seq, &u).unwrap(), &r).unwrap();
            prop_assert_eq!(got, base);
        }
    }
}
