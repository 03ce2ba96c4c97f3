use histupdate::lab::*;
use histupdate::logic::Universe;
use histupdate::operator::SequenceSpace;

fn space(m: usize, n: usize) -> SequenceSpace {
    SequenceSpace::new(Universe::abstract_size(m).unwrap(), n).unwrap()
}

#[test]
fn tight_sweep_finds_the_builtin_counterexample() {
    let opts = SweepOptions {
        cap: usize::MAX,
        ..SweepOptions::default()
    };
    let res = sweep(&space(2, 3), ConditionSet::SuggestedTight, &opts).unwrap();
    assert_eq!(res.examined, 19683);
    assert!(res.counterexamples >= 1);
    assert_eq!(res.counterexample_tables.len(), res.counterexamples);
    assert!(res
        .counterexample_tables
        .contains(&builtin_counterexample()));
    assert_eq!(res.false_negatives, 0, "tight conditions are necessary");
}

#[test]
fn patch_sweep_is_exact() {
    let res = sweep(
        &space(2, 3),
        ConditionSet::TheoremNd,
        &SweepOptions::default(),
    )
    .unwrap();
    assert_eq!(res.reference, Reference::Oracle);
    assert_eq!((res.counterexamples, res.false_negatives), (0, 0));
    assert_eq!(res.passed, res.representable);
    assert_eq!(
        res.summary(),
        format!(
            "examined=19683 passed={0} representable={0} counterexamples=0",
            res.passed
        )
    );
}

#[test]
fn sampled_sweep_is_seeded() {
    let opts = SweepOptions {
        sample: Some((200, 7)),
        ..SweepOptions::default()
    };
    let a = sweep(&space(3, 3), ConditionSet::SuggestedWide, &opts).unwrap();
    let b = sweep(&space(3, 3), ConditionSet::SuggestedWide, &opts).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.examined, 200);
    assert_eq!(a.reference, Reference::Synthesis);
}

#[test]
fn counterexample_cap() {
    let opts = SweepOptions {
        cap: 1,
        ..SweepOptions::default()
    };
    let res = sweep(&space(2, 3), ConditionSet::SuggestedTight, &opts).unwrap();
    assert!(res.counterexample_tables.len() <= 1);
}

#[test]
fn wrong_dimension_for_suggested_conditions() {
    assert!(sweep(
        &space(2, 2),
        ConditionSet::SuggestedWide,
        &SweepOptions::default()
    )
    .is_err());
}
