mod common;

use common::{random_table, space};
use histupdate::lab::builtin_counterexample;
use histupdate::logic::{ModelSet, Universe};
use histupdate::operator::{
    table_from_ranking, update_from_ranking, FixedRanking, OperatorTable, SetSequence,
    DEFAULT_TABLE_BUDGET,
};
use histupdate::relations::PatchMode;
use histupdate::representation::*;
use histupdate::Error;
use num_rational::Ratio;
use proptest::prelude::*;

fn x2() -> Universe {
    Universe::abstract_size(2).unwrap()
}

fn seq(s: &str) -> SetSequence {
    s.parse().unwrap()
}

fn table(r: &FixedRanking) -> OperatorTable {
    table_from_ranking(r, DEFAULT_TABLE_BUDGET).unwrap()
}

#[test]
fn inertia_satisfies_two_place_conditions() {
    let t = table(&FixedRanking::canonical(x2(), 2).unwrap());
    for w in [Width::Tight, Width::Wide] {
        let report = check_theorem_2d(&t, w).unwrap();
        assert!(report.verdict(), "{report}");
        assert_eq!(report.conditions().count(), 4);
    }
}

#[test]
fn inclusion_failure_is_cited() {
    let t = table(&FixedRanking::canonical(x2(), 2).unwrap());
    let mutant = t
        .with_row(&seq("{0};{0}"), ModelSet::from_bits(0b10))
        .unwrap();
    for report in [
        check_theorem_2d(&mutant, Width::Tight).unwrap(),
        check_theorem_2d(&mutant, Width::Wide).unwrap(),
        check_theorem_nd(&mutant),
    ] {
        assert!(!report.verdict());
        let v = report.violation(1).expect("inclusion cited");
        assert_eq!(v.witnesses, vec![seq("{0};{0}")]);
        assert!(report.to_string().contains("FAIL 1 inclusion"));
    }
}

#[test]
fn dimension_mismatches() {
    let t2 = random_table(&space(2, 2), 1);
    let t3 = random_table(&space(2, 3), 1);
    assert!(matches!(
        check_suggested_3d(&t2, Width::Tight),
        Err(Error::DimensionMismatch { .. })
    ));
    assert!(matches!(
        check_theorem_2d(&t3, Width::Wide),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn counterexample_reports() {
    let t = builtin_counterexample();
    let tight = check_suggested_3d(&t, Width::Tight).unwrap();
    assert!(tight.verdict(), "{tight}");
    assert_eq!(tight.conditions().count(), 6);
    let wide = check_suggested_3d(&t, Width::Wide).unwrap();
    assert!(!wide.verdict());
    let v = wide.violation(4).unwrap();
    let chain = v.chain.as_ref().unwrap();
    assert_eq!(chain.first(), v.witnesses.first());
    assert_eq!(chain.last(), v.witnesses.last());
    let nd = check_theorem_nd(&t);
    assert!(!nd.verdict());
    assert!(matches!(
        synthesize_ranking(&t),
        Err(Error::Precondition(_))
    ));
    assert!(!is_representable_bruteforce(&t, DEFAULT_ORACLE_BUDGET).unwrap());
}

#[test]
fn report_text_has_one_line_per_condition() {
    let report = check_theorem_nd(&builtin_counterexample());
    let text = report.to_string();
    let lines: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .collect();
    assert_eq!(lines.len(), 3);
    assert!(text.starts_with("check nd: violated"));
}

#[test]
fn inertia_synthesis() {
    let t = table(&FixedRanking::canonical(x2(), 2).unwrap());
    let r = synthesize_ranking(&t).unwrap();
    let z = |a, b| r.rank(&[a, b]).unwrap();
    assert_eq!(z(0, 0), z(1, 1));
    assert!(z(0, 0) < z(0, 1) && z(0, 0) < z(1, 0));
    assert_eq!(table(&r), t);
}

#[test]
fn one_point_universe() {
    let u = Universe::abstract_size(1).unwrap();
    let t = table(&FixedRanking::canonical(u, 3).unwrap());
    let r = synthesize_ranking(&t).unwrap();
    assert_eq!(r.ranks().len(), 1);
    assert_eq!(table(&r), t);
    assert!(is_representable_bruteforce(&t, DEFAULT_ORACLE_BUDGET).unwrap());
}

#[test]
fn oracle_budget() {
    let t = random_table(&space(3, 2), 0);
    assert!(matches!(
        is_representable_bruteforce(&t, DEFAULT_ORACLE_BUDGET),
        Err(Error::BudgetExceeded { .. })
    ));
}

#[test]
fn weak_order_enumeration() {
    for n in 0..=5 {
        let mut seen = std::collections::HashSet::new();
        for_each_weak_order(n, |r| {
            // normalized: levels used are exactly 0..k
            let k = r.iter().max().map_or(0, |m| m + 1);
            assert!((0..k).all(|l| r.contains(&l)));
            assert!(seen.insert(r.to_vec()));
            true
        });
        assert_eq!(seen.len() as u128, weak_order_count(n));
    }
    assert_eq!(weak_order_count(8), 545_835);
}

#[test]
fn representable_set_agrees_with_single_search() {
    let sp = space(2, 2);
    let set = RepresentableSet::build(&sp, DEFAULT_ORACLE_BUDGET).unwrap();
    for t in histupdate::lab::enumerate_operators(&sp, 100).unwrap() {
        let found = find_representing_ranking(&t, DEFAULT_ORACLE_BUDGET).unwrap();
        assert_eq!(set.contains(&t), found.is_some());
        if let Some(r) = found {
            assert_eq!(table(&r), t);
        }
    }
}

#[test]
fn relaxed_and_tight_nd_agree_on_pairs() {
    let sp = space(2, 2);
    for t in histupdate::lab::enumerate_operators(&sp, 100).unwrap() {
        assert_eq!(
            check_theorem_nd(&t).verdict(),
            check_theorem_nd_with(&t, PatchMode::Relaxed).verdict()
        );
    }
}

/// Ranks on an exact rational scale select the same rows as their integer
/// images under an order isomorphism.
#[test]
fn rational_ranks() {
    let u = Universe::abstract_size(3).unwrap();
    let int = FixedRanking::random(u, 2, 5, 9).unwrap();
    let rat = FixedRanking::from_fn(u, 2, |t| {
        Ratio::new(int.rank(t).unwrap() as i64 * 7 - 3, 11)
    })
    .unwrap();
    let t = table(&int);
    assert_eq!(table_from_ranking(&rat, DEFAULT_TABLE_BUDGET).unwrap(), t);
    let s = seq("{0,2};{1,2}");
    assert_eq!(
        update_from_ranking(&rat, &s).unwrap(),
        update_from_ranking(&int, &s).unwrap()
    );
}

fn check_d_property(t: &OperatorTable) {
    let classes = preorder_classes(t);
    let sp = t.space();
    let members: usize = classes.classes().iter().map(Vec::len).sum();
    assert_eq!(members, sp.node_count());
    let last = sp.dimension() - 1;
    for s in 0..sp.node_count() {
        let c = sp.last(s);
        let singles: Vec<(usize, usize)> = c
            .iter()
            .map(|x| (x, classes.d(sp.with_coord(s, last, ModelSet::singleton(x)))))
            .collect();
        let min = singles.iter().map(|&(_, d)| d).min().unwrap();
        assert_eq!(classes.d(s), min, "d at {}", sp.sequence(s));
        let row = singles
            .iter()
            .filter(|&&(_, d)| d == min)
            .fold(ModelSet::EMPTY, |acc, &(x, _)| acc | ModelSet::singleton(x));
        assert_eq!(t.get(s), row, "row at {}", sp.sequence(s));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ranking_tables_pass_every_sound_check(seed in any::<u64>(), m in 2usize..=3, n in 1usize..=3, levels in 1u32..10) {
        let u = Universe::abstract_size(m).unwrap();
        let t = table(&FixedRanking::random(u, n, levels, seed).unwrap());
        prop_assert!(check_theorem_nd(&t).verdict());
        prop_assert!(check_theorem_nd_with(&t, PatchMode::Relaxed).verdict());
        if n == 2 {
            prop_assert!(check_theorem_2d(&t, Width::Tight).unwrap().verdict());
            prop_assert!(check_theorem_2d(&t, Width::Wide).unwrap().verdict());
        }
        if n == 3 {
            prop_assert!(check_suggested_3d(&t, Width::Tight).unwrap().verdict());
            prop_assert!(check_suggested_3d(&t, Width::Wide).unwrap().verdict());
        }
    }

    #[test]
    fn synthesis_round_trips_and_has_the_d_property(seed in any::<u64>(), m in 2usize..=3, n in 1usize..=3, levels in 1u32..10) {
        let u = Universe::abstract_size(m).unwrap();
        let t = table(&FixedRanking::random(u, n, levels, seed).unwrap());
        let r = synthesize_ranking(&t).unwrap();
        prop_assert_eq!(table(&r), t.clone());
        check_d_property(&t);
    }

    #[test]
    fn verdict_matches_oracle_on_random_tables(seed in any::<u64>()) {
        let t = random_table(&space(2, 3), seed);
        let verdict = check_theorem_nd(&t).verdict();
        prop_assert_eq!(verdict, is_representable_bruteforce(&t, DEFAULT_ORACLE_BUDGET).unwrap());
        prop_assert_eq!(verdict, check_theorem_nd(&t).violations().next().is_none());
    }
}
