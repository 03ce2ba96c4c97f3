use histupdate::logic::{parse_formula, ModelSet, Universe};
use histupdate::operator::FixedRanking;
use histupdate::postulates::*;
use histupdate::{Error, Formula, GeneralRanking};

fn k2() -> Universe {
    Universe::with_atoms(2).unwrap()
}

fn pool(texts: &[&str]) -> Vec<Formula> {
    texts
        .iter()
        .map(|t| parse_formula(t, &k2()).unwrap())
        .collect()
}

#[test]
fn canonical_ranking_passes() {
    let r = GeneralRanking::canonical(k2(), 3);
    let report = check_postulate_suite(&r, &pool(&["p0", "p1", "!p0", "p0 | p1"]), 3).unwrap();
    assert!(report.verdict(), "{report}");
    let text = report.to_string();
    assert_eq!(text.lines().count(), SUITE_CHECKS.len());
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
}

/// A two-model history ranked below its one-model sub-histories breaks the
/// preference for shorter explanations, and with it success.
#[test]
fn corrupted_ranking_fails_success() {
    let mut r = GeneralRanking::canonical(k2(), 3);
    r.set_rank(&[3, 0], 0).unwrap();
    assert!(!r.is_valid());
    let report = check_postulate_suite(&r, &pool(&["p0", "p1"]), 2).unwrap();
    assert!(!report.verdict());
    let witness = report.outcome("success").unwrap().expect("success fails");
    assert!(witness.contains("not inside"), "{witness}");
    assert!(report.to_string().contains("FAIL success"));
}

#[test]
fn vacuous_bounds() {
    let r = GeneralRanking::canonical(k2(), 1);
    let report = check_postulate_suite(&r, &pool(&["p0"]), 0).unwrap();
    assert!(report.verdict());
    assert!(report.failures().next().is_none());
}

#[test]
fn suite_errors() {
    let r = GeneralRanking::canonical(k2(), 2);
    assert!(matches!(
        check_postulate_suite(&r, &pool(&["p0 & !p0"]), 2),
        Err(Error::Inconsistent(_))
    ));
    assert!(matches!(
        check_postulate_suite(&r, &pool(&["p0"]), 3),
        Err(Error::BoundViolation { .. })
    ));
}

#[test]
fn union_distribution_example() {
    // r(0,0)=0, r(1,1)=1, r(0,1)=r(1,0)=2
    let u = Universe::abstract_size(2).unwrap();
    let r = FixedRanking::from_ranks(u, 2, vec![0, 2, 2, 1]).unwrap();
    let (a, a2, b, joint, separate) = find_u8_violation_in(&r).unwrap();
    assert_eq!(a, ModelSet::singleton(0));
    assert_eq!(a2, ModelSet::singleton(1));
    assert_eq!(b, u.full());
    assert_eq!(joint, ModelSet::singleton(0));
    assert_eq!(separate, u.full());
}

#[test]
fn inertia_distributes_on_the_example_sets() {
    let u = Universe::abstract_size(2).unwrap();
    let r = FixedRanking::canonical(u, 2).unwrap();
    let s = |t: &str| t.parse().unwrap();
    let apply = |a: &str| histupdate::operator::update_from_ranking(&r, &s(a)).unwrap();
    assert_eq!(apply("{0,1};{0,1}"), u.full());
    assert_eq!(apply("{0};{0,1}") | apply("{1};{0,1}"), u.full());
}

#[test]
fn witness_search() {
    let w = find_km_u8_violation(Universe::abstract_size(2).unwrap()).unwrap();
    assert_ne!(w.joint, w.separate);
    assert_eq!(find_u8_violation_in(&w.ranking).map(|v| v.3), Some(w.joint));
    assert!(w.to_string().contains("[(A|A')·B]"));
    assert!(find_km_u8_violation(Universe::abstract_size(1).unwrap()).is_none());
    assert!(find_km_u8_violation(Universe::abstract_size(3).unwrap()).is_some());
}

#[test]
fn demo_outcomes() {
    let d = epistemic_state_demo(k2()).unwrap();
    assert!(d.ranking.is_valid());
    assert_eq!(d.prefixes, (ModelSet::singleton(3), ModelSet::singleton(3)));
    assert_eq!(d.full.0, ModelSet::singleton(2));
    assert_ne!(d.full.1, d.full.0);
    assert_eq!(d.canonical_full.0, d.canonical_full.1);
    assert!(d.order_sensitive());
    assert!(d.to_string().ends_with("order-sensitive: yes"));
    assert!(epistemic_state_demo(Universe::with_atoms(3).unwrap())
        .unwrap()
        .order_sensitive());
    assert!(epistemic_state_demo(Universe::abstract_size(4).unwrap()).is_err());
}
