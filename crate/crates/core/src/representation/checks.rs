use super::report::{CheckReport, Condition, Violation};
use crate::logic::ModelSet;
use crate::operator::OperatorTable;
use crate::relations::{
    build_relation, for_each_patch, for_each_sub_prefix, transitive_closure, PatchMode, Relation,
    Variant,
};
use crate::{Error, Result};

/// Tight or wide shape of the coordinate-wise relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Width {
    Tight,
    Wide,
}

const INCLUSION: Condition = Condition {
    number: 1,
    name: "inclusion",
};

fn require_dimension(table: &OperatorTable, n: usize) -> Result<()> {
    if table.dimension() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: table.dimension(),
        });
    }
    Ok(())
}

fn show(table: &OperatorTable, s: usize) -> String {
    format!("[{}] = {}", table.space().sequence(s), table.get(s))
}

fn inclusion(table: &OperatorTable) -> Option<Violation> {
    let space = table.space();
    (0..space.node_count())
        .find(|&s| !table.get(s).is_subset(space.last(s)))
        .map(|s| Violation {
            condition: INCLUSION,
            witnesses: vec![space.sequence(s)],
            detail: format!("{} not inside {}", show(table, s), space.last(s)),
            chain: None,
        })
}

/// `[.. X∪Y ..] ⊆ [.. X ..] ∪ [.. Y ..]` at coordinate `i`.
fn union_cover(table: &OperatorTable, i: usize, condition: Condition) -> Option<Violation> {
    let space = table.space();
    let sets: Vec<ModelSet> = space.universe().nonempty_sets().collect();
    for s in 0..space.node_count() {
        let x = space.coord(s, i);
        for &y in &sets {
            let u = space.with_coord(s, i, x | y);
            let t = space.with_coord(s, i, y);
            if !table.get(u).is_subset(table.get(s) | table.get(t)) {
                return Some(Violation {
                    condition,
                    witnesses: vec![space.sequence(s), space.sequence(t)],
                    detail: format!(
                        "{} not inside {} union {}",
                        show(table, u),
                        show(table, s),
                        show(table, t)
                    ),
                    chain: None,
                });
            }
        }
    }
    None
}

/// `s R* s[i := Y]` implies `[s] ⊆ [s[i := X∪Y]]`.
fn reach_inclusion(
    table: &OperatorTable,
    relation: &Relation,
    closure: &Relation,
    i: usize,
    condition: Condition,
) -> Option<Violation> {
    let space = table.space();
    let sets: Vec<ModelSet> = space.universe().nonempty_sets().collect();
    for s in 0..space.node_count() {
        let x = space.coord(s, i);
        for &y in &sets {
            let t = space.with_coord(s, i, y);
            if !closure.has_edge(s, t) {
                continue;
            }
            let u = space.with_coord(s, i, x | y);
            if !table.get(s).is_subset(table.get(u)) {
                let chain = relation
                    .shortest_path(s, t)
                    .map(|p| p.into_iter().map(|v| space.sequence(v)).collect());
                return Some(Violation {
                    condition,
                    witnesses: vec![space.sequence(s), space.sequence(t)],
                    detail: format!("{} not inside {}", show(table, s), show(table, u)),
                    chain,
                });
            }
        }
    }
    None
}

fn relation_and_closure(table: &OperatorTable, variant: Variant) -> Result<(Relation, Relation)> {
    let r = build_relation(table, variant)?;
    let c = transitive_closure(&r);
    Ok((r, c))
}

/// The four conditions characterizing representable two-place operators.
pub fn check_theorem_2d(table: &OperatorTable, width: Width) -> Result<CheckReport> {
    require_dimension(table, 2)?;
    let variant = match width {
        Width::Tight => Variant::TwoDTight,
        Width::Wide => Variant::TwoDWide,
    };
    let (r, c) = relation_and_closure(table, variant)?;
    let name = match width {
        Width::Tight => "2d-tight",
        Width::Wide => "2d-wide",
    };
    let mut report = CheckReport::new(name);
    report.record(INCLUSION, inclusion(table));
    let left_union = Condition {
        number: 2,
        name: "left-union",
    };
    report.record(left_union, union_cover(table, 0, left_union));
    let right_reach = Condition {
        number: 3,
        name: "right-reach",
    };
    report.record(right_reach, reach_inclusion(table, &r, &c, 1, right_reach));
    let left_reach = Condition {
        number: 4,
        name: "left-reach",
    };
    report.record(left_reach, reach_inclusion(table, &r, &c, 0, left_reach));
    Ok(report)
}

/// The six coordinate-wise conditions for three-place operators.
///
/// Under the tight relation these are not sufficient for representability;
/// the built-in counterexample satisfies all six.
pub fn check_suggested_3d(table: &OperatorTable, width: Width) -> Result<CheckReport> {
    require_dimension(table, 3)?;
    let variant = match width {
        Width::Tight => Variant::ThreeDTight,
        Width::Wide => Variant::ThreeDWide,
    };
    let (r, c) = relation_and_closure(table, variant)?;
    let name = match width {
        Width::Tight => "suggested-tight",
        Width::Wide => "suggested-wide",
    };
    let mut report = CheckReport::new(name);
    report.record(INCLUSION, inclusion(table));
    let conds = [
        (
            Condition {
                number: 2,
                name: "middle-union",
            },
            1,
        ),
        (
            Condition {
                number: 3,
                name: "left-union",
            },
            0,
        ),
    ];
    for (cond, i) in conds {
        report.record(cond, union_cover(table, i, cond));
    }
    let conds = [
        (
            Condition {
                number: 4,
                name: "left-reach",
            },
            0,
        ),
        (
            Condition {
                number: 5,
                name: "middle-reach",
            },
            1,
        ),
        (
            Condition {
                number: 6,
                name: "right-reach",
            },
            2,
        ),
    ];
    for (cond, i) in conds {
        report.record(cond, reach_inclusion(table, &r, &c, i, cond));
    }
    Ok(report)
}

/// The three conditions characterizing representable operators of any
/// dimension, with tight patches.
pub fn check_theorem_nd(table: &OperatorTable) -> CheckReport {
    check_theorem_nd_with(table, PatchMode::Tight)
}

/// As [`check_theorem_nd`], with the given patch mode for both the relation
/// and the cover condition. Relaxed mode quantifies over every admissible
/// patch.
pub fn check_theorem_nd_with(table: &OperatorTable, mode: PatchMode) -> CheckReport {
    let r = build_relation(table, Variant::NdPatch(mode))
        .expect("patch relation has no dimension constraint");
    let c = transitive_closure(&r);
    let mut report = CheckReport::new(match mode {
        PatchMode::Tight => "nd",
        PatchMode::Relaxed => "nd-relaxed",
    });
    report.record(INCLUSION, inclusion(table));
    let cover = Condition {
        number: 2,
        name: "patch-cover",
    };
    report.record(cover, patch_cover(table, mode, cover));
    let reach = Condition {
        number: 3,
        name: "reach-inclusion",
    };
    report.record(reach, nd_reach(table, &r, &c, reach));
    report
}

/// `[A·C] ⊆ [A'·C] ∪ ⋃ [B^i·C]` for every `A' ⊆ A` and patch `B`.
fn patch_cover(table: &OperatorTable, mode: PatchMode, condition: Condition) -> Option<Violation> {
    let space = table.space();
    let mut found = None;
    for s in 0..space.node_count() {
        let out = table.get(s);
        for_each_sub_prefix(space, s, |sub| {
            if found.is_some() || sub == s {
                return;
            }
            for_each_patch(space, s, sub, mode, |members| {
                let cover = members
                    .iter()
                    .fold(table.get(sub), |acc, &b| acc | table.get(b));
                if out.is_subset(cover) {
                    return true;
                }
                let mut witnesses = vec![space.sequence(s), space.sequence(sub)];
                witnesses.extend(members.iter().map(|&b| space.sequence(b)));
                let parts: Vec<String> = members.iter().map(|&b| show(table, b)).collect();
                found = Some(Violation {
                    condition,
                    witnesses,
                    detail: format!(
                        "{} not inside {} with patch {}",
                        show(table, s),
                        show(table, sub),
                        parts.join(" , ")
                    ),
                    chain: None,
                });
                false
            });
        });
        if found.is_some() {
            break;
        }
    }
    found
}

/// `s' ⊆ s` pointwise and `s' R* s` imply `[s'] ⊆ [s]`.
fn nd_reach(
    table: &OperatorTable,
    relation: &Relation,
    closure: &Relation,
    condition: Condition,
) -> Option<Violation> {
    let space = table.space();
    for big in 0..space.node_count() {
        for small in 0..space.node_count() {
            if small == big
                || !space.is_pointwise_subset(small, big)
                || !closure.has_edge(small, big)
            {
                continue;
            }
            if !table.get(small).is_subset(table.get(big)) {
                let chain = relation
                    .shortest_path(small, big)
                    .map(|p| p.into_iter().map(|v| space.sequence(v)).collect());
                return Some(Violation {
                    condition,
                    witnesses: vec![space.sequence(small), space.sequence(big)],
                    detail: format!("{} not inside {}", show(table, small), show(table, big)),
                    chain,
                });
            }
        }
    }
    None
}
