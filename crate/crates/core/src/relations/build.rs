use super::patch::submasks;
use super::{PatchMode, Relation, Variant};
use crate::logic::ModelSet;
use crate::operator::{OperatorTable, SequenceSpace};
use crate::{Error, Result};

/// Builds the relation of the given variant from an operator table.
pub fn build_relation(table: &OperatorTable, variant: Variant) -> Result<Relation> {
    if let Some(d) = variant.required_dimension() {
        if table.dimension() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: table.dimension(),
            });
        }
    }
    Ok(match variant {
        Variant::TwoDTight | Variant::ThreeDTight => coordinate_relation(table, variant, false),
        Variant::TwoDWide | Variant::ThreeDWide => coordinate_relation(table, variant, true),
        Variant::NdPatch(mode) => patch_relation(table, mode),
    })
}

/// Relations whose non-inclusion cases each move one coordinate.
///
/// For the last coordinate `C`, `s R s[C := D]` holds when the output at the
/// union `C ∪ D` still meets `C`. For an earlier coordinate `X_i`,
/// `s R s[X_i := Y]` holds when the output at `X_i ∪ Y` differs from the
/// output at `Y`. The tight shape targets `s[C := D]` / `s[X_i := Y]`; the
/// wide shape targets the union itself and adds pointwise inclusion.
fn coordinate_relation(table: &OperatorTable, variant: Variant, wide: bool) -> Relation {
    let space = table.space();
    let n = space.dimension();
    let last = n - 1;
    let mut r = Relation::empty(space.clone(), variant);
    let sets: Vec<ModelSet> = space.universe().nonempty_sets().collect();

    for s in 0..space.node_count() {
        let c = space.last(s);
        for &d in &sets {
            let union = space.with_coord(s, last, c | d);
            if table.get(union).intersects(c) {
                let target = if wide {
                    union
                } else {
                    space.with_coord(s, last, d)
                };
                r.add_edge(s, target);
            }
        }
        for i in 0..last {
            let x = space.coord(s, i);
            for &y in &sets {
                let union = space.with_coord(s, i, x | y);
                if table.get(union) != table.get(space.with_coord(s, i, y)) {
                    let target = if wide {
                        union
                    } else {
                        space.with_coord(s, i, y)
                    };
                    r.add_edge(s, target);
                }
            }
        }
        if wide {
            for t in 0..space.node_count() {
                if space.is_pointwise_subset(t, s) {
                    r.add_edge(s, t);
                }
            }
        }
    }
    r
}

/// The n-dimensional relation on `(A_1..A_{n-1}, C)`:
///
/// 1. `(A', C') R (A, C)` if `A_i ⊆ A'_i` for all `i` and `C ⊆ C'`;
/// 2. `(A, C') R (A, C)` if `C' ⊆ C` and `[A·C] ∩ C' ≠ ∅`;
/// 3. `(A', C) R (A, C)` if `A' ⊆ A`, `A' ≠ A`, and for the patch `{B^i}` to
///    `A` from `A'` either `⋂ [B^i·C] ⊄ [A·C]` or `[A·C] ⊄ ⋃ [B^i·C]`.
///
/// Case 3 is skipped for `A' = A`, where the patch is empty and the case
/// would only add a self-loop.
fn patch_relation(table: &OperatorTable, mode: PatchMode) -> Relation {
    let space = table.space();
    let n = space.dimension();
    let last = n - 1;
    let mut r = Relation::empty(space.clone(), Variant::NdPatch(mode));

    for s in 0..space.node_count() {
        let c = space.last(s);
        let out = table.get(s);

        // case 1: every pointwise superset relates to s
        for t in 0..space.node_count() {
            if space.is_pointwise_subset(s, t) {
                r.add_edge(t, s);
            }
        }

        // case 2
        for c_prime in submasks(c).skip(1) {
            if out.intersects(c_prime) {
                r.add_edge(space.with_coord(s, last, c_prime), s);
            }
        }

        // case 3: prefixes A' strictly inside A, same C
        for_each_sub_prefix(space, s, |sub| {
            if sub != s && patch_separates(table, s, sub, mode) {
                r.add_edge(sub, s);
            }
        });
    }
    r
}

/// Calls `f` with every index whose prefix is pointwise inside `s`'s prefix
/// (non-empty coordinates) and whose last coordinate equals `s`'s.
pub(crate) fn for_each_sub_prefix(space: &SequenceSpace, s: usize, mut f: impl FnMut(usize)) {
    let last = space.dimension() - 1;
    let choices: Vec<Vec<ModelSet>> = (0..last)
        .map(|i| submasks(space.coord(s, i)).skip(1).collect())
        .collect();
    let mut pos = vec![0usize; last];
    loop {
        let mut idx = s;
        for i in 0..last {
            idx = space.with_coord(idx, i, choices[i][pos[i]]);
        }
        f(idx);
        let mut i = last;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            pos[i] += 1;
            if pos[i] < choices[i].len() {
                break;
            }
            pos[i] = 0;
        }
    }
}

/// Case-3 test: does some admissible patch to `big` from `sub` satisfy 3(a) or 3(b)?
pub(crate) fn patch_separates(
    table: &OperatorTable,
    big: usize,
    sub: usize,
    mode: PatchMode,
) -> bool {
    let out = table.get(big);
    let mut found = false;
    for_each_patch(table.space(), big, sub, mode, |members| {
        let inter = members
            .iter()
            .fold(table.universe().full(), |acc, &b| acc & table.get(b));
        let union = members
            .iter()
            .fold(ModelSet::EMPTY, |acc, &b| acc | table.get(b));
        if !inter.is_subset(out) || !out.is_subset(union) {
            found = true;
        }
        !found
    });
    found
}

/// Enumerates patch member index lists to `big` from `sub` over the prefix
/// coordinates; stops early when `f` returns false.
pub(crate) fn for_each_patch(
    space: &SequenceSpace,
    big: usize,
    sub: usize,
    mode: PatchMode,
    mut f: impl FnMut(&[usize]) -> bool,
) {
    let last = space.dimension() - 1;
    let differing: Vec<(usize, ModelSet, ModelSet)> = (0..last)
        .map(|i| (i, space.coord(big, i), space.coord(sub, i)))
        .filter(|(_, a, b)| a != b)
        .collect();
    match mode {
        PatchMode::Tight => {
            let members: Vec<usize> = differing
                .iter()
                .map(|&(i, a, b)| space.with_coord(big, i, a - b))
                .collect();
            f(&members);
        }
        PatchMode::Relaxed => {
            let options: Vec<Vec<usize>> = differing
                .iter()
                .map(|&(i, a, b)| {
                    submasks(b)
                        .map(|extra| space.with_coord(big, i, (a - b) | extra))
                        .collect()
                })
                .collect();
            let mut pos = vec![0usize; options.len()];
            let mut members = vec![0usize; options.len()];
            loop {
                for (k, opt) in options.iter().enumerate() {
                    members[k] = opt[pos[k]];
                }
                if !f(&members) {
                    return;
                }
                let mut k = options.len();
                loop {
                    if k == 0 {
                        return;
                    }
                    k -= 1;
                    pos[k] += 1;
                    if pos[k] < options[k].len() {
                        break;
                    }
                    pos[k] = 0;
                }
            }
        }
    }
}
