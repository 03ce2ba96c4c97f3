use std::collections::HashMap;
use std::fmt;

use crate::history::{update_general, GeneralRanking, ObservationSequence};
use crate::logic::{render_model_set, Formula, ModelSet, Universe};
use crate::{Error, Rank, Result};

/// Identifiers of the checks, in report order.
pub const SUITE_CHECKS: [&str; 10] = [
    "theory",
    "syntax-independence",
    "entailed-absorption",
    "true-elimination",
    "disjunction-union",
    "disjunction-trichotomy",
    "success",
    "conjunctive-expansion",
    "expansion",
    "consistency",
];

/// Per-check verdicts with the first counterexample found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    outcomes: Vec<(&'static str, Option<String>)>,
}

impl SuiteReport {
    pub fn verdict(&self) -> bool {
        self.outcomes.iter().all(|(_, w)| w.is_none())
    }

    /// `Some(None)` for a pass, `Some(Some(witness))` for a failure.
    pub fn outcome(&self, check: &str) -> Option<Option<&str>> {
        self.outcomes
            .iter()
            .find(|(c, _)| *c == check)
            .map(|(_, w)| w.as_deref())
    }

    pub fn failures(&self) -> impl Iterator<Item = (&'static str, &str)> {
        self.outcomes
            .iter()
            .filter_map(|(c, w)| w.as_deref().map(|w| (*c, w)))
    }
}

/// One line per check: `PASS <id>` or `FAIL <id> <witness>`.
impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, w) in &self.outcomes {
            match w {
                None => writeln!(f, "PASS {c}")?,
                Some(w) => writeln!(f, "FAIL {c} {w}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct Obs {
    formula: Formula,
    models: ModelSet,
}

impl Obs {
    fn new(formula: Formula, universe: &Universe) -> Self {
        let models = formula.models(universe);
        Obs { formula, models }
    }
}

fn show_word(word: &[&Obs]) -> String {
    let parts: Vec<String> = word.iter().map(|o| o.formula.to_string()).collect();
    format!("<{}>", parts.join(", "))
}

struct Engine<'a, Z> {
    ranking: &'a GeneralRanking<Z>,
    memo: HashMap<Vec<ModelSet>, ModelSet>,
}

impl<Z: Rank> Engine<'_, Z> {
    fn eval(&mut self, word: &[&Obs]) -> Result<ModelSet> {
        let key: Vec<ModelSet> = word.iter().map(|o| o.models).collect();
        if let Some(&m) = self.memo.get(&key) {
            return Ok(m);
        }
        let m = update_general(&ObservationSequence::new(key.clone())?, self.ranking)?;
        self.memo.insert(key, m);
        Ok(m)
    }
}

/// Every word over `alphabet` of length at most `max`.
fn words(alphabet: &[Obs], max: usize) -> Vec<Vec<&Obs>> {
    let mut out: Vec<Vec<&Obs>> = vec![Vec::new()];
    let mut frontier = out.clone();
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &frontier {
            for o in alphabet {
                let mut v = w.clone();
                v.push(o);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn cat<'o>(parts: &[&[&'o Obs]]) -> Vec<&'o Obs> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

/// Prefix/suffix pairs leaving room for `gap` more observations within `maxlen`.
fn contexts<'o>(
    all: &[Vec<&'o Obs>],
    maxlen: usize,
    gap: usize,
) -> Vec<(Vec<&'o Obs>, Vec<&'o Obs>)> {
    let mut out = Vec::new();
    for w in all.iter().filter(|w| w.len() + gap <= maxlen) {
        for cut in 0..=w.len() {
            out.push((w[..cut].to_vec(), w[cut..].to_vec()));
        }
    }
    out
}

/// Runs every check over all observation sequences of length at most
/// `maxlen` built from `pool`, plus the disjunctions, consistent
/// conjunctions and equivalent rewritings the checks need. Composite
/// sequences never exceed `maxlen` observations.
///
/// Theories are compared through their model sets: intersecting theories
/// means uniting model sets, and `¬β ∉ T` means `T` has a model of `β`.
pub fn check_postulate_suite<Z: Rank>(
    ranking: &GeneralRanking<Z>,
    pool: &[Formula],
    maxlen: usize,
) -> Result<SuiteReport> {
    let universe = ranking.universe();
    if maxlen > ranking.max_len() {
        return Err(Error::BoundViolation {
            needed: maxlen,
            bound: ranking.max_len(),
        });
    }
    let base: Vec<Obs> = pool
        .iter()
        .map(|f| Obs::new(f.clone(), &universe))
        .collect();
    if let Some(bad) = base.iter().find(|o| o.models.is_empty()) {
        return Err(Error::Inconsistent(bad.formula.to_string()));
    }
    for o in &base {
        if let Some(a) = o.formula.max_atom() {
            if universe.atom_count().is_none_or(|k| a >= k) {
                return Err(Error::UnknownAtom {
                    atom: a,
                    atoms: universe.atom_count().unwrap_or(0),
                });
            }
        }
    }

    let truth = Obs::new(Formula::True, &universe);
    let all = words(&base, maxlen);
    let mut e = Engine {
        ranking,
        memo: HashMap::new(),
    };
    let mut outcomes = Vec::new();

    // theory: the result is a set of models inside the universe, and in atom
    // universes the formula it renders to has exactly those models.
    let mut found = None;
    for w in &all {
        let m = e.eval(w)?;
        let closed = universe.contains(m)
            && render_model_set(m, &universe).is_none_or(|f| f.models(&universe) == m);
        if !closed {
            found = Some(format!("sigma={} result={m}", show_word(w)));
            break;
        }
    }
    outcomes.push((SUITE_CHECKS[0], found));

    // syntax-independence: equivalent rewritings of an observation agree.
    let mut found = None;
    'syn: for (s, t) in contexts(&all, maxlen, 1) {
        for a in &base {
            let rewrites = [
                Formula::not(Formula::not(a.formula.clone())),
                Formula::and(a.formula.clone(), Formula::True),
                Formula::or(a.formula.clone(), Formula::False),
            ];
            let orig = e.eval(&cat(&[&s, &[a], &t]))?;
            for r in rewrites {
                let alt = Obs::new(r, &universe);
                let other = e.eval(&cat(&[&s, &[&alt], &t]))?;
                if orig != other {
                    found = Some(format!(
                        "sigma={} tau={} alpha={} alpha'={}: {orig} vs {other}",
                        show_word(&s),
                        show_word(&t),
                        a.formula,
                        alt.formula
                    ));
                    break 'syn;
                }
            }
        }
    }
    outcomes.push((SUITE_CHECKS[1], found));

    // entailed-absorption: beta |= alpha gives
    // [s.alpha.beta.t] = [s.beta.t] = [s.beta.alpha.t].
    let mut extended: Vec<Obs> = base.clone();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i + 1..] {
            extended.push(Obs::new(
                Formula::or(a.formula.clone(), b.formula.clone()),
                &universe,
            ));
            let conj = Obs::new(
                Formula::and(a.formula.clone(), b.formula.clone()),
                &universe,
            );
            if !conj.models.is_empty() {
                extended.push(conj);
            }
        }
    }
    let mut found = None;
    'abs: for (s, t) in contexts(&all, maxlen, 2) {
        for a in &extended {
            for b in extended.iter().filter(|b| b.models.is_subset(a.models)) {
                let ab = e.eval(&cat(&[&s, &[a, b], &t]))?;
                let only_b = e.eval(&cat(&[&s, &[b], &t]))?;
                let ba = e.eval(&cat(&[&s, &[b, a], &t]))?;
                if ab != only_b || only_b != ba {
                    found = Some(format!(
                        "sigma={} tau={} alpha={} beta={}: {ab} / {only_b} / {ba}",
                        show_word(&s),
                        show_word(&t),
                        a.formula,
                        b.formula
                    ));
                    break 'abs;
                }
            }
        }
    }
    outcomes.push((SUITE_CHECKS[2], found));

    // true-elimination: [s.true] = [s].
    let mut found = None;
    for s in all.iter().filter(|w| w.len() < maxlen) {
        let with = e.eval(&cat(&[s, &[&truth]]))?;
        let without = e.eval(s)?;
        if with != without {
            found = Some(format!("sigma={}: {with} vs {without}", show_word(s)));
            break;
        }
    }
    outcomes.push((SUITE_CHECKS[3], found));

    // disjunction-union and disjunction-trichotomy.
    let mut union_found = None;
    let mut tri_found = None;
    for (s, t) in contexts(&all, maxlen, 1) {
        if union_found.is_some() && tri_found.is_some() {
            break;
        }
        for (i, a) in base.iter().enumerate() {
            for b in &base[i..] {
                let or = Obs::new(Formula::or(a.formula.clone(), b.formula.clone()), &universe);
                let m1 = e.eval(&cat(&[&s, &[a], &t]))?;
                let m2 = e.eval(&cat(&[&s, &[b], &t]))?;
                let m = e.eval(&cat(&[&s, &[&or], &t]))?;
                let describe = || {
                    format!(
                        "sigma={} tau={} alpha={} beta={}: [a]={m1} [b]={m2} [a|b]={m}",
                        show_word(&s),
                        show_word(&t),
                        a.formula,
                        b.formula
                    )
                };
                if union_found.is_none() && !m.is_subset(m1 | m2) {
                    union_found = Some(describe());
                }
                if tri_found.is_none() && m != m1 && m != m2 && m != (m1 | m2) {
                    tri_found = Some(describe());
                }
            }
        }
    }
    outcomes.push((SUITE_CHECKS[4], union_found));
    outcomes.push((SUITE_CHECKS[5], tri_found));

    // success: [s.alpha] inside models(alpha).
    let mut found = None;
    'suc: for s in all.iter().filter(|w| w.len() < maxlen) {
        for a in &extended {
            let m = e.eval(&cat(&[s, &[a]]))?;
            if !m.is_subset(a.models) {
                found = Some(format!(
                    "sigma={} alpha={}: {m} not inside {}",
                    show_word(s),
                    a.formula,
                    a.models
                ));
                break 'suc;
            }
        }
    }
    outcomes.push((SUITE_CHECKS[6], found));

    // conjunctive-expansion: [s.alpha] meets beta gives
    // [s.alpha.beta] = [s.(alpha & beta)] = [s.alpha] & models(beta).
    let mut found = None;
    'conj: for s in all.iter().filter(|w| w.len() + 2 <= maxlen) {
        for a in &base {
            let sa = e.eval(&cat(&[s, &[a]]))?;
            for b in &base {
                if !sa.intersects(b.models) {
                    continue;
                }
                let and = Obs::new(
                    Formula::and(a.formula.clone(), b.formula.clone()),
                    &universe,
                );
                let sab = e.eval(&cat(&[s, &[a, b]]))?;
                let s_and = e.eval(&cat(&[s, &[&and]]))?;
                let cn = sa & b.models;
                if sab != s_and || s_and != cn {
                    found = Some(format!(
                        "sigma={} alpha={} beta={}: {sab} / {s_and} / {cn}",
                        show_word(s),
                        a.formula,
                        b.formula
                    ));
                    break 'conj;
                }
            }
        }
    }
    outcomes.push((SUITE_CHECKS[7], found));

    // expansion: [s] meets alpha gives [s.alpha] = [s] & models(alpha).
    let mut found = None;
    'exp: for s in all.iter().filter(|w| w.len() < maxlen) {
        let m = e.eval(s)?;
        for a in &base {
            if !m.intersects(a.models) {
                continue;
            }
            let sa = e.eval(&cat(&[s, &[a]]))?;
            if sa != m & a.models {
                found = Some(format!(
                    "sigma={} alpha={}: {sa} vs {}",
                    show_word(s),
                    a.formula,
                    m & a.models
                ));
                break 'exp;
            }
        }
    }
    outcomes.push((SUITE_CHECKS[8], found));

    // consistency: [s] is never empty.
    let mut found = None;
    for s in &all {
        if e.eval(s)?.is_empty() {
            found = Some(format!("sigma={}", show_word(s)));
            break;
        }
    }
    outcomes.push((SUITE_CHECKS[9], found));

    Ok(SuiteReport { outcomes })
}
