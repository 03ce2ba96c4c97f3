//! Line-oriented text formats for rankings and operator tables.
//!
//! All formats share the same skeleton: `#` starts a comment, blank lines are
//! ignored, the first remaining line is a header of `key=value` pairs naming
//! the universe (`atoms=k` or `universe=m`) and a shape key, and every
//! following line is one entry.
//!
//! ```text
//! # general ranking
//! atoms=2 maxlen=2
//! 0 => 0
//! 0 1 => 3
//!
//! # fixed-length ranking
//! universe=2 n=2
//! 0 1 => 1
//!
//! # operator table
//! universe=2 n=2
//! {0};{0,1} => {0}
//! ```
//!
//! Readers accept entries in any order but require every entry exactly once.
//! Writers emit entries in canonical order, so write-read-write is the identity.

use std::collections::HashMap;
use std::fmt::{Display, Write as _};
use std::str::FromStr;

use crate::history::GeneralRanking;
use crate::logic::{ModelSet, Universe};
use crate::operator::{FixedRanking, OperatorTable, SequenceSpace};
use crate::{Error, Rank, Result};

fn format_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format {
        line,
        msg: msg.into(),
    }
}

/// Non-comment, non-blank lines with 1-based line numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

struct Header {
    universe: Universe,
    keys: HashMap<String, usize>,
    line: usize,
}

impl Header {
    fn parse(line_no: usize, line: &str) -> Result<Self> {
        let mut keys = HashMap::new();
        for tok in line.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| format_err(line_no, format!("expected key=value, found `{tok}`")))?;
            let v: usize = v
                .parse()
                .map_err(|_| format_err(line_no, format!("`{v}` is not a natural number")))?;
            if keys.insert(k.to_string(), v).is_some() {
                return Err(format_err(line_no, format!("duplicate header key `{k}`")));
            }
        }
        let universe = match (keys.get("atoms"), keys.get("universe")) {
            (Some(&k), None) => Universe::with_atoms(k),
            (None, Some(&m)) => Universe::abstract_size(m),
            _ => {
                return Err(format_err(
                    line_no,
                    "header needs exactly one of atoms=k or universe=m",
                ))
            }
        }
        .map_err(|e| format_err(line_no, e.to_string()))?;
        Ok(Header {
            universe,
            keys,
            line: line_no,
        })
    }

    fn take(&self, key: &str, allowed: &[&str]) -> Result<usize> {
        if let Some(bad) = self
            .keys
            .keys()
            .find(|k| !allowed.contains(&k.as_str()) && !matches!(k.as_str(), "atoms" | "universe"))
        {
            return Err(format_err(
                self.line,
                format!("unexpected header key `{bad}`"),
            ));
        }
        self.keys
            .get(key)
            .copied()
            .ok_or_else(|| format_err(self.line, format!("header is missing {key}=")))
    }
}

fn split_entry(line_no: usize, line: &str) -> Result<(&str, &str)> {
    line.split_once("=>")
        .map(|(l, r)| (l.trim(), r.trim()))
        .ok_or_else(|| format_err(line_no, "expected `<entry> => <value>`"))
}

fn parse_models(line_no: usize, text: &str, universe: &Universe) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            let m: usize = tok
                .parse()
                .map_err(|_| format_err(line_no, format!("`{tok}` is not a model index")))?;
            if m >= universe.size() {
                return Err(format_err(
                    line_no,
                    format!("model {m} outside a universe of {}", universe.size()),
                ));
            }
            Ok(m)
        })
        .collect()
}

fn parse_rank<Z: FromStr>(line_no: usize, text: &str) -> Result<Z> {
    text.parse()
        .map_err(|_| format_err(line_no, format!("`{text}` is not a rank")))
}

fn join_models(h: &[usize]) -> String {
    h.iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn read_entries<'a, Z: FromStr>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    universe: &Universe,
    len_ok: impl Fn(usize) -> bool,
) -> Result<HashMap<Vec<usize>, Z>> {
    let mut entries = HashMap::new();
    for (no, line) in lines {
        let (lhs, rhs) = split_entry(no, line)?;
        let h = parse_models(no, lhs, universe)?;
        if !len_ok(h.len()) {
            return Err(format_err(
                no,
                format!("history of length {} does not fit the header", h.len()),
            ));
        }
        let z = parse_rank(no, rhs)?;
        if entries.insert(h, z).is_some() {
            return Err(format_err(no, "duplicate entry"));
        }
    }
    Ok(entries)
}

pub fn write_general_ranking<Z: Rank + Display>(r: &GeneralRanking<Z>) -> String {
    let mut out = format!("{} maxlen={}\n", r.universe().header(), r.max_len());
    for (h, z) in r.entries() {
        let _ = writeln!(out, "{} => {z}", join_models(h.models()));
    }
    out
}

pub fn parse_general_ranking<Z: Rank + FromStr>(text: &str) -> Result<GeneralRanking<Z>> {
    let mut lines = content_lines(text);
    let (no, first) = lines
        .next()
        .ok_or_else(|| format_err(0, "missing header"))?;
    let header = Header::parse(no, first)?;
    let max_len = header.take("maxlen", &["maxlen"])?;
    let universe = header.universe;
    let entries = read_entries::<Z>(lines, &universe, |l| (1..=max_len).contains(&l))?;
    let total: u128 = (1..=max_len as u32)
        .map(|l| (universe.size() as u128).saturating_pow(l))
        .sum();
    if entries.len() as u128 != total {
        return Err(format_err(
            0,
            format!(
                "ranking lists {} histories, the header requires {total}",
                entries.len()
            ),
        ));
    }
    GeneralRanking::from_fn(universe, max_len, |h| entries[h])
}

pub fn write_fixed_ranking<Z: Rank + Display>(r: &FixedRanking<Z>) -> String {
    let mut out = format!("{} n={}\n", r.universe().header(), r.dimension());
    for (t, z) in r.entries() {
        let _ = writeln!(out, "{} => {z}", join_models(&t));
    }
    out
}

pub fn parse_fixed_ranking<Z: Rank + FromStr>(text: &str) -> Result<FixedRanking<Z>> {
    let mut lines = content_lines(text);
    let (no, first) = lines
        .next()
        .ok_or_else(|| format_err(0, "missing header"))?;
    let header = Header::parse(no, first)?;
    let n = header.take("n", &["n"])?;
    if n == 0 {
        return Err(format_err(no, "n must be at least 1"));
    }
    let universe = header.universe;
    let entries = read_entries::<Z>(lines, &universe, |l| l == n)?;
    let total = universe.size().checked_pow(n as u32);
    if total != Some(entries.len()) {
        return Err(format_err(
            0,
            format!(
                "ranking lists {} tuples, the header requires {}",
                entries.len(),
                total.map_or("too many".to_string(), |t| t.to_string())
            ),
        ));
    }
    FixedRanking::from_fn(universe, n, |t| entries[t])
}

pub fn write_table(table: &OperatorTable) -> String {
    let space = table.space();
    let mut out = format!("n={} {}\n", space.dimension(), space.universe().header());
    for (idx, row) in table.rows().iter().enumerate() {
        let _ = writeln!(out, "{} => {row}", space.sequence(idx));
    }
    out
}

pub fn parse_table(text: &str) -> Result<OperatorTable> {
    let mut lines = content_lines(text);
    let (no, first) = lines
        .next()
        .ok_or_else(|| format_err(0, "missing header"))?;
    let header = Header::parse(no, first)?;
    let n = header.take("n", &["n"])?;
    let space =
        SequenceSpace::new(header.universe, n).map_err(|e| format_err(no, e.to_string()))?;
    let mut rows: Vec<Option<ModelSet>> = vec![None; space.node_count()];
    for (no, line) in lines {
        let (lhs, rhs) = split_entry(no, line)?;
        let seq = lhs
            .parse()
            .map_err(|e: Error| format_err(no, e.to_string()))?;
        let idx = space
            .index(&seq)
            .map_err(|e| format_err(no, e.to_string()))?;
        let out: ModelSet = rhs
            .parse()
            .map_err(|e: Error| format_err(no, e.to_string()))?;
        if rows[idx].replace(out).is_some() {
            return Err(format_err(no, format!("duplicate row for {seq}")));
        }
    }
    let rows = rows
        .into_iter()
        .enumerate()
        .map(|(idx, r)| {
            r.ok_or_else(|| format_err(0, format!("no row for {}", space.sequence(idx))))
        })
        .collect::<Result<Vec<_>>>()?;
    OperatorTable::new(space, rows)
}
