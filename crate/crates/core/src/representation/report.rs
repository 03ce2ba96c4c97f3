use std::fmt;

use crate::operator::SetSequence;

/// One numbered condition of a characterization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Condition {
    pub number: usize,
    pub name: &'static str,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.number, self.name)
    }
}

/// The first counterexample found for a condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    /// The sequences the condition was instantiated with.
    pub witnesses: Vec<SetSequence>,
    /// The failed inclusion, spelled out.
    pub detail: String,
    /// Shortest relation path backing a reachability premise, if any.
    pub chain: Option<Vec<SetSequence>>,
}

/// Outcome of checking every condition of one characterization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    check: String,
    outcomes: Vec<(Condition, Option<Violation>)>,
}

impl CheckReport {
    pub(crate) fn new(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            outcomes: Vec::new(),
        }
    }

    pub(crate) fn record(&mut self, condition: Condition, violation: Option<Violation>) {
        self.outcomes.push((condition, violation));
    }

    /// Which characterization was checked.
    pub fn check(&self) -> &str {
        &self.check
    }

    pub fn verdict(&self) -> bool {
        self.outcomes.iter().all(|(_, v)| v.is_none())
    }

    pub fn conditions(&self) -> impl Iterator<Item = Condition> + '_ {
        self.outcomes.iter().map(|(c, _)| *c)
    }

    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.outcomes.iter().filter_map(|(_, v)| v.as_ref())
    }

    pub fn violation(&self, number: usize) -> Option<&Violation> {
        self.violations().find(|v| v.condition.number == number)
    }
}

/// One line per condition, `PASS <n> <name>` or `FAIL <n> <name>: ...`,
/// followed by an indented chain line where one exists.
impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "check {}: {}",
            self.check,
            if self.verdict() {
                "satisfied"
            } else {
                "violated"
            }
        )?;
        for (c, v) in &self.outcomes {
            match v {
                None => writeln!(f, "PASS {c}")?,
                Some(v) => {
                    write!(f, "FAIL {c}: {}", v.detail)?;
                    let w: Vec<String> = v.witnesses.iter().map(|s| s.to_string()).collect();
                    writeln!(f, " witnesses {}", w.join(" , "))?;
                    if let Some(chain) = &v.chain {
                        let c: Vec<String> = chain.iter().map(|s| s.to_string()).collect();
                        writeln!(f, "  chain {}", c.join(" -> "))?;
                    }
                }
            }
        }
        Ok(())
    }
}
