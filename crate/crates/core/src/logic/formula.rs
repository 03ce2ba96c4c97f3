use std::fmt;

use super::{ModelSet, Universe};

/// Propositional formula over atoms `p0, p1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    Atom(usize),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(i: usize) -> Self {
        Formula::Atom(i)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    /// Truth value under the model whose bit `i` is the value of `p<i>`.
    pub fn eval(&self, model: usize) -> bool {
        match self {
            Formula::True => true,
            Formula::False => false,
            Formula::Atom(i) => model >> i & 1 == 1,
            Formula::Not(f) => !f.eval(model),
            Formula::And(a, b) => a.eval(model) && b.eval(model),
            Formula::Or(a, b) => a.eval(model) || b.eval(model),
            Formula::Implies(a, b) => !a.eval(model) || b.eval(model),
            Formula::Iff(a, b) => a.eval(model) == b.eval(model),
        }
    }

    pub fn models(&self, universe: &Universe) -> ModelSet {
        debug_assert!(self
            .max_atom()
            .is_none_or(|a| universe.atom_count().is_some_and(|k| a < k)));
        (0..universe.size()).filter(|&m| self.eval(m)).collect()
    }

    /// Largest atom index mentioned, if any.
    pub fn max_atom(&self) -> Option<usize> {
        match self {
            Formula::True | Formula::False => None,
            Formula::Atom(i) => Some(*i),
            Formula::Not(f) => f.max_atom(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => a.max_atom().max(b.max_atom()),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(..) => 1,
            Formula::Implies(..) => 2,
            Formula::Or(..) => 3,
            Formula::And(..) => 4,
            Formula::Not(_) => 5,
            _ => 6,
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, sub: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({sub})")
    } else {
        write!(f, "{sub}")
    }
}

// Parenthesization follows the grammar exactly: `&`, `|` and `<->` group to
// the left, `->` to the right, so printing then parsing rebuilds the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.precedence();
        let (a, b, op, right_assoc) = match self {
            Formula::True => return f.write_str("true"),
            Formula::False => return f.write_str("false"),
            Formula::Atom(i) => return write!(f, "p{i}"),
            Formula::Not(sub) => {
                f.write_str("!")?;
                return write_operand(f, sub, sub.precedence() < p);
            }
            Formula::And(a, b) => (a, b, " & ", false),
            Formula::Or(a, b) => (a, b, " | ", false),
            Formula::Implies(a, b) => (a, b, " -> ", true),
            Formula::Iff(a, b) => (a, b, " <-> ", false),
        };
        let (left_parens, right_parens) = if right_assoc {
            (a.precedence() <= p, b.precedence() < p)
        } else {
            (a.precedence() < p, b.precedence() <= p)
        };
        write_operand(f, a, left_parens)?;
        f.write_str(op)?;
        write_operand(f, b, right_parens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_bits() {
        let f = Formula::and(Formula::atom(0), Formula::not(Formula::atom(1)));
        let u = Universe::with_atoms(2).unwrap();
        assert_eq!(f.models(&u), ModelSet::singleton(1));
        assert_eq!(Formula::True.models(&u), ModelSet::full(4));
        let contradiction = Formula::and(Formula::atom(0), Formula::not(Formula::atom(0)));
        assert!(contradiction.models(&u).is_empty());
    }

    #[test]
    fn display_minimal_parens() {
        let f = Formula::implies(
            Formula::implies(Formula::atom(0), Formula::atom(1)),
            Formula::atom(0),
        );
        assert_eq!(f.to_string(), "(p0 -> p1) -> p0");
        let g = Formula::and(
            Formula::atom(0),
            Formula::and(Formula::atom(1), Formula::atom(2)),
        );
        assert_eq!(g.to_string(), "p0 & (p1 & p2)");
        let h = Formula::not(Formula::or(Formula::atom(0), Formula::True));
        assert_eq!(h.to_string(), "!(p0 | true)");
    }
}
