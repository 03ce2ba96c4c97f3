//! Recursive-descent parser for the ASCII formula grammar.
//!
//! ```text
//! iff     := implies ("<->" implies)*
//! implies := or ("->" implies)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "!" unary | atom
//! atom    := "p" digits | "true" | "false" | "(" iff ")"
//! ```

use super::{Formula, Universe};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Atom(usize),
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        msg: msg.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'!' => Tok::Not,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Implies
            }
            b'<' if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') => {
                i += 2;
                Tok::Iff
            }
            b'a'..=b'z' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_alphanumeric() {
                    i += 1;
                }
                let word = &text[start..=i];
                match word {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    _ => {
                        let digits = word
                            .strip_prefix('p')
                            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                            .ok_or_else(|| syntax(start, format!("unknown identifier `{word}`")))?;
                        Tok::Atom(
                            digits
                                .parse()
                                .map_err(|_| syntax(start, "atom index too large"))?,
                        )
                    }
                }
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        };
        i += 1;
        toks.push((start, tok));
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    atoms: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut lhs = self.implies()?;
        while self.eat(&Tok::Iff) {
            lhs = Formula::iff(lhs, self.implies()?);
        }
        Ok(lhs)
    }

    fn implies(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        if self.eat(&Tok::Implies) {
            return Ok(Formula::implies(lhs, self.implies()?));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Or) {
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::And) {
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.eat(&Tok::Not) {
            return Ok(Formula::not(self.unary()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula> {
        let at = self.offset();
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| syntax(at, "unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::True => Ok(Formula::True),
            Tok::False => Ok(Formula::False),
            Tok::Atom(i) if i < self.atoms => Ok(Formula::Atom(i)),
            Tok::Atom(i) => Err(Error::UnknownAtom {
                atom: i,
                atoms: self.atoms,
            }),
            Tok::LParen => {
                let inner = self.iff()?;
                if !self.eat(&Tok::RParen) {
                    return Err(syntax(self.offset(), "expected `)`"));
                }
                Ok(inner)
            }
            other => Err(syntax(at, format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses `text` into a formula over `universe`'s atoms.
///
/// Abstract universes have no atoms, so only `true`/`false` combinations parse.
pub fn parse_formula(text: &str, universe: &Universe) -> Result<Formula> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
        atoms: universe.atom_count().unwrap_or(0),
    };
    let f = p.iff()?;
    if p.pos != toks.len() {
        return Err(syntax(p.offset(), "trailing input"));
    }
    Ok(f)
}
