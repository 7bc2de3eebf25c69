//! Term grammar for lattice expressions.
//!
//! ASCII grammar: generators `x0`, `x1`, ...; `^` for meet, `v` for join,
//! `0` and `1` for the bounds, `~` for De Morgan negation, parentheses,
//! whitespace insignificant. `~` binds tightest, then `^`, then `v`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Zero,
    One,
    Gen(usize),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Not(Box<Term>),
}

impl Term {
    pub fn meet(a: Term, b: Term) -> Term {
        Term::Meet(Box::new(a), Box::new(b))
    }

    pub fn join(a: Term, b: Term) -> Term {
        Term::Join(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Term) -> Term {
        Term::Not(Box::new(a))
    }

    /// Largest generator index mentioned, if any.
    pub fn max_generator(&self) -> Option<usize> {
        match self {
            Term::Zero | Term::One => None,
            Term::Gen(i) => Some(*i),
            Term::Meet(a, b) | Term::Join(a, b) => match (a.max_generator(), b.max_generator()) {
                (Some(x), Some(y)) => Some(x.max(y)),
                (x, y) => x.or(y),
            },
            Term::Not(a) => a.max_generator(),
        }
    }

    pub fn contains_negation(&self) -> bool {
        match self {
            Term::Zero | Term::One | Term::Gen(_) => false,
            Term::Meet(a, b) | Term::Join(a, b) => a.contains_negation() || b.contains_negation(),
            Term::Not(_) => true,
        }
    }

    /// Evaluate over the two-element lattice, reading generator values off
    /// the bits of `assignment`. This is a direct structural fold and does
    /// not go through normal forms.
    pub fn eval_bits(&self, assignment: u32) -> bool {
        match self {
            Term::Zero => false,
            Term::One => true,
            Term::Gen(i) => assignment >> i & 1 == 1,
            Term::Meet(a, b) => a.eval_bits(assignment) && b.eval_bits(assignment),
            Term::Join(a, b) => a.eval_bits(assignment) || b.eval_bits(assignment),
            Term::Not(a) => !a.eval_bits(assignment),
        }
    }
}

pub fn parse(input: &str) -> Result<Term> {
    let mut p = Parser {
        chars: input.as_bytes(),
        pos: 0,
    };
    let t = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(Error::input(format!(
            "unexpected trailing input at byte {}: {:?}",
            p.pos,
            &input[p.pos..]
        )));
    }
    Ok(t)
}

struct Parser<'a> {
    chars: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    // expr := meet_term ('v' meet_term)*
    fn expr(&mut self) -> Result<Term> {
        let mut acc = self.meet_term()?;
        while self.peek() == Some(b'v') {
            self.pos += 1;
            let rhs = self.meet_term()?;
            acc = Term::join(acc, rhs);
        }
        Ok(acc)
    }

    // meet_term := atom ('^' atom)*
    fn meet_term(&mut self) -> Result<Term> {
        let mut acc = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            let rhs = self.atom()?;
            acc = Term::meet(acc, rhs);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Term> {
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(Term::Zero)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Term::One)
            }
            Some(b'~') => {
                self.pos += 1;
                Ok(Term::not(self.atom()?))
            }
            Some(b'(') => {
                self.pos += 1;
                let t = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::input("expected ')'"));
                }
                self.pos += 1;
                Ok(t)
            }
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if self.pos == start {
                    return Err(Error::input("expected generator index after 'x'"));
                }
                let digits = std::str::from_utf8(&self.chars[start..self.pos]).unwrap();
                let idx: usize = digits
                    .parse()
                    .map_err(|_| Error::input(format!("generator index too large: x{digits}")))?;
                Ok(Term::Gen(idx))
            }
            other => Err(Error::input(format!(
                "expected term, found {:?}",
                other.map(|c| c as char)
            ))),
        }
    }
}
