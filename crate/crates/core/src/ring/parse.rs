//! Polynomial expression grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Division is only allowed by a nonzero constant, so `3/4*x1` and `x1/2` parse but
//! `1/x1` does not. Whitespace is insignificant. Inputs are untrusted: nesting depth,
//! exponents, and intermediate term counts are bounded.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::Poly;
use super::registry::Var;
use super::scalar::Scalar;
use crate::error::{Error, Result};

const MAX_DEPTH: usize = 128;
const MAX_EXPONENT: u32 = 512;
const MAX_TERMS: usize = 20_000;
const MAX_DIGITS: usize = 200;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i - start > MAX_DIGITS {
                return Err(Error::parse(start, "integer literal too long"));
            }
            let n: BigInt = src[start..i]
                .parse()
                .map_err(|_| Error::parse(start, "bad integer literal"))?;
            out.push((start, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'\'') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if b"+-*/^()".contains(&c) {
            out.push((i, Tok::Op(c as char)));
            i += 1;
        } else {
            let ch = src[i..].chars().next().unwrap_or('?');
            return Err(Error::parse(i, format!("unexpected character {ch:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a, F> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    lookup: &'a F,
    depth: usize,
}

impl<'a, F: Fn(&str) -> Option<Var>> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn guard(&self, p: &Poly) -> Result<()> {
        if p.len() > MAX_TERMS {
            return Err(Error::parse(self.offset(), "expression expands to too many terms"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Poly> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(Error::parse(self.offset(), "expression nested too deeply"));
        }
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc += &self.term()?;
            } else if self.eat('-') {
                acc -= &self.term()?;
            } else {
                break;
            }
            self.guard(&acc)?;
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let rhs = self.unary()?;
                if acc.len().saturating_mul(rhs.len()) > MAX_TERMS {
                    return Err(Error::parse(self.offset(), "expression expands to too many terms"));
                }
                acc = &acc * &rhs;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let at = self.offset();
                self.pos += 1;
                let rhs = self.unary()?;
                match rhs.constant_value() {
                    Some(c) if !c.is_zero() => acc = acc.scale(&(Scalar::from_integer(1.into()) / c)),
                    Some(_) => return Err(Error::parse(at, "division by zero")),
                    None => return Err(Error::parse(at, "division by a non-constant")),
                }
            } else {
                break;
            }
            self.guard(&acc)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(Error::parse(self.offset(), "expression nested too deeply"));
        }
        let out = if self.eat('-') {
            -self.unary()?
        } else if self.eat('+') {
            self.unary()?
        } else {
            self.power()?
        };
        self.depth -= 1;
        Ok(out)
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.offset();
        let e = match self.toks.get(self.pos) {
            Some((_, Tok::Num(n))) => n.clone(),
            _ => return Err(Error::parse(at, "exponent must be a non-negative integer")),
        };
        self.pos += 1;
        let e: u32 = e
            .try_into()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| Error::parse(at, format!("exponent exceeds {MAX_EXPONENT}")))?;
        // Upper bound on the term count: monomials of degree <= e*deg in the base's variables.
        if e > 1 && base.len() > 1 {
            let nv = base.vars().len() as f64;
            let top = (e as f64) * (base.total_degree() as f64);
            let mut bound = 1.0f64;
            for k in 1..=(nv as u32) {
                bound *= (top + k as f64) / k as f64;
            }
            if bound > MAX_TERMS as f64 {
                return Err(Error::parse(at, "power expands to too many terms"));
            }
        }
        let out = base.pow(e);
        self.guard(&out)?;
        Ok(out)
    }

    fn atom(&mut self) -> Result<Poly> {
        let at = self.offset();
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Num(n))) => {
                self.pos += 1;
                Ok(Poly::constant(Scalar::from_integer(n)))
            }
            Some((_, Tok::Ident(name))) => {
                self.pos += 1;
                let v = (self.lookup)(&name)
                    .ok_or_else(|| Error::parse(at, format!("undeclared variable {name}")))?;
                Ok(Poly::var(v))
            }
            Some((_, Tok::Op('('))) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::parse(self.offset(), "expected ')'"));
                }
                Ok(inner)
            }
            Some((_, Tok::Op(c))) => Err(Error::parse(at, format!("unexpected '{c}'"))),
            None => Err(Error::parse(at, "unexpected end of expression")),
        }
    }
}

/// Parses one polynomial expression, resolving identifiers through `lookup`.
pub fn parse_poly<F: Fn(&str) -> Option<Var>>(src: &str, lookup: &F) -> Result<Poly> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
        lookup,
        depth: 0,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::parse(p.offset(), "trailing input"));
    }
    Ok(out)
}

/// Splits `src` on top-level commas (commas not inside parentheses or brackets).
pub fn split_top_level(src: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i64;
    let mut start = 0;
    for (i, c) in src.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &src[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &src[start..]));
    out
}
