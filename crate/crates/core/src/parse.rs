//! Polynomial text grammar: parsing and canonical printing.
//!
//! ```text
//! poly   := term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' uint)? | '(' poly ')'
//! coeff  := int ('/' uint)?
//! ```
//! Variables match `[A-Za-z_][A-Za-z0-9_]*`. A leading `-` in front of the
//! first term (also directly after `(`) is accepted as a convenience.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rat};
use crate::ring::VarSet;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

type Spanned = (Tok, usize, usize);

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, bytes: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn bump(&mut self) {
        if self.bytes[self.pos] == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        self.pos += 1;
    }

    fn tokens(mut self) -> Result<Vec<Spanned>> {
        let mut out = Vec::new();
        while self.pos < self.bytes.len() {
            let (line, col) = (self.line, self.col);
            let b = self.bytes[self.pos];
            match b {
                b' ' | b'\t' | b'\r' | b'\n' => self.bump(),
                b'+' => {
                    out.push((Tok::Plus, line, col));
                    self.bump();
                }
                b'-' => {
                    out.push((Tok::Minus, line, col));
                    self.bump();
                }
                b'*' => {
                    out.push((Tok::Star, line, col));
                    self.bump();
                }
                b'^' => {
                    out.push((Tok::Caret, line, col));
                    self.bump();
                }
                b'/' => {
                    out.push((Tok::Slash, line, col));
                    self.bump();
                }
                b'(' => {
                    out.push((Tok::LParen, line, col));
                    self.bump();
                }
                b')' => {
                    out.push((Tok::RParen, line, col));
                    self.bump();
                }
                b'0'..=b'9' => {
                    let start = self.pos;
                    while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                        self.bump();
                    }
                    let n: BigInt = self.src[start..self.pos].parse().unwrap();
                    out.push((Tok::Int(n), line, col));
                }
                b'A'..=b'Z' | b'a'..=b'z' | b'_' => {
                    let start = self.pos;
                    while self.pos < self.bytes.len()
                        && (self.bytes[self.pos].is_ascii_alphanumeric()
                            || self.bytes[self.pos] == b'_')
                    {
                        self.bump();
                    }
                    out.push((Tok::Ident(self.src[start..self.pos].to_string()), line, col));
                }
                _ => return Err(self.error(format!("unexpected character `{}`", b as char))),
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    idx: usize,
    ring: &'a VarSet,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.idx)
            .or_else(|| self.toks.last())
            .map(|(_, l, c)| (*l, *c))
            .unwrap_or((1, 1))
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::Parse { line, col, msg: msg.into() }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expect_uint(&mut self) -> Result<BigInt> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.idx += 1;
                Ok(n)
            }
            _ => Err(self.error("expected an unsigned integer")),
        }
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if self.eat(&Tok::Minus) {
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.term()?);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.idx += 1;
                let den = if self.eat(&Tok::Slash) { self.expect_uint()? } else { BigInt::one() };
                if den == BigInt::from(0) {
                    return Err(self.error("zero denominator"));
                }
                Polynomial::constant(self.ring, Rat::new(n, den))
            }
            _ => self.factor()?,
        };
        while self.eat(&Tok::Star) {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.idx += 1;
                let Some(i) = self.ring.index_of(&name) else {
                    let (line, col) = {
                        let (_, l, c) = self.toks[self.idx - 1];
                        (l, c)
                    };
                    return Err(Error::Parse {
                        line,
                        col,
                        msg: format!("unknown variable `{name}`"),
                    });
                };
                let v = Polynomial::var(self.ring, i);
                if self.eat(&Tok::Caret) {
                    let e = self.expect_uint()?;
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| self.error("exponent too large"))?;
                    Ok(v.pow(e))
                } else {
                    Ok(v)
                }
            }
            Some(Tok::LParen) => {
                self.idx += 1;
                let p = self.poly()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.error("expected `)`"));
                }
                Ok(p)
            }
            _ => Err(self.error("expected a variable or `(`")),
        }
    }
}

/// Parses `text` into an exact polynomial over `ring`.
pub fn parse_polynomial(text: &str, ring: &VarSet) -> Result<Polynomial> {
    let toks = Lexer::new(text).tokens()?;
    if toks.is_empty() {
        return Err(Error::Parse { line: 1, col: 1, msg: "empty input".into() });
    }
    let mut p = Parser { toks, idx: 0, ring };
    let out = p.poly()?;
    if p.idx != p.toks.len() {
        return Err(p.error("trailing input"));
    }
    Ok(out)
}

fn write_term(
    f: &mut std::fmt::Formatter<'_>,
    ring: &VarSet,
    m: &Monomial,
    c: &Rat,
    first: bool,
) -> std::fmt::Result {
    use num_traits::Signed;
    let neg = c.is_negative();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, "-")?;
    } else {
        write!(f, "+")?;
    }
    let ac = c.abs();
    let coeff_is_one = ac.is_one();
    let mut wrote = false;
    if !coeff_is_one || m.is_one() {
        write!(f, "{}", ac.numer())?;
        if !ac.denom().is_one() {
            write!(f, "/{}", ac.denom())?;
        }
        wrote = true;
    }
    for i in 0..ring.len() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        if wrote {
            write!(f, "*")?;
        }
        write!(f, "{}", ring.name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
        wrote = true;
    }
    Ok(())
}

impl std::fmt::Display for Polynomial {
    /// Deterministic printing: terms descending under grevlex, exact
    /// coefficients. Output reparses to an equal polynomial.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().iter().enumerate() {
            write_term(f, self.ring(), m, c, i == 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_conic_example() {
        let r = VarSet::new(&["x_1", "x_2"]).unwrap();
        let p = parse_polynomial("4*x_1^2+x_2^2-4", &r).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.total_degree(), 2);
        assert_eq!(p.to_string(), "4*x_1^2+x_2^2-4");
    }

    #[test]
    fn parses_zero() {
        let r = VarSet::new(&["x"]).unwrap();
        let p = parse_polynomial("0", &r).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn parses_surface_generator() {
        let r = VarSet::new(&["x_1", "x_2", "x_3"]).unwrap();
        let p = parse_polynomial("x_3-x_1^2-x_2^2", &r).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.total_degree(), 2);
    }

    #[test]
    fn reports_unknown_variable_with_position() {
        let r = VarSet::new(&["x"]).unwrap();
        match parse_polynomial("x + zz", &r) {
            Err(Error::Parse { col, msg, .. }) => {
                assert_eq!(col, 5);
                assert!(msg.contains("zz"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_implicit_multiplication() {
        let r = VarSet::new(&["x"]).unwrap();
        assert!(parse_polynomial("2x", &r).is_err());
    }

    #[test]
    fn rational_coefficients_round_trip() {
        let r = VarSet::new(&["x", "y"]).unwrap();
        let p = parse_polynomial("1/2*x*y-3/4", &r).unwrap();
        let printed = p.to_string();
        let q = parse_polynomial(&printed, &r).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parenthesized_subexpressions() {
        let r = VarSet::new(&["x", "y"]).unwrap();
        let p = parse_polynomial("(x+y)*(x-y)", &r).unwrap();
        let q = parse_polynomial("x^2-y^2", &r).unwrap();
        assert_eq!(p, q);
    }
}
