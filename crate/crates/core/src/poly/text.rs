//! Canonical text form of polynomials.
//!
//! Terms are written in descending graded-lex order as
//! `c*v1^e1*...*vk^ek`, joined by ` + ` / ` - `. Unit coefficients are
//! elided on non-constant terms, exponents of 1 are elided, and non-integer
//! coefficients are parenthesised: `2*a0*a2 - 2*a1^2`, `(1/6)*x1^2*a0`.

use crate::error::PolyError;
use crate::poly::mpoly::{MPoly, Monomial};
use crate::poly::universe::Var;
use crate::rational::Rational;

pub fn to_text(p: &MPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let magnitude = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if !magnitude.is_one() || m.is_one() {
            if magnitude.is_integer() {
                factors.push(magnitude.to_string());
            } else {
                factors.push(format!("({magnitude})"));
            }
        }
        for (v, e) in m.support() {
            if e == 1 {
                factors.push(v.name());
            } else {
                factors.push(format!("{}^{}", v.name(), e));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// Parses the canonical text form. The parser also accepts any sum of signed
/// products of integers, parenthesised rationals and variable powers, so
/// hand-written input need not be pre-sorted.
pub fn parse_poly(src: &str) -> Result<MPoly, PolyError> {
    Parser::new(src).parse()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, message: impl Into<String>) -> PolyError {
        PolyError::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<(), PolyError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", b as char)))
        }
    }

    fn parse(mut self) -> Result<MPoly, PolyError> {
        let mut terms: Vec<(Monomial, Rational)> = Vec::new();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return Err(self.err("empty input")),
                None => break,
                Some(b'+') if !first => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(c) => return Err(self.err(format!("unexpected `{}`", c as char))),
            };
            first = false;
            let (m, c) = self.term()?;
            terms.push((m, if sign < 0 { -c } else { c }));
        }
        Ok(MPoly::from_terms(terms))
    }

    fn term(&mut self) -> Result<(Monomial, Rational), PolyError> {
        let mut coef = Rational::one();
        let mut mono = Monomial::one();
        loop {
            match self.peek() {
                Some(b'(') => {
                    self.pos += 1;
                    let r = self.rational_inner()?;
                    self.expect(b')')?;
                    coef = coef * r;
                }
                Some(c) if c.is_ascii_digit() => {
                    let n = self.integer()?;
                    coef = coef * n;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let v = self.variable()?;
                    let e = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.integer()?
                            .to_i64()
                            .and_then(|e| u32::try_from(e).ok())
                            .ok_or_else(|| self.err("bad exponent"))?
                    } else {
                        1
                    };
                    mono = mono.mul(&Monomial::var_pow(v, e));
                }
                _ => return Err(self.err("expected a coefficient or variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((mono, coef));
            }
        }
    }

    fn rational_inner(&mut self) -> Result<Rational, PolyError> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.integer()?;
        let r = if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.integer()?;
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            n / d
        } else {
            n
        };
        Ok(if neg { -r } else { r })
    }

    fn integer(&mut self) -> Result<Rational, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse::<Rational>()
    }

    fn variable(&mut self) -> Result<Var, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Var::parse(name).map_err(|_| PolyError::Parse {
            position: start,
            message: format!("unknown variable `{name}`"),
        })
    }
}
