//! A small expression language over named covariants.
//!
//! ```text
//! expr    := product (('+' | '-') product)*
//! product := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' nat)*
//! primary := rational | name | '(' expr ')' | '(' expr ',' expr ')' '_' nat
//! ```
//!
//! Columns in error messages are 1-based; an error at the end of the input
//! points one past the last character.

use std::collections::BTreeMap;
use std::fmt;

use binform_core::discriminant::{catalog, discriminant_det, evectant};
use binform_core::forms::{generic_form, transvectant, BinaryForm};
use binform_core::{CoefSymbol, Pair, Rational};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("unknown atom `{name}` at column {column} for d = {d}")]
    UnknownAtom { name: String, column: usize, d: u32 },
    #[error("cannot evaluate at column {column}: {message}")]
    Eval { column: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Atom { name: String, column: usize },
    Num(Rational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
    Transvect(Box<Expr>, Box<Expr>, u32, usize),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Atom { name, .. } => write!(f, "{name}"),
            Expr::Num(r) => write!(f, "{r}"),
            Expr::Neg(a) => write!(f, "neg({a})"),
            Expr::Add(a, b) => write!(f, "add({a}, {b})"),
            Expr::Sub(a, b) => write!(f, "sub({a}, {b})"),
            Expr::Mul(a, b, _) => match **a {
                Expr::Num(ref r) => write!(f, "scale({r}, {b})"),
                _ => write!(f, "mul({a}, {b})"),
            },
            Expr::Pow(a, k) => write!(f, "pow({a}, {k})"),
            Expr::Transvect(a, b, r, _) => write!(f, "transvect({a}, {b}, {r})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(String),
    Name(String),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            out.push((Tok::Num(chars[start..i].iter().collect()), col));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Name(chars[start..i].iter().collect()), col));
        } else if "+-*^(),_".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(ExprError::Syntax {
                column: col,
                message: format!("unexpected `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            column: self.column(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn nat(&mut self) -> Result<u32, ExprError> {
        match self.peek() {
            Some(Tok::Num(s)) if !s.contains('/') => {
                let n = s.parse().or_else(|_| self.err("integer too large"))?;
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected a natural number"),
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.product()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let col = self.column();
            if !self.eat('*') {
                return Ok(lhs);
            }
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?), col);
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let mut base = self.primary()?;
        while self.eat('^') {
            base = Expr::Pow(Box::new(base), self.nat()?);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        let col = self.column();
        match self.peek().cloned() {
            Some(Tok::Num(s)) => {
                self.pos += 1;
                let r: Rational = s.parse().or_else(|_| self.err("bad number"))?;
                Ok(Expr::Num(r))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                Ok(Expr::Atom { name, column: col })
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let a = self.expr()?;
                if self.eat(')') {
                    return Ok(a);
                }
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                self.expect('_')?;
                let r = self.nat()?;
                Ok(Expr::Transvect(Box::new(a), Box::new(b), r, col))
            }
            Some(_) => self.err("expected an operand"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, ExprError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.chars().count() + 1,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

pub const ATOMS: [&str; 11] = ["F", "H", "T", "i", "j", "A", "C1", "C2", "D1", "D2", "E"];

/// Named covariants of the generic form of order `d`.
pub struct Env {
    d: u32,
    forms: BTreeMap<String, BinaryForm>,
}

impl Env {
    pub fn new(d: u32) -> binform_core::Result<Env> {
        let mut forms = BTreeMap::new();
        if (2..=5).contains(&d) {
            let c = catalog(d)?;
            for (k, v) in c.entries {
                let k = if k == "E_Delta" { "E".to_string() } else { k };
                if ATOMS.contains(&k.as_str()) {
                    forms.insert(k, v);
                }
            }
        } else {
            let f = generic_form(d, CoefSymbol::A, Pair::X)?;
            if d >= 2 {
                let h = transvectant(&f, &f, 2)?;
                forms.insert("T".into(), transvectant(&f, &h, 1)?);
                forms.insert("H".into(), h);
            }
            forms.insert("F".into(), f);
        }
        Ok(Env { d, forms })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    fn atom(&mut self, name: &str, column: usize) -> Result<BinaryForm, ExprError> {
        if let Some(f) = self.forms.get(name) {
            return Ok(f.clone());
        }
        if name == "E" && self.d >= 2 {
            // outside the catalog range E is computed on demand
            let e = discriminant_det(self.d)
                .and_then(|delta| evectant(&delta, self.d))
                .map_err(|e| ExprError::Eval {
                    column,
                    message: e.to_string(),
                })?;
            self.forms.insert("E".into(), e.clone());
            return Ok(e);
        }
        Err(ExprError::UnknownAtom {
            name: name.into(),
            column,
            d: self.d,
        })
    }

    pub fn eval(&mut self, e: &Expr) -> Result<BinaryForm, ExprError> {
        let wrap = |column: usize| {
            move |err: binform_core::Error| ExprError::Eval {
                column,
                message: err.to_string(),
            }
        };
        Ok(match e {
            Expr::Atom { name, column } => self.atom(name, *column)?,
            Expr::Num(r) => BinaryForm::constant(binform_core::MPoly::constant(r.clone()), Pair::X),
            Expr::Neg(a) => self.eval(a)?.scale(&Rational::from(-1)),
            Expr::Add(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                x.add(&y).map_err(wrap(0))?
            }
            Expr::Sub(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                x.sub(&y).map_err(wrap(0))?
            }
            Expr::Mul(a, b, col) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                x.mul(&y).map_err(wrap(*col))?
            }
            Expr::Pow(a, k) => self.eval(a)?.pow(*k).map_err(wrap(0))?,
            Expr::Transvect(a, b, r, col) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                if *r > x.order().min(y.order()) {
                    return Err(ExprError::Eval {
                        column: *col,
                        message: format!(
                            "transvectant index {r} exceeds operand orders {} and {}",
                            x.order(),
                            y.order()
                        ),
                    });
                }
                transvectant(&x, &y, *r).map_err(wrap(*col))?
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        assert_eq!(
            parse_expr("(F,F)_2").unwrap().to_string(),
            "transvect(F, F, 2)"
        );
        assert_eq!(
            parse_expr("59*A^2").unwrap().to_string(),
            "scale(59, pow(A, 2))"
        );
        assert_eq!(
            parse_expr("59*A^2 + 320*(i^3,H)_6").unwrap().to_string(),
            "add(scale(59, pow(A, 2)), scale(320, transvect(pow(i, 3), H, 6)))"
        );
        assert_eq!(
            parse_expr("-1/6*i*F").unwrap().to_string(),
            "mul(mul(neg(1/6), i), F)"
        );
        assert_eq!(parse_expr("(F)").unwrap().to_string(), "F");
        assert_eq!(
            parse_expr("a*b*c").unwrap().to_string(),
            "mul(mul(a, b), c)"
        );
    }

    #[test]
    fn syntax_errors_have_columns() {
        let col = |s: &str| match parse_expr(s) {
            Err(ExprError::Syntax { column, .. }) => column,
            other => panic!("{other:?}"),
        };
        assert_eq!(col("(F,F)_"), 7);
        assert_eq!(col("(F,F"), 5);
        assert_eq!(col("F +"), 4);
        assert_eq!(col("F $ H"), 3);
        assert_eq!(col("F H"), 3);
        assert_eq!(col("F^x"), 3);
    }
}
