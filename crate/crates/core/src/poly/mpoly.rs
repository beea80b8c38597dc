use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::PolyError;
use crate::poly::universe::{config, Pair, Var, NVARS};
use crate::rational::Rational;

/// Exponent vector over the full universe.
///
/// The derived ordering compares total degree first and then the exponents
/// lexicographically in universe order, i.e. graded lex with
/// `x1 > x2 > y1 > ... > b12`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u16,
    exps: [u8; NVARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            deg: 0,
            exps: [0; NVARS],
        }
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        let mut m = Self::one();
        m.exps[v.index()] = exp_u8(e);
        m.deg = e as u16;
        m
    }

    pub fn from_exps(exps: [u8; NVARS]) -> Self {
        let deg = exps.iter().map(|&e| e as u16).sum();
        Monomial { deg, exps }
    }

    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut exps = [0u8; NVARS];
        for (v, e) in pairs {
            exps[v.index()] = exp_u8(exps[v.index()] as u32 + e);
        }
        Self::from_exps(exps)
    }

    pub fn exps(&self) -> &[u8; NVARS] {
        &self.exps
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v.index()] as u32
    }

    pub fn total_degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e
                .checked_add(*o)
                .expect("exponent overflow: per-variable degree above 255");
        }
        Monomial {
            deg: self.deg + other.deg,
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut exps = other.exps;
        for (e, s) in exps.iter_mut().zip(self.exps.iter()) {
            *e -= *s;
        }
        Monomial {
            deg: other.deg - self.deg,
            exps,
        }
    }

    /// Support: variables with nonzero exponent, in universe order.
    pub fn support(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Var::from_index(i), e as u32))
    }

    fn with_exp(&self, v: Var, e: u32) -> Monomial {
        let mut exps = self.exps;
        let old = exps[v.index()] as u16;
        exps[v.index()] = exp_u8(e);
        Monomial {
            deg: self.deg - old + e as u16,
            exps,
        }
    }
}

fn exp_u8(e: u32) -> u8 {
    u8::try_from(e).expect("exponent overflow: per-variable degree above 255")
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .support()
            .map(|(v, e)| {
                if e == 1 {
                    v.name()
                } else {
                    format!("{}^{}", v.name(), e)
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from(n))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        Self::term(Rational::one(), Monomial::var_pow(v, e))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MPoly {
                terms: vec![(m, c)],
            }
        }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated,
    /// possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(existing) => *existing += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<(Monomial, Rational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MPoly { terms }
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.total_degree())
    }

    /// Degree in the single variable `v` (0 for the zero polynomial).
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    /// Degrees of every term in the given set of variables.
    pub fn degrees_in(&self, vars: &[Var]) -> Vec<u32> {
        self.terms
            .iter()
            .map(|(m, _)| vars.iter().map(|&v| m.exp(v)).sum())
            .collect()
    }

    /// `Some(k)` when every term has degree exactly `k` in `vars`; the zero
    /// polynomial is homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree_in(&self, vars: &[Var]) -> Option<u32> {
        let degs = self.degrees_in(vars);
        let first = *degs.first()?;
        degs.iter().all(|&k| k == first).then_some(first)
    }

    pub fn is_homogeneous_in(&self, vars: &[Var], k: u32) -> bool {
        self.degrees_in(vars).iter().all(|&e| e == k)
    }

    /// Whether no variable of `vars` occurs.
    pub fn is_free_of(&self, vars: &[Var]) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| vars.iter().all(|&v| m.exp(v) == 0))
    }

    /// Variables that occur, in universe order.
    pub fn variables(&self) -> Vec<Var> {
        let mut seen = [false; NVARS];
        for (m, _) in &self.terms {
            for (v, _) in m.support() {
                seen[v.index()] = true;
            }
        }
        Var::all().filter(|v| seen[v.index()]).collect()
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, c: &Rational, mono: &Monomial) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        // multiplying by a monomial preserves graded-lex order
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.mul(mono), k * c))
                .collect(),
        }
    }

    pub fn add_ref(&self, other: &MPoly) -> MPoly {
        self.merge(other, false)
    }

    pub fn sub_ref(&self, other: &MPoly) -> MPoly {
        self.merge(other, true)
    }

    fn merge(&self, other: &MPoly, negate: bool) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| {
            let c = if negate { -c } else { c.clone() };
            (*m, c)
        }));
        MPoly { terms: out }
    }

    pub fn mul_ref(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_monomial(c, m);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_monomial(c, m);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() + other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(existing) => *existing += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    pub fn neg_ref(&self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    /// `self^k`, refusing results above the configured total-degree cap.
    pub fn pow(&self, k: u32) -> Result<MPoly, PolyError> {
        let deg = self.total_degree().unwrap_or(0);
        let requested = deg.saturating_mul(k);
        let cap = config().max_total_degree;
        if requested > cap {
            return Err(PolyError::DegreeCap { requested, cap });
        }
        Ok(self.pow_unchecked(k))
    }

    pub(crate) fn pow_unchecked(&self, k: u32) -> MPoly {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_ref(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_ref(&base);
            }
        }
        result
    }

    /// `k`-fold partial derivative in `v`.
    pub fn derivative(&self, v: Var, k: u32) -> MPoly {
        if k == 0 {
            return self.clone();
        }
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e < k {
                continue;
            }
            let factor: Rational = (0..k).map(|j| Rational::from((e - j) as i64)).product();
            terms.push((m.with_exp(v, e - k), c * &factor));
        }
        // dividing every surviving term by v^k keeps the order
        MPoly { terms }
    }

    /// Mixed partial derivative `d^(i+j) / dv^i dw^j`.
    pub fn derivative2(&self, v: Var, i: u32, w: Var, j: u32) -> MPoly {
        self.derivative(v, i).derivative(w, j)
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn substitute(&self, assignment: &[(Var, MPoly)]) -> MPoly {
        if assignment.is_empty() {
            return self.clone();
        }
        let mut power_cache: HashMap<(usize, u32), MPoly> = HashMap::new();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut factor = MPoly::constant(c.clone());
            for (slot, (v, value)) in assignment.iter().enumerate() {
                let e = m.exp(*v);
                if e == 0 {
                    continue;
                }
                rest = rest.with_exp(*v, 0);
                let p = power_cache
                    .entry((slot, e))
                    .or_insert_with(|| value.pow_unchecked(e));
                factor = factor.mul_ref(p);
            }
            for (fm, fc) in factor.terms {
                let key = fm.mul(&rest);
                match acc.get_mut(&key) {
                    Some(existing) => *existing += &fc,
                    None => {
                        acc.insert(key, fc);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    /// Substitutes rational values for some variables.
    pub fn evaluate(&self, values: &[(Var, Rational)]) -> MPoly {
        let assignment: Vec<(Var, MPoly)> = values
            .iter()
            .map(|(v, r)| (*v, MPoly::constant(r.clone())))
            .collect();
        self.substitute(&assignment)
    }

    /// Renames variables (a substitution by single variables).
    pub fn rename(&self, map: &[(Var, Var)]) -> MPoly {
        let assignment: Vec<(Var, MPoly)> = map
            .iter()
            .map(|(from, to)| (*from, MPoly::var(*to)))
            .collect();
        self.substitute(&assignment)
    }

    /// Exact division. Fails if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MPoly) -> Result<MPoly, PolyError> {
        let (lm, lc) = divisor
            .leading_term()
            .ok_or_else(|| PolyError::InexactDivision("division by zero".into()))?;
        if divisor.terms.len() == 1 {
            let inv = lc.recip().unwrap();
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !lm.divides(m) {
                    return Err(PolyError::InexactDivision(format!(
                        "monomial {m:?} not divisible by {lm:?}"
                    )));
                }
                terms.push((lm.quotient_of(m), c * &inv));
            }
            return Ok(MPoly { terms });
        }
        let inv = lc.recip().unwrap();
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !lm.divides(&m) {
                return Err(PolyError::InexactDivision(format!(
                    "leading monomial {m:?} not divisible by {lm:?}"
                )));
            }
            let qm = lm.quotient_of(&m);
            let qc = &c * &inv;
            rem = rem.sub_ref(&divisor.mul_monomial(&qc, &qm));
            quotient.push((qm, qc));
        }
        // quotient terms were produced in strictly descending order
        Ok(MPoly { terms: quotient })
    }

    /// Groups terms by their exponents in a variable pair:
    /// `self = sum coeffs[(i, j)] * v1^i * v2^j`.
    pub fn split_by_pair(&self, pair: Pair) -> Vec<((u32, u32), MPoly)> {
        let (v1, v2) = pair.vars();
        let mut groups: HashMap<(u32, u32), Vec<(Monomial, Rational)>> = HashMap::new();
        for (m, c) in &self.terms {
            let key = (m.exp(v1), m.exp(v2));
            let rest = m.with_exp(v1, 0).with_exp(v2, 0);
            groups.entry(key).or_default().push((rest, c.clone()));
        }
        let mut out: Vec<((u32, u32), MPoly)> = groups
            .into_iter()
            .map(|(k, t)| (k, MPoly::from_terms(t)))
            .collect();
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }

    /// Coefficient of `v^e`, treating all other variables as constants.
    pub fn coefficient_of(&self, v: Var, e: u32) -> MPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) == e)
            .map(|(m, c)| (m.with_exp(v, 0), c.clone()));
        MPoly::from_terms(terms)
    }

    /// Coefficient of a full monomial in a subset of variables.
    pub fn coefficient_of_monomial(&self, vars: &[(Var, u32)]) -> MPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| vars.iter().all(|&(v, e)| m.exp(v) == e))
            .map(|(m, c)| {
                let mut rest = *m;
                for &(v, _) in vars {
                    rest = rest.with_exp(v, 0);
                }
                (rest, c.clone())
            });
        MPoly::from_terms(terms)
    }

    /// Decides whether `other = c * self` for a nonzero rational `c`,
    /// returning `c`. Two zero polynomials are proportional with ratio 1.
    pub fn ratio_to(&self, other: &MPoly) -> Option<Rational> {
        are_proportional(self, other)
    }
}

/// Decides proportionality by comparing supports and cross-multiplying with
/// the graded-lex leading coefficients. Returns `c` with `q = c * p`.
pub fn are_proportional(p: &MPoly, q: &MPoly) -> Option<Rational> {
    match (p.leading_coefficient(), q.leading_coefficient()) {
        (None, None) => Some(Rational::one()),
        (Some(lp), Some(lq)) => {
            if p.terms.len() != q.terms.len() {
                return None;
            }
            let same = p
                .terms
                .iter()
                .zip(q.terms.iter())
                .all(|((mp, cp), (mq, cq))| mp == mq && cp * lq == cq * lp);
            same.then(|| lq / lp)
        }
        _ => None,
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::poly::text::to_text(self))
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::poly::text::to_text(self))
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $impl_fn:ident) => {
        impl<'a> $tr<&'a MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &'a MPoly) -> MPoly {
                self.$impl_fn(rhs)
            }
        }
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$impl_fn(&rhs)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &'a MPoly) -> MPoly {
                self.$impl_fn(rhs)
            }
        }
        impl<'a> $tr<MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$impl_fn(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, add_ref);
poly_binop!(Sub, sub, sub_ref);
poly_binop!(Mul, mul, mul_ref);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.neg_ref()
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.neg_ref()
    }
}

impl std::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> Self {
        iter.fold(MPoly::zero(), |a, b| a.add_ref(&b))
    }
}

impl From<Rational> for MPoly {
    fn from(c: Rational) -> Self {
        MPoly::constant(c)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_poly;

    fn p(s: &str) -> MPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a0 = MPoly::var(Var::a(0));
        let a1 = MPoly::var(Var::a(1));
        assert_eq!((&a0 + &a1) * (&a0 - &a1), p("a0^2 - a1^2"));
    }

    #[test]
    fn annihilator() {
        assert!((p("a0 + 3*x1") * MPoly::zero()).is_zero());
    }

    #[test]
    fn binomial_fourth_power() {
        let s = p("x1 + x2").pow(4).unwrap();
        assert_eq!(s, p("x1^4 + 4*x1^3*x2 + 6*x1^2*x2^2 + 4*x1*x2^3 + x2^4"));
    }

    #[test]
    fn pow_degree_cap() {
        let err = p("x1 + x2").pow(300).unwrap_err();
        assert!(matches!(err, PolyError::DegreeCap { .. }));
    }

    #[test]
    fn derivatives() {
        let f = p("x1^3*x2");
        assert_eq!(f.derivative(Var::X1, 1), p("3*x1^2*x2"));
        assert!(f.derivative(Var::X2, 2).is_zero());
        assert_eq!(p("a0*x1^3").derivative(Var::X1, 3), p("6*a0"));
        assert!(MPoly::int(5).derivative(Var::X1, 1).is_zero());
    }

    #[test]
    fn substitution() {
        let bracket = p("x1*y2 - x2*y1");
        let on_diag = bracket.substitute(&[
            (Var::Y1, MPoly::var(Var::X1)),
            (Var::Y2, MPoly::var(Var::X2)),
        ]);
        assert!(on_diag.is_zero());
        assert_eq!(p("a0").substitute(&[]), p("a0"));
        let f = p("a0*x1^2 + 2*a1*x1*x2 + a2*x2^2");
        let g = f.evaluate(&[
            (Var::a(0), Rational::one()),
            (Var::a(1), Rational::zero()),
            (Var::a(2), Rational::one()),
        ]);
        assert_eq!(g, p("x1^2 + x2^2"));
    }

    #[test]
    fn simultaneous_substitution_swaps() {
        let f = p("x1^2*x2");
        let g = f.substitute(&[
            (Var::X1, MPoly::var(Var::X2)),
            (Var::X2, MPoly::var(Var::X1)),
        ]);
        assert_eq!(g, p("x1*x2^2"));
    }

    #[test]
    fn exact_division() {
        let num = p("x1^3*y2^3 - x2^3*y1^3");
        let den = p("x1*y2 - x2*y1");
        let q = num.div_exact(&den).unwrap();
        assert_eq!(&q * &den, num);
        assert!(p("x1^2 + 1").div_exact(&p("x1 + 2")).is_err());
    }

    #[test]
    fn proportionality() {
        let a = p("2*a0*a2 - 2*a1^2");
        let b = p("a0*a2 - a1^2");
        assert_eq!(are_proportional(&a, &b), Some(Rational::new(1, 2)));
        assert_eq!(are_proportional(&p("a0"), &p("a1")), None);
        assert_eq!(
            are_proportional(&MPoly::zero(), &MPoly::zero()),
            Some(Rational::one())
        );
        assert_eq!(are_proportional(&MPoly::zero(), &p("a0")), None);
    }

    #[test]
    fn split_by_pair_collects() {
        let f = p("a0*x1^2 + 2*a1*x1*x2 + a2*x2^2 + a3*x1^2");
        let parts = f.split_by_pair(Pair::X);
        assert_eq!(parts[0], ((2, 0), p("a0 + a3")));
        assert_eq!(parts[1], ((1, 1), p("2*a1")));
        assert_eq!(parts[2], ((0, 2), p("a2")));
    }
}
