use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, PolyError, Result};
use crate::poly::json::PolyJson;
use crate::poly::{config, CoefSymbol, MPoly, Monomial, Pair, Var};
use crate::rational::{binomial, factorial, Rational};

/// A binary form `sum coefs[i] * v1^(m-i) * v2^i` in one variable pair.
///
/// Coefficients are arbitrary polynomials free of the pair's own variables,
/// so a form in `x` may carry `a`, `b` or `y` variables in its coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    order: u32,
    pair: Pair,
    coefs: Vec<MPoly>,
}

impl BinaryForm {
    pub fn new(order: u32, pair: Pair, coefs: Vec<MPoly>) -> Result<Self> {
        if coefs.len() != order as usize + 1 {
            return Err(PolyError::Dimension(format!(
                "order {order} form needs {} coefficients, got {}",
                order + 1,
                coefs.len()
            ))
            .into());
        }
        let (v1, v2) = pair.vars();
        if coefs.iter().any(|c| !c.is_free_of(&[v1, v2])) {
            return Err(Error::Precondition(format!(
                "coefficients must be free of the {} variables",
                pair.name()
            )));
        }
        Ok(BinaryForm { order, pair, coefs })
    }

    pub fn zero(order: u32, pair: Pair) -> Self {
        BinaryForm {
            order,
            pair,
            coefs: vec![MPoly::zero(); order as usize + 1],
        }
    }

    pub fn constant(c: MPoly, pair: Pair) -> Self {
        BinaryForm {
            order: 0,
            pair,
            coefs: vec![c],
        }
    }

    /// Reads a polynomial homogeneous of degree `order` in `pair`.
    pub fn from_poly(p: &MPoly, pair: Pair, order: u32) -> Result<Self> {
        let (v1, v2) = pair.vars();
        let mut coefs = vec![MPoly::zero(); order as usize + 1];
        for ((i, j), c) in p.split_by_pair(pair) {
            if i + j != order {
                return Err(Error::Precondition(format!(
                    "polynomial is not homogeneous of order {order} in {}",
                    pair.name()
                )));
            }
            coefs[j as usize] = c;
        }
        debug_assert!(coefs.iter().all(|c| c.is_free_of(&[v1, v2])));
        Ok(BinaryForm { order, pair, coefs })
    }

    /// Like [`BinaryForm::from_poly`], inferring the order. The zero
    /// polynomial gives the zero form of order 0.
    pub fn from_homogeneous(p: &MPoly, pair: Pair) -> Result<Self> {
        let (v1, v2) = pair.vars();
        let order = p.homogeneous_degree_in(&[v1, v2]).unwrap_or(0);
        Self::from_poly(p, pair, order)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn pair(&self) -> Pair {
        self.pair
    }

    pub fn coefs(&self) -> &[MPoly] {
        &self.coefs
    }

    /// Coefficient of `v1^(m-i) v2^i`.
    pub fn coef(&self, i: usize) -> &MPoly {
        &self.coefs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coefs.iter().all(|c| c.is_zero())
    }

    pub fn to_poly(&self) -> MPoly {
        let (v1, v2) = self.pair.vars();
        let m = self.order;
        let mut out = MPoly::zero();
        for (i, c) in self.coefs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = Monomial::from_pairs([(v1, m - i as u32), (v2, i as u32)]);
            out = out + c.mul_monomial(&Rational::one(), &mono);
        }
        out
    }

    /// Homogeneous degree of the coefficients in the given variables.
    pub fn coef_degree(&self, vars: &[Var]) -> Option<u32> {
        let mut deg = None;
        for c in self.coefs.iter().filter(|c| !c.is_zero()) {
            let d = c.homogeneous_degree_in(vars)?;
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// Degree in the generic `a` coefficients of a form of order `d`.
    pub fn degree_in_a(&self, d: usize) -> Option<u32> {
        let vars: Vec<Var> = (0..=d).map(Var::a).collect();
        self.coef_degree(&vars)
    }

    pub fn map_coefs(&self, f: impl Fn(&MPoly) -> MPoly) -> BinaryForm {
        BinaryForm {
            order: self.order,
            pair: self.pair,
            coefs: self.coefs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> BinaryForm {
        self.map_coefs(|p| p.scale(c))
    }

    pub fn mul_poly(&self, p: &MPoly) -> BinaryForm {
        self.map_coefs(|c| c * p)
    }

    pub fn evaluate(&self, values: &[(Var, Rational)]) -> BinaryForm {
        self.map_coefs(|c| c.evaluate(values))
    }

    pub fn substitute(&self, assignment: &[(Var, MPoly)]) -> BinaryForm {
        self.map_coefs(|c| c.substitute(assignment))
    }

    fn check_compatible(&self, other: &BinaryForm, what: &str) -> Result<()> {
        if self.pair != other.pair {
            return Err(Error::Precondition(format!(
                "{what}: forms use different pairs"
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &BinaryForm) -> Result<BinaryForm> {
        self.check_compatible(other, "sum")?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.order != other.order {
            return Err(Error::Precondition(format!(
                "sum of forms of orders {} and {}",
                self.order, other.order
            )));
        }
        Ok(BinaryForm {
            order: self.order,
            pair: self.pair,
            coefs: self
                .coefs
                .iter()
                .zip(&other.coefs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &BinaryForm) -> Result<BinaryForm> {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn mul(&self, other: &BinaryForm) -> Result<BinaryForm> {
        self.check_compatible(other, "product")?;
        Ok(BinaryForm {
            order: self.order + other.order,
            pair: self.pair,
            coefs: convolve(&self.coefs, &other.coefs),
        })
    }

    pub fn pow(&self, k: u32) -> Result<BinaryForm> {
        let mut acc = BinaryForm::constant(MPoly::one(), self.pair);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `d^(p+q) / dv1^p dv2^q`.
    pub fn partial(&self, p: u32, q: u32) -> BinaryForm {
        let m = self.order;
        if p + q > m {
            return BinaryForm::zero(0, self.pair);
        }
        let coefs = (q..=m - p)
            .map(|k| {
                let c = falling(m - k, p) * falling(k, q);
                self.coefs[k as usize].scale(&c)
            })
            .collect();
        BinaryForm {
            order: m - p - q,
            pair: self.pair,
            coefs,
        }
    }

    /// Moves the form to another variable pair.
    pub fn with_pair(&self, pair: Pair) -> Result<BinaryForm> {
        BinaryForm::new(self.order, pair, self.coefs.clone())
    }

    /// Value at a point `(v1, v2)` given by polynomials.
    pub fn at(&self, p1: &MPoly, p2: &MPoly) -> MPoly {
        let (v1, v2) = self.pair.vars();
        self.to_poly()
            .substitute(&[(v1, p1.clone()), (v2, p2.clone())])
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(FormJson::from(self)).expect("form JSON serialization")
    }
}

#[derive(Serialize, Deserialize)]
struct FormJson {
    order: u32,
    pair: String,
    coefs: Vec<PolyJson>,
}

impl From<&BinaryForm> for FormJson {
    fn from(f: &BinaryForm) -> Self {
        FormJson {
            order: f.order,
            pair: f.pair.name().to_string(),
            coefs: f.coefs.iter().map(PolyJson::from).collect(),
        }
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} order {}] {}",
            self.pair.name(),
            self.order,
            self.to_poly()
        )
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// `n (n-1) ... (n-k+1)`.
pub(crate) fn falling(n: u32, k: u32) -> Rational {
    (0..k)
        .map(|j| Rational::from(n as i64 - j as i64))
        .product()
}

fn convolve(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let mut out = vec![MPoly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// The generic form `sum C(d,i) s_i v1^(d-i) v2^i`.
pub fn generic_form(d: u32, symbol: CoefSymbol, pair: Pair) -> Result<BinaryForm> {
    let cap = config().max_form_degree;
    if d as usize > cap {
        return Err(Error::Range(format!(
            "order {d} exceeds the configured cap {cap}"
        )));
    }
    let coefs = (0..=d as usize)
        .map(|i| MPoly::var(symbol.var(i)).scale(&binomial(d as i64, i as i64)))
        .collect();
    Ok(BinaryForm {
        order: d,
        pair,
        coefs,
    })
}

/// The transvectant `(A, B)_r`, scaled by `(m-r)!(n-r)!/(m!n!)`.
/// It is the zero form of order `max(m+n-2r, 0)` once `r > min(m, n)`.
pub fn transvectant(a: &BinaryForm, b: &BinaryForm, r: u32) -> Result<BinaryForm> {
    a.check_compatible(b, "transvectant")?;
    let (m, n) = (a.order, b.order);
    if r > m.min(n) {
        return Ok(BinaryForm::zero((m + n).saturating_sub(2 * r), a.pair));
    }
    let len = (m + n - 2 * r) as usize + 1;
    let mut acc = vec![MPoly::zero(); len];
    for i in 0..=r {
        let da = a.partial(r - i, i);
        let db = b.partial(i, r - i);
        let mut c = binomial(r as i64, i as i64);
        if i % 2 == 1 {
            c = -c;
        }
        for (k, t) in convolve(&da.coefs, &db.coefs).into_iter().enumerate() {
            if !t.is_zero() {
                acc[k] = &acc[k] + &t.scale(&c);
            }
        }
    }
    let pre = factorial(m - r) * factorial(n - r) / (factorial(m) * factorial(n));
    Ok(BinaryForm {
        order: m + n - 2 * r,
        pair: a.pair,
        coefs: acc.into_iter().map(|c| c.scale(&pre)).collect(),
    })
}

/// `(1/d!) x2^(d-i) (-x1)^i`, the form identified with `a_i`.
pub fn dual_monomial(i: u32, d: u32) -> Result<BinaryForm> {
    if i > d {
        return Err(Error::Range(format!("dual monomial index {i} exceeds {d}")));
    }
    let mut coefs = vec![MPoly::zero(); d as usize + 1];
    let mut c = factorial(d).recip().unwrap();
    if i % 2 == 1 {
        c = -c;
    }
    // x1^i x2^(d-i) sits at index d-i
    coefs[(d - i) as usize] = MPoly::constant(c);
    Ok(BinaryForm {
        order: d,
        pair: Pair::X,
        coefs,
    })
}

/// A form with rational coefficients written in the generic normalisation:
/// `values[i] = coefficient / C(d,i)`, ready to substitute for `a_i`.
pub fn generic_values(f: &BinaryForm) -> Result<Vec<Rational>> {
    let d = f.order as i64;
    f.coefs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let v = c.constant_value().ok_or_else(|| {
                Error::Precondition("form must have rational coefficients".into())
            })?;
            Ok(v / binomial(d, i as i64))
        })
        .collect()
}

/// The assignment `a_i := values[i]`.
pub fn a_assignment(values: &[Rational]) -> Vec<(Var, Rational)> {
    values
        .iter()
        .enumerate()
        .map(|(i, v)| (Var::a(i), v.clone()))
        .collect()
}

/// The assignment `b_j := values[j]`.
pub fn b_assignment(values: &[Rational]) -> Vec<(Var, Rational)> {
    values
        .iter()
        .enumerate()
        .map(|(i, v)| (Var::b(i), v.clone()))
        .collect()
}

/// Product of linear forms `(c1 x1 + c2 x2)^m`, all in `x`.
pub fn from_linear_factors(factors: &[((i64, i64), u32)]) -> BinaryForm {
    let mut acc = BinaryForm::constant(MPoly::one(), Pair::X);
    for &((c1, c2), m) in factors {
        let l = BinaryForm {
            order: 1,
            pair: Pair::X,
            coefs: vec![MPoly::int(c1), MPoly::int(c2)],
        };
        acc = acc.mul(&l.pow(m).unwrap()).unwrap();
    }
    acc
}
