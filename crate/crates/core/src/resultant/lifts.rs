//! Cech lifts and the Morley identity.

use crate::error::{Error, Result};
use crate::forms::{generic_form, BinaryForm};
use crate::poly::{CoefSymbol, MPoly, Pair, Var};
use crate::rational::{binomial, factorial};

use super::morley::{morley_form, theta_with};

/// Which of the two forms a lift belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    F,
    G,
}

/// A rational form `numerator / x2^pole`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CechLift {
    pub numerator: MPoly,
    pub pole: u32,
}

/// `sum_{q=e-r-1}^{e-1} C(e-1,q) x1^(q-e+r+1) x2^(e-q-1) d^(e-1)H/dx1^q dx2^(e-q-1)`
fn lift_sum(h: &BinaryForm, e: u32, r: u32) -> MPoly {
    let mut acc = MPoly::zero();
    for q in e - r - 1..=e - 1 {
        let der = h.partial(q, e - q - 1).to_poly();
        let mono = MPoly::var_pow(Var::X1, q + r + 1 - e) * MPoly::var_pow(Var::X2, e - q - 1);
        acc = acc + (der * mono).scale(&binomial(e as i64 - 1, q as i64));
    }
    acc
}

/// The lift of `F` (prefactor `(d-e+1)!/d!`) or `G` (prefactor `1/e!`),
/// each with sign `(-1)^(e-2-r)` and a pole of order `r+1` in `x2`.
pub fn cech_lift(d: u32, e: u32, r: u32, which: Which) -> Result<CechLift> {
    if e < 2 || d + 1 < e {
        return Err(Error::OutOfRegime(format!(
            "lifts need d >= e-1, e >= 2, got ({d}, {e})"
        )));
    }
    if r > e - 2 {
        return Err(Error::Range(format!("r = {r} exceeds e - 2 = {}", e - 2)));
    }
    let (h, pre) = match which {
        Which::F => (
            generic_form(d, CoefSymbol::A, Pair::X)?,
            factorial(d - e + 1) / factorial(d),
        ),
        Which::G => (
            generic_form(e, CoefSymbol::B, Pair::X)?,
            factorial(e).recip().unwrap(),
        ),
    };
    let mut scale = pre / binomial(e as i64 - 2, r as i64);
    if (e - 2 - r) % 2 == 1 {
        scale = -scale;
    }
    Ok(CechLift {
        numerator: lift_sum(&h, e, r).scale(&scale),
        pole: r + 1,
    })
}

/// `F G~_r - G F~_r` with the pole cleared.
pub fn lift_combination(d: u32, e: u32, r: u32) -> Result<MPoly> {
    let f = generic_form(d, CoefSymbol::A, Pair::X)?.to_poly();
    let g = generic_form(e, CoefSymbol::B, Pair::X)?.to_poly();
    let lf = cech_lift(d, e, r, Which::F)?;
    let lg = cech_lift(d, e, r, Which::G)?;
    let num = f * lg.numerator - g * lf.numerator;
    num.div_exact(&MPoly::var_pow(Var::X2, r + 1))
        .map_err(|_| Error::Consistency(format!("pole of order {} survives at r = {r}", r + 1)))
}

/// Checks `F G~_r - G F~_r = theta(x1^r x2^(e-2-r))` for every `r`.
pub fn morley_identity_check(d: u32, e: u32) -> Result<bool> {
    let m = morley_form(d, e)?;
    for r in 0..=e - 2 {
        let lhs = lift_combination(d, e, r)?;
        let mut coefs = vec![MPoly::zero(); e as usize - 1];
        // x1^r x2^(e-2-r) sits at index e-2-r
        coefs[(e - 2 - r) as usize] = MPoly::one();
        let a = BinaryForm::new(e - 2, Pair::X, coefs)?;
        if theta_with(&m, &a)?.to_poly() != lhs {
            return Ok(false);
        }
    }
    Ok(true)
}
