//! Gcd of binary forms with rational coefficients.

use crate::error::PolyError;
use crate::poly::mpoly::{MPoly, Monomial};
use crate::poly::universe::Pair;
use crate::rational::Rational;

/// Coefficient vector `c[i]` of `v1^(m-i) v2^i` for a homogeneous form with
/// rational coefficients in `pair`. The zero form yields `None`.
pub(crate) fn rational_coefficients(
    p: &MPoly,
    pair: Pair,
) -> Result<Option<Vec<Rational>>, PolyError> {
    if p.is_zero() {
        return Ok(None);
    }
    let (v1, v2) = pair.vars();
    let m = p
        .homogeneous_degree_in(&[v1, v2])
        .ok_or_else(|| PolyError::Unsupported("form is not homogeneous".into()))?;
    let mut c = vec![Rational::zero(); m as usize + 1];
    for (mono, coef) in p.terms() {
        if mono.total_degree() != mono.exp(v1) + mono.exp(v2) {
            return Err(PolyError::Unsupported(
                "gcd needs rational coefficients; found symbolic ones".into(),
            ));
        }
        c[mono.exp(v2) as usize] = coef.clone();
    }
    Ok(Some(c))
}

/// Monic gcd of two binary forms in `pair` with rational coefficients.
///
/// Common powers of `v1` and `v2` are split off first; what remains is
/// coprime to both variables, so its dehomogenisation at `v2 = 1` keeps full
/// degree and the Euclidean gcd can be rehomogenised without losing roots.
/// The result is normalised so that its first nonzero coefficient in
/// descending powers of `v1` is 1. `gcd(0, 0)` is 0.
pub fn gcd_univariate(p: &MPoly, q: &MPoly, pair: Pair) -> Result<MPoly, PolyError> {
    let cp = rational_coefficients(p, pair)?;
    let cq = rational_coefficients(q, pair)?;
    let (cp, cq) = match (cp, cq) {
        (None, None) => return Ok(MPoly::zero()),
        (Some(c), None) | (None, Some(c)) => return Ok(monic_form(&c, pair)),
        (Some(a), Some(b)) => (a, b),
    };
    let (ap, bp, up) = strip_monomial(&cp);
    let (aq, bq, uq) = strip_monomial(&cq);
    // up, uq: ascending-power coefficients in t = v1/v2, both with nonzero
    // constant and leading terms
    let g = euclid(up, uq);
    let a = ap.min(aq);
    let b = bp.min(bq);
    let deg = g.len() - 1;
    let (v1, v2) = pair.vars();
    let lead = g[deg].clone();
    let terms = g.iter().enumerate().map(|(k, c)| {
        // t^k -> v1^k v2^(deg-k)
        let mono = Monomial::from_pairs([(v1, k as u32 + a), (v2, (deg - k) as u32 + b)]);
        (mono, c / &lead)
    });
    Ok(MPoly::from_terms(terms))
}

fn monic_form(c: &[Rational], pair: Pair) -> MPoly {
    let (v1, v2) = pair.vars();
    let m = c.len() - 1;
    let lead = c.iter().find(|x| !x.is_zero()).unwrap().clone();
    MPoly::from_terms(c.iter().enumerate().map(|(i, x)| {
        (
            Monomial::from_pairs([(v1, (m - i) as u32), (v2, i as u32)]),
            x / &lead,
        )
    }))
}

/// Splits `v1^a v2^b` off a coefficient vector and returns the remaining
/// part as ascending coefficients in `t = v1/v2`.
fn strip_monomial(c: &[Rational]) -> (u32, u32, Vec<Rational>) {
    let m = c.len() - 1;
    let first = c.iter().position(|x| !x.is_zero()).unwrap();
    let last = c.iter().rposition(|x| !x.is_zero()).unwrap();
    let b = first as u32;
    let a = (m - last) as u32;
    // c[i] multiplies v1^(m-i) v2^i = t^(m-i) after v2 := 1
    let mut asc: Vec<Rational> = c[first..=last].to_vec();
    asc.reverse();
    (a, b, asc)
}

fn trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
}

fn is_zero_poly(p: &[Rational]) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn rem(mut a: Vec<Rational>, b: &[Rational]) -> Vec<Rational> {
    let db = b.len() - 1;
    let lb = &b[db];
    while a.len() > db && !is_zero_poly(&a) {
        let da = a.len() - 1;
        let f = &a[da] / lb;
        for (k, bc) in b.iter().enumerate() {
            let idx = da - db + k;
            a[idx] = &a[idx] - &(&f * bc);
        }
        a.pop();
        trim(&mut a);
    }
    if a.is_empty() {
        a.push(Rational::zero());
    }
    a
}

fn euclid(mut a: Vec<Rational>, mut b: Vec<Rational>) -> Vec<Rational> {
    trim(&mut a);
    trim(&mut b);
    while !is_zero_poly(&b) {
        let r = rem(a, &b);
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_poly;

    fn p(s: &str) -> MPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn monomial_gcd() {
        let g = gcd_univariate(&p("x1^2*x2"), &p("x1*x2^2"), Pair::X).unwrap();
        assert_eq!(g, p("x1*x2"));
    }

    #[test]
    fn coprime() {
        let g = gcd_univariate(&p("x1^2 + x2^2"), &p("x1^2 - x2^2"), Pair::X).unwrap();
        assert_eq!(g, MPoly::one());
    }

    #[test]
    fn partials_of_repeated_root_form() {
        let f = p("x1^3*x2^2");
        let g = gcd_univariate(
            &f.derivative(crate::Var::X1, 1),
            &f.derivative(crate::Var::X2, 1),
            Pair::X,
        )
        .unwrap();
        assert_eq!(g, p("x1^2*x2"));
    }

    #[test]
    fn shared_linear_factor() {
        // (x1 + 2 x2)(x1 - x2) and (x1 + 2 x2)(3 x1 + x2)
        let a = p("x1^2 + x1*x2 - 2*x2^2");
        let b = p("3*x1^2 + 7*x1*x2 + 2*x2^2");
        let g = gcd_univariate(&a, &b, Pair::X).unwrap();
        assert_eq!(g, p("x1 + 2*x2"));
    }

    #[test]
    fn symbolic_rejected() {
        let err = gcd_univariate(&p("a0*x1^2"), &p("x1*x2"), Pair::X).unwrap_err();
        assert!(matches!(err, PolyError::Unsupported(_)));
    }
}
