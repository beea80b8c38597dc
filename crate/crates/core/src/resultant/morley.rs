//! The Morley form, the map `theta` and the matrix `eta` whose
//! determinant is the resultant.

use crate::error::{Error, Result};
use crate::forms::{bracket, generic_form, transvectant, BiForm, BinaryForm};
use crate::matrix::{sylvester_matrix, PolyMatrix};
use crate::poly::{to_text, CoefSymbol, MPoly, Monomial, Pair, Var};

/// The Morley form of the generic pair `(F, G)` of orders `(d, e)`:
/// a biform of orders `(e-2, d)` in `(x, y)`, bilinear in `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorleyForm {
    pub d: u32,
    pub e: u32,
    pub value: BiForm,
}

/// Replaces every monomial `s1^(n-k) s2^k` in the symbol pair by the
/// coefficient `c_k`, which is what `(1/n!) F(d/ds1, d/ds2)` does to the
/// `n`-th powers of a symbolic linear form.
pub fn apply_symbol(p: &MPoly, symbol: Pair, coef: CoefSymbol, n: u32) -> Result<MPoly> {
    let (s1, s2) = symbol.vars();
    let mut terms = Vec::with_capacity(p.num_terms());
    for (m, c) in p.terms() {
        let (i, k) = (m.exp(s1), m.exp(s2));
        if i + k != n {
            return Err(Error::Precondition(format!(
                "symbolic expression is not of degree {n} in {}",
                symbol.name()
            )));
        }
        let rest: Vec<(Var, u32)> = m.support().filter(|&(v, _)| v != s1 && v != s2).collect();
        let mono = Monomial::from_pairs(rest).mul(&Monomial::var(coef.var(k as usize)));
        terms.push((mono, c.clone()));
    }
    Ok(MPoly::from_terms(terms))
}

fn symbolic_linear(symbol: Pair, at: Pair) -> MPoly {
    let (s1, s2) = symbol.vars();
    let (v1, v2) = at.vars();
    MPoly::var(s1) * MPoly::var(v1) + MPoly::var(s2) * MPoly::var(v2)
}

fn check_regime(d: u32, e: u32) -> Result<()> {
    if e < 1 || d < 1 {
        return Err(Error::Range(format!("need d, e >= 1, got ({d}, {e})")));
    }
    if d + 1 < e {
        return Err(Error::OutOfRegime(format!(
            "d = {d} < e - 1 = {}: the determinantal formula changes shape",
            e - 1
        )));
    }
    Ok(())
}

/// `sum_{i=1}^{e-1} (fg) f_x^(i-1) g_x^(e-i-1) f_y^(d-i) g_y^i`, evaluated
/// with the symbol operators for the generic `F` and `G`.
pub fn morley_form(d: u32, e: u32) -> Result<MorleyForm> {
    if d < 1 || e < 2 {
        return Err(Error::Range(format!(
            "Morley form needs d >= 1, e >= 2, got ({d}, {e})"
        )));
    }
    let fg = bracket(Pair::F, Pair::G);
    let fx = symbolic_linear(Pair::F, Pair::X);
    let gx = symbolic_linear(Pair::G, Pair::X);
    let fy = symbolic_linear(Pair::F, Pair::Y);
    let gy = symbolic_linear(Pair::G, Pair::Y);
    let mut sum = MPoly::zero();
    for i in 1..e {
        if i > d {
            continue;
        }
        let t = &fg * &fx.pow(i - 1)? * gx.pow(e - i - 1)? * fy.pow(d - i)? * gy.pow(i)?;
        sum = sum + t;
    }
    let p = apply_symbol(&sum, Pair::F, CoefSymbol::A, d)?;
    let p = apply_symbol(&p, Pair::G, CoefSymbol::B, e)?;
    Ok(MorleyForm {
        d,
        e,
        value: BiForm::new(p, (Pair::X, Pair::Y), (e - 2, d))?,
    })
}

/// `theta(A) = (-1)^(e-1) [(M, A)_(e-2)]_(y=x)`.
pub fn theta_with(m: &MorleyForm, a: &BinaryForm) -> Result<BinaryForm> {
    let e = m.e;
    if a.order() != e - 2 || a.pair() != Pair::X {
        return Err(Error::Precondition(format!(
            "theta needs an order-{} form in x, got order {}",
            e - 2,
            a.order()
        )));
    }
    let t = transvectant(&m.value.as_first(), a, e - 2)?;
    let b = BiForm::new(t.to_poly(), (Pair::X, Pair::Y), (0, m.d))?;
    let out = b.diagonal();
    Ok(if e % 2 == 0 {
        out.scale(&-crate::Rational::one())
    } else {
        out
    })
}

pub fn theta(a: &BinaryForm, d: u32, e: u32) -> Result<BinaryForm> {
    theta_with(&morley_form(d, e)?, a)
}

/// `x1^(m-j) x2^j` as a form in `x`.
fn monomial_form(m: u32, j: u32) -> BinaryForm {
    crate::discriminant::monomial_form(m, j)
}

fn monomial_label(m: u32, j: u32) -> String {
    to_text(&(MPoly::var_pow(Var::X1, m - j) * MPoly::var_pow(Var::X2, j)))
}

/// Matrix of `theta + (. G) + (1 -> F)` on `S_(e-2) + S_(d-e) + S_0`,
/// for forms `f`, `g` that may be generic or specialised.
pub fn eta_matrix_of(f: &BinaryForm, g: &BinaryForm) -> Result<PolyMatrix> {
    let (d, e) = (f.order(), g.order());
    check_regime(d, e)?;
    let mut cols: Vec<Vec<MPoly>> = Vec::new();
    let mut labels = Vec::new();
    if e >= 2 {
        let m = morley_form(d, e)?;
        let m = specialise_morley(&m, f, g)?;
        for j in 0..=e - 2 {
            cols.push(theta_with(&m, &monomial_form(e - 2, j))?.coefs().to_vec());
            labels.push(format!("theta[{}]", monomial_label(e - 2, j)));
        }
    }
    if d >= e {
        for j in 0..=d - e {
            cols.push(monomial_form(d - e, j).mul(g)?.coefs().to_vec());
            labels.push(format!("G[{}]", monomial_label(d - e, j)));
        }
    }
    cols.push(f.coefs().to_vec());
    labels.push("F".into());
    let rows = (0..=d).map(|i| monomial_label(d, i)).collect();
    Ok(PolyMatrix::from_columns(cols, rows, labels)?)
}

/// Substitutes the coefficients of `f`, `g` into the generic Morley form
/// when they are not the generic ones.
fn specialise_morley(m: &MorleyForm, f: &BinaryForm, g: &BinaryForm) -> Result<MorleyForm> {
    let gf = generic_form(m.d, CoefSymbol::A, Pair::X)?;
    let gg = generic_form(m.e, CoefSymbol::B, Pair::X)?;
    if f == &gf && g == &gg {
        return Ok(m.clone());
    }
    let mut assign = Vec::new();
    for (i, c) in f.coefs().iter().enumerate() {
        let binom = crate::rational::binomial(m.d as i64, i as i64);
        assign.push((Var::a(i), c.scale(&binom.recip().unwrap())));
    }
    for (j, c) in g.coefs().iter().enumerate() {
        let binom = crate::rational::binomial(m.e as i64, j as i64);
        assign.push((Var::b(j), c.scale(&binom.recip().unwrap())));
    }
    let p = m.value.poly().substitute(&assign);
    Ok(MorleyForm {
        value: BiForm::new(p, m.value.pairs(), m.value.orders())?,
        ..m.clone()
    })
}

pub fn eta_matrix(d: u32, e: u32) -> Result<PolyMatrix> {
    check_regime(d, e)?;
    eta_matrix_of(
        &generic_form(d, CoefSymbol::A, Pair::X)?,
        &generic_form(e, CoefSymbol::B, Pair::X)?,
    )
}

pub fn resultant_det(d: u32, e: u32) -> Result<MPoly> {
    let r = eta_matrix(d, e)?.determinant()?;
    let a: Vec<Var> = (0..=d as usize).map(Var::a).collect();
    let b: Vec<Var> = (0..=e as usize).map(Var::b).collect();
    if r.homogeneous_degree_in(&a) != Some(e) || r.homogeneous_degree_in(&b) != Some(d) {
        return Err(Error::Consistency(format!(
            "det eta is not of bidegree ({e}, {d}) for (d, e) = ({d}, {e})"
        )));
    }
    Ok(r)
}

/// Sylvester resultant of generic forms of orders `d` and `e`.
pub fn sylvester_resultant(d: u32, e: u32) -> Result<MPoly> {
    if d < 1 || e < 1 {
        return Err(Error::Range(format!("need d, e >= 1, got ({d}, {e})")));
    }
    let f = generic_form(d, CoefSymbol::A, Pair::X)?;
    let g = generic_form(e, CoefSymbol::B, Pair::X)?;
    Ok(sylvester_matrix(f.coefs(), g.coefs()).determinant()?)
}
