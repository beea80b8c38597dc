//! The maps `alpha_n`, the covariants `A_n` and the stratification tests
//! built from them.

use serde::Serialize;

use crate::discriminant::{discriminant_det, discriminant_oracle_of, evectant};
use crate::error::{Error, Result};
use crate::forms::{generic_form, transvectant, BinaryForm};
use crate::matrix::PolyMatrix;
use crate::poly::{are_proportional, gcd_univariate, to_text, CoefSymbol, MPoly, Pair, Var};
use crate::rational::Rational;
use crate::special::sample_points;

use crate::discriminant::monomial_form;

fn check_range(n: u32, d: u32) -> Result<()> {
    if d < 2 || n < 1 || n > d - 1 {
        return Err(Error::Range(format!("need 1 <= n <= d-1, got d={d} n={n}")));
    }
    Ok(())
}

fn is_rational(f: &BinaryForm) -> bool {
    f.coefs().iter().all(MPoly::is_constant)
}

/// `alpha_n(F)`: `l (x) G -> (l, F)_1 G`, from `S_1 (x) S_(n-1)` to
/// `S_(d+n-2)`. Columns run over `x1 (x) x1^(n-1-j) x2^j`, then the same
/// with `x2`; rows over `x1^(d+n-2-i) x2^i`.
pub fn alpha_matrix_of(f: &BinaryForm, n: u32) -> Result<PolyMatrix> {
    let d = f.order();
    check_range(n, d)?;
    let f = f.with_pair(Pair::X)?;
    let rows = d + n - 1;
    let mut columns = Vec::with_capacity(2 * n as usize);
    let mut labels = Vec::with_capacity(2 * n as usize);
    for (l, name) in [(0u32, "x1"), (1, "x2")] {
        let lf = transvectant(&monomial_form(1, l), &f, 1)?;
        for j in 0..n {
            let col = lf.mul(&monomial_form(n - 1, j))?;
            debug_assert_eq!(col.coefs().len(), rows as usize);
            columns.push(col.coefs().to_vec());
            let g = MPoly::var_pow(Var::X1, n - 1 - j) * MPoly::var_pow(Var::X2, j);
            labels.push(format!("{name}*{}", to_text(&g)));
        }
    }
    let row_basis = (0..rows)
        .map(|i| to_text(&(MPoly::var_pow(Var::X1, rows - 1 - i) * MPoly::var_pow(Var::X2, i))))
        .collect();
    Ok(PolyMatrix::from_columns(columns, row_basis, labels)?)
}

pub fn alpha_matrix(n: u32, d: u32) -> Result<PolyMatrix> {
    alpha_matrix_of(&generic_form(d, CoefSymbol::A, Pair::X)?, n)
}

/// Rank of `alpha_n(F)` for a form with rational coefficients.
pub fn alpha_rank(f: &BinaryForm, n: u32) -> Result<usize> {
    if !is_rational(f) {
        return Err(Error::Precondition(
            "alpha_rank needs rational coefficients".into(),
        ));
    }
    Ok(alpha_matrix_of(f, n)?.rank()?)
}

/// The `2n x 2n` matrix of transvectants whose determinant is `A_n(F)`.
pub fn a_matrix_of(f: &BinaryForm, n: u32) -> Result<PolyMatrix> {
    let d = f.order();
    check_range(n, d)?;
    let f = f.with_pair(Pair::X)?;
    let fx1 = f.partial(1, 0);
    let fx2 = f.partial(0, 1);
    let size = 2 * n;
    let mut rows = Vec::with_capacity(size as usize);
    for p in 0..size {
        let right = if p < n {
            monomial_form(n - 1, p).mul(&fx1)?
        } else {
            monomial_form(n - 1, p - n).mul(&fx2)?
        };
        let mut row = Vec::with_capacity(size as usize);
        for q in 0..size {
            row.push(transvectant(&monomial_form(size - 1, q), &right, size - 1)?.to_poly());
        }
        rows.push(row);
    }
    Ok(PolyMatrix::from_rows(rows)?)
}

/// `A_n(F)`, a form of order `2n(d-n-1)` whose coefficients have degree
/// `2n` in those of `F`.
pub fn covariant_a_of(f: &BinaryForm, n: u32) -> Result<BinaryForm> {
    let d = f.order();
    let det = a_matrix_of(f, n)?.determinant()?;
    let order = 2 * n * (d - n - 1);
    BinaryForm::from_poly(&det, Pair::X, order)
}

/// Generic `A_n` for order `d`, with its degree-order checked.
pub fn covariant_a(n: u32, d: u32) -> Result<BinaryForm> {
    let a = covariant_a_of(&generic_form(d, CoefSymbol::A, Pair::X)?, n)?;
    if a.is_zero() || a.degree_in_a(d as usize) != Some(2 * n) {
        return Err(Error::Consistency(format!(
            "A_{n} at d={d} does not have degree {} in a",
            2 * n
        )));
    }
    Ok(a)
}

/// Degree-order of `A_n` read off along a seeded line `a = t c` in
/// coefficient space, with `t` carried by the otherwise unused variable
/// `z1`. `A_n` is homogeneous in `a`, so the `t`-degree is its degree
/// unless `A_n(c) = 0`; points where it vanishes are skipped.
pub fn degree_order_on_line(n: u32, d: u32, seed: u64) -> Result<(u32, u32)> {
    check_range(n, d)?;
    let t = MPoly::var(Var::Z1);
    for c in sample_points(seed, 8, d as usize + 1, 9) {
        let assign: Vec<(Var, MPoly)> = c
            .iter()
            .enumerate()
            .map(|(i, ci)| (Var::a(i), t.scale(ci)))
            .collect();
        let f = generic_form(d, CoefSymbol::A, Pair::X)?.substitute(&assign);
        let det = a_matrix_of(&f, n)?.determinant()?;
        if det.is_zero() {
            continue;
        }
        let deg = det
            .homogeneous_degree_in(&[Var::Z1])
            .ok_or_else(|| Error::Consistency(format!("A_{n} at d={d} is not homogeneous in a")))?;
        let order = det
            .homogeneous_degree_in(&[Var::X1, Var::X2])
            .ok_or_else(|| Error::Consistency(format!("A_{n} at d={d} is not a form")))?;
        return Ok((deg, order));
    }
    Err(Error::Consistency(format!(
        "A_{n} at d={d} vanished at every sample"
    )))
}

/// `g_F = gcd(F_x1, F_x2)`, monic. Its order is `d` minus the number of
/// distinct roots of `F`.
pub fn g_f(f: &BinaryForm) -> Result<BinaryForm> {
    if !is_rational(f) || f.is_zero() {
        return Err(Error::Precondition(
            "g_F needs a nonzero rational form".into(),
        ));
    }
    let f = f.with_pair(Pair::X)?;
    let g = gcd_univariate(
        &f.partial(1, 0).to_poly(),
        &f.partial(0, 1).to_poly(),
        Pair::X,
    )?;
    if g.is_zero() {
        // only for order <= 1
        return Ok(BinaryForm::constant(MPoly::one(), Pair::X));
    }
    BinaryForm::from_homogeneous(&g, Pair::X)
}

pub fn distinct_roots(f: &BinaryForm) -> Result<u32> {
    Ok(f.order() - g_f(f)?.order())
}

/// `A_(n-1)(F) ~ g_F^(2n-2)` for `F` with exactly `n` distinct roots.
pub fn lemma_gf_check(f: &BinaryForm, n: u32) -> Result<bool> {
    let g = g_f(f)?;
    let roots = f.order() - g.order();
    if roots != n {
        return Err(Error::Precondition(format!(
            "form has {roots} distinct roots, not {n}"
        )));
    }
    if n < 2 {
        return Err(Error::Range("the lemma needs n >= 2".into()));
    }
    let a = covariant_a_of(f, n - 1)?;
    let gp = g.pow(2 * n - 2)?;
    Ok(!a.is_zero() && are_proportional(&a.to_poly(), &gp.to_poly()).is_some())
}

/// `A_1 ~ H`.
pub fn a1_hessian_check(d: u32) -> Result<Option<Rational>> {
    let f = generic_form(d, CoefSymbol::A, Pair::X)?;
    let h = transvectant(&f, &f, 2)?;
    Ok(are_proportional(
        &covariant_a(1, d)?.to_poly(),
        &h.to_poly(),
    ))
}

/// `A_(d-1) ~ Delta`, with `Delta` from the determinant of `h`.
pub fn a_top_discriminant_check(d: u32) -> Result<Option<Rational>> {
    let a = covariant_a(d - 1, d)?;
    Ok(are_proportional(&a.to_poly(), &discriminant_det(d)?))
}

/// `(A_(d-2), F)_(d-2) ~ E_Delta`.
pub fn evectant_via_a_check(d: u32) -> Result<Option<Rational>> {
    if d < 3 {
        return Err(Error::Range("needs d >= 3".into()));
    }
    let f = generic_form(d, CoefSymbol::A, Pair::X)?;
    let a = covariant_a(d - 2, d)?;
    let lhs = transvectant(&a, &f, d - 2)?;
    let e = evectant(&discriminant_det(d)?, d)?;
    Ok(are_proportional(&lhs.to_poly(), &e.to_poly()))
}

/// Position of a form relative to the discriminant hypersurface and its
/// two codimension-two components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stratum {
    /// Distinct roots.
    Smooth,
    /// Exactly one double root, the rest simple.
    Nodal,
    /// A triple root, the rest simple.
    Tau,
    /// Two double roots, the rest simple.
    Delta,
    /// At most `d-3` distinct roots.
    Deeper,
}

impl Stratum {
    pub fn as_str(self) -> &'static str {
        match self {
            Stratum::Smooth => "smooth",
            Stratum::Nodal => "nodal",
            Stratum::Tau => "tau",
            Stratum::Delta => "delta",
            Stratum::Deeper => "deeper",
        }
    }
}

/// Classifies a rational form of order `d >= 4` using only `Delta`,
/// `A_(d-2)` and the Hessian and cubicovariant of `G = A_(d-3)(F)`.
///
/// `T` vanishes on perfect powers, so `H(G) = 0` is tested first: on the
/// tau stratum `G` is a power of a single linear form and both vanish.
pub fn tau_delta_classify(f: &BinaryForm) -> Result<Stratum> {
    let d = f.order();
    if d < 4 {
        return Err(Error::Range(format!("classifier needs d >= 4, got {d}")));
    }
    if !is_rational(f) || f.is_zero() {
        return Err(Error::Precondition(
            "classifier needs a nonzero rational form".into(),
        ));
    }
    if !covariant_a_of(f, d - 2)?.is_zero() {
        let delta = discriminant_oracle_of(f)?;
        return Ok(if delta.is_zero() {
            Stratum::Nodal
        } else {
            Stratum::Smooth
        });
    }
    let g = covariant_a_of(f, d - 3)?;
    if g.is_zero() {
        return Ok(Stratum::Deeper);
    }
    let h = transvectant(&g, &g, 2)?;
    if h.is_zero() {
        return Ok(Stratum::Tau);
    }
    let t = transvectant(&g, &h, 1)?;
    Ok(if t.is_zero() {
        Stratum::Delta
    } else {
        Stratum::Deeper
    })
}
