//! The Bezoutiant, the map `h = beta + gamma + 1` and the determinantal
//! discriminant.

use crate::error::{Error, Result};
use crate::forms::{bracket, generic_form, transvect_partial_x, transvectant, BiForm, BinaryForm};
use crate::matrix::{sylvester_matrix, PolyMatrix};
use crate::poly::{to_text, CoefSymbol, MPoly, Pair, Var};
use crate::rational::Rational;

/// `(F_x1 G_y2 - G_y1 F_x2) / (x1 y2 - x2 y1)` with `G = F(y)`.
pub fn bezoutiant(f: &BinaryForm) -> Result<BiForm> {
    let d = f.order();
    if d < 2 {
        return Err(Error::Range(format!(
            "bezoutiant needs order >= 2, got {d}"
        )));
    }
    let fx = f.with_pair(Pair::X)?;
    let gy = f.with_pair(Pair::Y)?;
    let num = fx.partial(1, 0).to_poly() * gy.partial(0, 1).to_poly()
        - gy.partial(1, 0).to_poly() * fx.partial(0, 1).to_poly();
    let q = num
        .div_exact(&bracket(Pair::X, Pair::Y))
        .map_err(|e| Error::Consistency(format!("bezoutiant division: {e}")))?;
    BiForm::new(q, (Pair::X, Pair::Y), (d - 2, d - 2))
}

/// `x1^(m-j) x2^j` as a form in `x`.
pub fn monomial_form(m: u32, j: u32) -> BinaryForm {
    let mut coefs = vec![MPoly::zero(); m as usize + 1];
    coefs[j as usize] = MPoly::one();
    BinaryForm::new(m, Pair::X, coefs).expect("constant coefficients")
}

fn monomial_label(m: u32, j: u32) -> String {
    to_text(&(MPoly::var_pow(Var::X1, m - j) * MPoly::var_pow(Var::X2, j)))
}

/// Columns of `beta + gamma` for the form `f`, with their labels.
fn beta_gamma_columns(f: &BinaryForm) -> Result<(Vec<Vec<MPoly>>, Vec<String>)> {
    let d = f.order();
    let f = f.with_pair(Pair::X)?;
    let mut cols = Vec::new();
    let mut labels = Vec::new();
    if d >= 4 {
        let b = bezoutiant(&f)?;
        for j in 0..=d - 4 {
            let t = transvect_partial_x(&monomial_form(d - 4, j), &b, d - 4)?;
            cols.push(t.diagonal().coefs().to_vec());
            labels.push(format!("beta[{}]", monomial_label(d - 4, j)));
        }
    }
    for j in 0..=2 {
        let t = transvectant(&monomial_form(2, j), &f, 1)?;
        cols.push(t.coefs().to_vec());
        labels.push(format!("gamma[{}]", monomial_label(2, j)));
    }
    Ok((cols, labels))
}

fn row_labels(d: u32) -> Vec<String> {
    (0..=d).map(|i| monomial_label(d, i)).collect()
}

/// The `(d+1) x d` matrix of `beta + gamma` (just `gamma` when `d = 3`).
pub fn beta_gamma_matrix_of(f: &BinaryForm) -> Result<PolyMatrix> {
    let d = f.order();
    if d < 3 {
        return Err(Error::Range(format!("needs order >= 3, got {d}")));
    }
    let (cols, labels) = beta_gamma_columns(f)?;
    Ok(PolyMatrix::from_columns(cols, row_labels(d), labels)?)
}

/// Matrix of `h` on the form `f`, which may be generic or specialised.
pub fn h_matrix_of(f: &BinaryForm) -> Result<PolyMatrix> {
    let d = f.order();
    if d < 3 {
        return Err(Error::Range(format!("h_matrix needs order >= 3, got {d}")));
    }
    let (mut cols, mut labels) = beta_gamma_columns(f)?;
    cols.push(f.coefs().to_vec());
    labels.push("one".to_string());
    Ok(PolyMatrix::from_columns(cols, row_labels(d), labels)?)
}

pub fn h_matrix(d: u32) -> Result<PolyMatrix> {
    h_matrix_of(&generic_form(d, CoefSymbol::A, Pair::X)?)
}

/// `det h` on the form `f`; for order 2 the closed form `(F,F)_2`.
pub fn discriminant_of(f: &BinaryForm) -> Result<MPoly> {
    match f.order() {
        0 | 1 => Err(Error::Range("discriminant needs order >= 2".into())),
        2 => Ok(transvectant(f, f, 2)?.coef(0).clone()),
        _ => Ok(h_matrix_of(f)?.determinant()?),
    }
}

pub fn discriminant_det(d: u32) -> Result<MPoly> {
    let delta = discriminant_of(&generic_form(d, CoefSymbol::A, Pair::X)?)?;
    let a: Vec<Var> = (0..=d as usize).map(Var::a).collect();
    if delta.homogeneous_degree_in(&a) != Some(2 * (d - 1)) {
        return Err(Error::Consistency(format!(
            "discriminant of order {d} is not homogeneous of degree {}",
            2 * (d - 1)
        )));
    }
    Ok(delta)
}

/// Resultant of the two partials of `f`.
pub fn discriminant_oracle_of(f: &BinaryForm) -> Result<MPoly> {
    if f.order() < 2 {
        return Err(Error::Range("oracle needs order >= 2".into()));
    }
    let p = f.partial(1, 0);
    let q = f.partial(0, 1);
    Ok(sylvester_matrix(p.coefs(), q.coefs()).determinant()?)
}

pub fn discriminant_oracle(d: u32) -> Result<MPoly> {
    discriminant_oracle_of(&generic_form(d, CoefSymbol::A, Pair::X)?)
}

fn a_vars(d: u32) -> Vec<Var> {
    (0..=d as usize).map(Var::a).collect()
}

/// `((-1)^d / m) sum dI/da_i x2^(d-i) (-x1)^i`, normalised so that
/// `(E_I, F)_d = I`.
pub fn evectant(invariant: &MPoly, d: u32) -> Result<BinaryForm> {
    let m = invariant
        .homogeneous_degree_in(&a_vars(d))
        .ok_or_else(|| Error::Precondition("invariant must be homogeneous in a".into()))?;
    if m == 0 {
        return Err(Error::Precondition("evectant of a constant".into()));
    }
    let partials: Vec<MPoly> = (0..=d as usize)
        .map(|i| invariant.derivative(Var::a(i), 1))
        .collect();
    Ok(evectant_from_partials(&partials, m))
}

/// Assembles the evectant from the partials `dI/da_i` of a degree-`m`
/// invariant.
pub fn evectant_from_partials(partials: &[MPoly], m: u32) -> BinaryForm {
    let d = partials.len() - 1;
    let mut scale = Rational::new(1, m as i64);
    if d % 2 == 1 {
        scale = -scale;
    }
    let mut coefs = vec![MPoly::zero(); d + 1];
    for (i, p) in partials.iter().enumerate() {
        // x2^(d-i) (-x1)^i sits at index d-i
        let s = if i % 2 == 1 {
            -scale.clone()
        } else {
            scale.clone()
        };
        coefs[d - i] = p.scale(&s);
    }
    BinaryForm::new(d as u32, Pair::X, coefs).expect("partials are free of x")
}

/// The `d+1` partials of `Delta`.
pub fn jacobian_generators(d: u32) -> Result<Vec<MPoly>> {
    let delta = discriminant_det(d)?;
    Ok(jacobian_of(&delta, d))
}

pub fn jacobian_of(invariant: &MPoly, d: u32) -> Vec<MPoly> {
    (0..=d as usize)
        .map(|i| invariant.derivative(Var::a(i), 1))
        .collect()
}

fn rational_entries(m: &PolyMatrix) -> Option<Vec<Vec<Rational>>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| m.get(i, j).constant_value())
                .collect()
        })
        .collect()
}

/// `E_Delta` at a point, from Jacobi's formula
/// `dDelta/da_i = det(h) tr(h^-1 dh/da_i)` on the generic matrix `h`.
/// Fails when `h` is singular at the point.
pub fn evectant_of_delta_at(h: &PolyMatrix, values: &[Rational]) -> Result<BinaryForm> {
    let d = h.rows() - 1;
    let assign = crate::forms::a_assignment(values);
    let at = h.map(|e| e.evaluate(&assign));
    let numeric = rational_entries(&at)
        .ok_or_else(|| Error::Precondition("point does not fix every entry".into()))?;
    let det = at
        .determinant()?
        .constant_value()
        .expect("constant matrix has a constant determinant");
    let inv = crate::special::invert(&numeric)
        .ok_or_else(|| Error::Precondition("h is singular at this point".into()))?;
    let mut partials = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let dh = h.map(|e| e.derivative(Var::a(i), 1).evaluate(&assign));
        let mut tr = Rational::zero();
        for r in 0..=d {
            for c in 0..=d {
                let e = dh.get(r, c);
                if !e.is_zero() {
                    tr += &(&inv[c][r] * &e.constant_value().unwrap());
                }
            }
        }
        partials.push(MPoly::constant(&det * &tr));
    }
    Ok(evectant_from_partials(&partials, 2 * (d as u32 - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{a_assignment, from_linear_factors, generic_values};
    use crate::poly::{are_proportional, parse_poly};

    fn p(s: &str) -> MPoly {
        parse_poly(s).unwrap()
    }

    fn form(s: &str) -> BinaryForm {
        BinaryForm::from_homogeneous(&p(s), Pair::X).unwrap()
    }

    #[test]
    fn bezoutiant_of_sum_of_squares() {
        let b = bezoutiant(&form("x1^2 + x2^2")).unwrap();
        assert_eq!(b.poly(), &MPoly::int(4));
        assert_eq!(b.orders(), (0, 0));
    }

    #[test]
    fn bezoutiant_of_fermat_forms() {
        for d in 2..=6u32 {
            let f = form(&format!("x1^{d} + x2^{d}"));
            let mut expect = MPoly::zero();
            for i in 0..=d - 2 {
                expect = expect + p(&format!("x1^{}*y2^{}*x2^{i}*y1^{i}", d - 2 - i, d - 2 - i));
            }
            let expect = expect.scale(&Rational::from((d * d) as i64));
            assert_eq!(bezoutiant(&f).unwrap().poly(), &expect, "d = {d}");
        }
    }

    #[test]
    fn double_root_divides_bezoutiant() {
        let b = bezoutiant(&form("x1^3 + x1^2*x2")).unwrap();
        assert!(b.poly().div_exact(&p("x1*y1")).is_ok());
    }

    #[test]
    fn h_matrix_shapes_and_degrees() {
        let h3 = h_matrix(3).unwrap();
        assert_eq!((h3.rows(), h3.cols()), (4, 4));
        assert_eq!(h3.col_basis()[0], "gamma[x1^2]");
        let h5 = h_matrix(5).unwrap();
        assert_eq!(h5.col_basis()[0], "beta[x1]");
        assert_eq!(h5.row_basis()[1], "x1^4*x2");
        let a: Vec<Var> = (0..=5).map(Var::a).collect();
        for i in 0..6 {
            for (j, want) in [(0, 2), (2, 1), (5, 1)] {
                let e = h5.get(i, j);
                if !e.is_zero() {
                    assert_eq!(e.homogeneous_degree_in(&a), Some(want));
                }
            }
        }
    }

    #[test]
    fn fermat_specialisation_has_full_rank() {
        for d in 3..=7u32 {
            let h = h_matrix_of(&form(&format!("x1^{d} + x2^{d}"))).unwrap();
            assert_eq!(h.rank().unwrap(), d as usize + 1);
        }
    }

    #[test]
    fn determinant_matches_oracle() {
        for d in 2..=5 {
            let det = discriminant_det(d).unwrap();
            let oracle = discriminant_oracle(d).unwrap();
            assert!(are_proportional(&det, &oracle).is_some(), "d = {d}");
        }
        assert!(are_proportional(&discriminant_oracle(2).unwrap(), &p("a0*a2 - a1^2")).is_some());
        assert_eq!(discriminant_det(2).unwrap(), p("2*a0*a2 - 2*a1^2"));
    }

    #[test]
    fn degenerate_specialisations() {
        let f = from_linear_factors(&[((1, 0), 2), ((0, 1), 1), ((1, 1), 1)]);
        assert!(discriminant_of(&f).unwrap().is_zero());
        let g = from_linear_factors(&[((1, 1), 2), ((0, 1), 1)]);
        assert!(discriminant_oracle_of(&g).unwrap().is_zero());
        assert!(!discriminant_oracle_of(&form("x1^3 + x2^3"))
            .unwrap()
            .is_zero());
        // specialising the symbolic determinant agrees with the direct route
        let sym = discriminant_det(4).unwrap();
        let vals = generic_values(&f).unwrap();
        assert!(sym.evaluate(&a_assignment(&vals)).is_zero());
    }

    #[test]
    fn evectant_small_orders() {
        let f2 = generic_form(2, CoefSymbol::A, Pair::X).unwrap();
        let e2 = evectant(&p("a0*a2 - a1^2"), 2).unwrap();
        assert!(are_proportional(&e2.to_poly(), &f2.to_poly()).is_some());

        let f3 = generic_form(3, CoefSymbol::A, Pair::X).unwrap();
        let h = transvectant(&f3, &f3, 2).unwrap();
        let t = transvectant(&f3, &h, 1).unwrap();
        let e3 = evectant(&discriminant_det(3).unwrap(), 3).unwrap();
        assert!(are_proportional(&e3.to_poly(), &t.to_poly()).is_some());

        let f4 = generic_form(4, CoefSymbol::A, Pair::X).unwrap();
        let i = transvectant(&f4, &f4, 4).unwrap().coef(0).clone();
        let e4 = evectant(&i, 4).unwrap();
        assert!(are_proportional(&e4.to_poly(), &f4.to_poly()).is_some());
        assert!(evectant(&MPoly::one(), 4).is_err());
    }

    #[test]
    fn evectant_pairs_back_to_invariant() {
        for d in 3..=4 {
            let f = generic_form(d, CoefSymbol::A, Pair::X).unwrap();
            let delta = discriminant_oracle(d).unwrap();
            let e = evectant(&delta, d).unwrap();
            assert_eq!(transvectant(&e, &f, d).unwrap().coef(0), &delta);
        }
    }

    #[test]
    fn jacobian_degrees_and_vanishing() {
        let j2 = jacobian_generators(2).unwrap();
        assert_eq!(j2, vec![p("2*a2"), p("-4*a1"), p("2*a0")]);
        let a: Vec<Var> = (0..=4).map(Var::a).collect();
        let j4 = jacobian_generators(4).unwrap();
        let vals = generic_values(&form("x1^3*x2")).unwrap();
        for g in &j4 {
            assert_eq!(g.homogeneous_degree_in(&a), Some(5));
            assert!(g.evaluate(&a_assignment(&vals)).is_zero());
        }
    }

    #[test]
    fn jacobi_evectant_matches_symbolic() {
        let h = h_matrix(4).unwrap();
        let e = evectant(&discriminant_det(4).unwrap(), 4).unwrap();
        let vals: Vec<Rational> = [2, -1, 3, 1, -2]
            .iter()
            .map(|&v| Rational::from(v))
            .collect();
        let at = evectant_of_delta_at(&h, &vals).unwrap();
        assert_eq!(at, e.evaluate(&a_assignment(&vals)));
    }
}
