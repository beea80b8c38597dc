//! Differential identities satisfied by the discriminant and its evectant.

use crate::error::{Error, Result};
use crate::forms::{a_assignment, generic_form, transvectant, BinaryForm};
use crate::poly::{are_proportional, CoefSymbol, MPoly, Pair, Var};
use crate::rational::{binomial, factorial, Rational};
use crate::special::{sample_points, DEFAULT_SEED};

use super::bezout::{
    beta_gamma_matrix_of, discriminant_det, discriminant_of, discriminant_oracle_of, evectant,
    evectant_of_delta_at, h_matrix, h_matrix_of,
};

/// The three `sl2` operators applied to `I`.
pub fn sl2_images(invariant: &MPoly, d: u32) -> [MPoly; 3] {
    let d = d as usize;
    let a = |i: usize| MPoly::var(Var::a(i));
    let da = |i: usize| invariant.derivative(Var::a(i), 1);
    let mut raise = MPoly::zero();
    let mut lower = MPoly::zero();
    let mut weight = MPoly::zero();
    for i in 0..=d {
        let di = da(i);
        if di.is_zero() {
            continue;
        }
        if i < d {
            raise = raise + (a(i + 1) * &di).scale(&Rational::from((d - i) as i64));
        }
        if i > 0 {
            lower = lower + (a(i - 1) * &di).scale(&Rational::from(i as i64));
        }
        weight = weight + (a(i) * &di).scale(&Rational::from(d as i64 - 2 * i as i64));
    }
    [raise, lower, weight]
}

pub fn sl2_annihilation_check(invariant: &MPoly, d: u32) -> bool {
    sl2_images(invariant, d).iter().all(MPoly::is_zero)
}

/// `(F, E_I)_(d-1) = 0` for the given invariant.
pub fn apolarity_check_for(invariant: &MPoly, d: u32) -> Result<bool> {
    let f = generic_form(d, CoefSymbol::A, Pair::X)?;
    let e = evectant(invariant, d)?;
    Ok(transvectant(&f, &e, d - 1)?.is_zero())
}

pub fn apolarity_identity_check(d: u32) -> Result<bool> {
    if d < 3 {
        return Err(Error::Range(format!(
            "apolarity check needs d >= 3, got {d}"
        )));
    }
    apolarity_check_for(&discriminant_det(d)?, d)
}

/// `xi_r = (2d-4r+1)! / ((2r-1)! (d-2r-2)! (d-2r)! (2d-2r)!)`.
pub fn xi_coefficient(d: u32, r: u32) -> Result<Rational> {
    if r < 1 || d < 2 || r > (d - 2) / 2 {
        return Err(Error::Range(format!(
            "xi needs 1 <= r <= (d-2)/2, got d={d} r={r}"
        )));
    }
    let num = factorial(2 * d - 4 * r + 1);
    let den = factorial(2 * r - 1)
        * factorial(d - 2 * r - 2)
        * factorial(d - 2 * r)
        * factorial(2 * d - 2 * r);
    Ok(num / den)
}

/// `sum_r xi_r (E, (F,F)_(2r))_(d-2r+2)` for a given order-`d` form `E`.
pub fn diffeq_deg2_sum(e: &BinaryForm, d: u32) -> Result<BinaryForm> {
    let f = generic_form(d, CoefSymbol::A, Pair::X)?;
    let mut acc = BinaryForm::zero(d - 4, Pair::X);
    for r in 1..=(d - 2) / 2 {
        let tau = transvectant(&f, &f, 2 * r)?;
        let t = transvectant(e, &tau, d - 2 * r + 2)?;
        acc = acc.add(&t.scale(&xi_coefficient(d, r)?))?;
    }
    Ok(acc)
}

pub fn diffeq_deg2_check(d: u32) -> Result<bool> {
    if d < 4 {
        return Err(Error::Range(format!("needs d >= 4, got {d}")));
    }
    let e = evectant(&discriminant_det(d)?, d)?;
    Ok(diffeq_deg2_sum(&e, d)?.is_zero())
}

/// The quartic operator with quadratic coefficients applied to `I`.
pub fn quartic_pde_image(invariant: &MPoly) -> MPoly {
    let a = |i: usize| MPoly::var(Var::a(i));
    let c = |n: i64, d: i64| Rational::new(n, d);
    let coefs = [
        (a(0) * a(2)).scale(&c(2, 1)) - (a(1) * a(1)).scale(&c(2, 1)),
        a(0) * a(3) - a(1) * a(2),
        (a(1) * a(3)).scale(&c(2, 3)) - a(2) * a(2) + (a(0) * a(4)).scale(&c(1, 3)),
        a(1) * a(4) - a(2) * a(3),
        (a(2) * a(4)).scale(&c(2, 1)) - (a(3) * a(3)).scale(&c(2, 1)),
    ];
    coefs
        .iter()
        .enumerate()
        .map(|(i, k)| k * &invariant.derivative(Var::a(i), 1))
        .sum()
}

pub fn quartic_pde_check_for(invariant: &MPoly) -> bool {
    quartic_pde_image(invariant).is_zero()
}

pub fn quartic_pde_check() -> Result<bool> {
    Ok(quartic_pde_check_for(&discriminant_det(4)?))
}

/// The order-`d` form `sum_k C(d,k) m_k x1^k x2^(d-k)` built from the
/// maximal minors `m_k` (row `k` deleted) of `beta + gamma` on `f`.
pub fn wronskian_of_minors(f: &BinaryForm) -> Result<BinaryForm> {
    let d = f.order();
    let m = beta_gamma_matrix_of(f)?;
    let mut coefs = vec![MPoly::zero(); d as usize + 1];
    for k in 0..=d as usize {
        let minor = m.without_row(k).determinant()?;
        coefs[d as usize - k] = minor.scale(&binomial(d as i64, k as i64));
    }
    BinaryForm::new(d, Pair::X, coefs)
}

/// Symbolic comparison of the Wronskian of minors with `E_Delta`.
pub fn wronskian_evectant_check_symbolic(d: u32) -> Result<Option<Rational>> {
    let f = generic_form(d, CoefSymbol::A, Pair::X)?;
    let w = wronskian_of_minors(&f)?;
    let e = evectant(&discriminant_det(d)?, d)?;
    Ok(are_proportional(&e.to_poly(), &w.to_poly()))
}

fn form_at(d: u32, values: &[Rational]) -> Result<BinaryForm> {
    Ok(generic_form(d, CoefSymbol::A, Pair::X)?.evaluate(&a_assignment(values)))
}

/// Specialised comparison at `count` seeded points. Returns one ratio per
/// point; `None` marks a point where the two forms are not proportional.
pub fn wronskian_evectant_ratios(d: u32, count: usize, seed: u64) -> Result<Vec<Option<Rational>>> {
    let h = h_matrix(d)?;
    let mut out = Vec::with_capacity(count);
    for vals in sample_points(seed, count * 4, d as usize + 1, 9) {
        if out.len() == count {
            break;
        }
        let e = match evectant_of_delta_at(&h, &vals) {
            Ok(e) if !e.is_zero() => e,
            Ok(_) | Err(Error::Precondition(_)) => continue,
            Err(err) => return Err(err),
        };
        let w = wronskian_of_minors(&form_at(d, &vals)?)?;
        out.push(are_proportional(&e.to_poly(), &w.to_poly()));
    }
    Ok(out)
}

/// Symbolic for `d <= 4`, five seeded specialisations beyond.
pub fn wronskian_evectant_check(d: u32) -> Result<bool> {
    if d < 3 {
        return Err(Error::Range(format!("needs d >= 3, got {d}")));
    }
    if d <= 4 {
        return Ok(wronskian_evectant_check_symbolic(d)?.is_some());
    }
    let ratios = wronskian_evectant_ratios(d, 5, DEFAULT_SEED)?;
    Ok(ratios.len() == 5 && ratios.iter().all(Option::is_some))
}

/// Result of comparing `det h` with the resultant oracle at seeded points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialisedComparison {
    pub points: usize,
    /// `oracle / det h`, when it was the same at every point.
    pub ratio: Option<Rational>,
}

/// `det h` against the oracle at `count` seeded points where both are
/// nonzero; the ratio must be one constant.
pub fn oracle_comparison_specialised(
    d: u32,
    count: usize,
    seed: u64,
) -> Result<SpecialisedComparison> {
    let h = h_matrix(d)?;
    let mut ratios: Vec<Rational> = Vec::with_capacity(count);
    let mut mismatch = false;
    for vals in sample_points(seed, count * 4, d as usize + 1, 9) {
        if ratios.len() == count {
            break;
        }
        let assign = a_assignment(&vals);
        let det = h.map(|e| e.evaluate(&assign)).determinant()?;
        let oracle = discriminant_oracle_of(&form_at(d, &vals)?)?;
        match (det.constant_value(), oracle.constant_value()) {
            (Some(x), Some(y)) if !x.is_zero() && !y.is_zero() => ratios.push(y / x),
            (Some(x), Some(y)) if x.is_zero() != y.is_zero() => mismatch = true,
            _ => {}
        }
    }
    let same = !mismatch && ratios.windows(2).all(|w| w[0] == w[1]);
    Ok(SpecialisedComparison {
        points: ratios.len(),
        ratio: if same { ratios.first().cloned() } else { None },
    })
}

/// A square linear factor `x1^2` or `x2^2` forces `det h_F = 0`.
pub fn double_root_kills_det(f: &BinaryForm) -> Result<bool> {
    let d = f.order() as usize;
    let by_x2 = f.coef(0).is_zero() && f.coef(1).is_zero();
    let by_x1 = f.coef(d).is_zero() && f.coef(d - 1).is_zero();
    if !by_x1 && !by_x2 {
        return Err(Error::Precondition(
            "form must be divisible by x1^2 or x2^2".into(),
        ));
    }
    Ok(h_matrix_of(f)?.determinant()?.is_zero() && discriminant_of(f)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::from_linear_factors;
    use crate::poly::parse_poly;

    #[test]
    fn sl2_on_invariants() {
        assert!(sl2_annihilation_check(&discriminant_det(4).unwrap(), 4));
        let f = generic_form(4, CoefSymbol::A, Pair::X).unwrap();
        let i = transvectant(&f, &f, 4).unwrap().coef(0).clone();
        assert!(sl2_annihilation_check(&i, 4));
        for d in 1..=5 {
            assert!(!sl2_annihilation_check(&parse_poly("a0").unwrap(), d));
        }
    }

    #[test]
    fn apolarity() {
        assert!(apolarity_identity_check(3).unwrap());
        assert!(apolarity_identity_check(4).unwrap());
        for d in 3..=4u32 {
            let bad = MPoly::var(Var::a(0)).pow(2 * d - 2).unwrap();
            assert!(!apolarity_check_for(&bad, d).unwrap());
        }
    }

    #[test]
    fn xi_values() {
        assert_eq!(xi_coefficient(4, 1).unwrap(), Rational::new(1, 12));
        assert_eq!(xi_coefficient(5, 1).unwrap(), Rational::new(1, 48));
        assert!(xi_coefficient(6, 2).is_ok());
        assert!(xi_coefficient(6, 3).is_err());
        assert!(xi_coefficient(6, 0).is_err());
    }

    #[test]
    fn second_degree_identity() {
        assert!(diffeq_deg2_check(4).unwrap());
        assert!(diffeq_deg2_check(5).unwrap());
    }

    #[test]
    fn quartic_pde() {
        let delta = discriminant_det(4).unwrap();
        assert!(quartic_pde_check_for(&delta));
        assert!(quartic_pde_check_for(&delta.scale(&Rational::from(7))));
        let f = generic_form(4, CoefSymbol::A, Pair::X).unwrap();
        let i = transvectant(&f, &f, 4).unwrap().coef(0).clone();
        assert!(!quartic_pde_check_for(&i.pow(3).unwrap()));
    }

    #[test]
    fn wronskian_matches_evectant() {
        assert!(wronskian_evectant_check(3).unwrap());
        assert!(wronskian_evectant_check(4).unwrap());
        assert!(wronskian_evectant_check(5).unwrap());
    }

    #[test]
    fn double_roots() {
        for f in [
            from_linear_factors(&[((0, 1), 2), ((1, 1), 1), ((1, -1), 1)]),
            from_linear_factors(&[((0, 1), 2), ((1, 2), 3)]),
            from_linear_factors(&[((1, 0), 2), ((1, 3), 2)]),
        ] {
            assert!(double_root_kills_det(&f).unwrap());
        }
    }

    #[test]
    fn specialised_oracle_agreement() {
        let c = oracle_comparison_specialised(5, 6, DEFAULT_SEED).unwrap();
        assert_eq!(c.points, 6);
        let sym = crate::poly::are_proportional(
            &discriminant_det(5).unwrap(),
            &crate::discriminant::discriminant_oracle(5).unwrap(),
        );
        assert_eq!(c.ratio, sym);
    }
}
