//! The `F`-evectant of the resultant and its syzygies.

use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::forms::{a_assignment, b_assignment, generic_form, transvectant, BinaryForm};
use crate::poly::{are_proportional, CoefSymbol, MPoly, Pair, Var};
use crate::rational::{binomial, factorial, Rational};

use super::morley::resultant_det;

/// `sum dR/da_i x2^(d-i) (-x1)^i`, with no normalising factor: each
/// `a_i` is paired with its dual monomial, as for the discriminant.
pub fn resultant_evectant_of(res: &MPoly, d: u32) -> BinaryForm {
    let d = d as usize;
    let mut coefs = vec![MPoly::zero(); d + 1];
    for (i, c) in coefs.iter_mut().rev().enumerate() {
        // x1^i x2^(d-i) sits at index d-i
        let p = res.derivative(Var::a(i), 1);
        *c = if i % 2 == 1 { -p } else { p };
    }
    BinaryForm::new(d as u32, Pair::X, coefs).expect("partials are free of x")
}

/// `sum dR/da_i x2^i (-x1)^(d-i)`: the same construction with the two
/// exponents exchanged. It is the mirror image of [`resultant_evectant_of`]
/// under `x1 <-> x2` and does not satisfy the syzygies.
pub fn resultant_evectant_as_printed_of(res: &MPoly, d: u32) -> BinaryForm {
    let coefs = (0..=d as usize)
        .map(|i| {
            let p = res.derivative(Var::a(i), 1);
            if (d as usize - i) % 2 == 1 {
                -p
            } else {
                p
            }
        })
        .collect();
    BinaryForm::new(d, Pair::X, coefs).expect("partials are free of x")
}

pub fn resultant_evectant(d: u32, e: u32) -> Result<BinaryForm> {
    Ok(resultant_evectant_of(&resultant_det(d, e)?, d))
}

fn alpha_s(d: i64, e: i64, s: i64) -> Rational {
    binomial(d, s) * binomial(e - 2, s)
        / (binomial(d + e - s - 1, s) * binomial(d + e - 2 * s - 2, d - s))
}

fn beta_is(d: i64, e: i64, i: i64, s: i64) -> Rational {
    let mut sum = Rational::zero();
    for l in 0..=s {
        let mut t = factorial(l as u32)
            * factorial((s - l) as u32)
            * binomial(i - 1, s - l)
            * binomial(e - i - 1, l)
            * binomial(d - i, l)
            * binomial(i, s - l);
        if l % 2 == 1 {
            t = -t;
        }
        sum += &t;
    }
    sum / (binomial(d, s) * binomial(e - 2, s) * factorial(s as u32))
}

/// `omega_s = C(d+e-2s-2, d-s) alpha_s sum_i beta_(i,s)` for `s = 0..e-2`.
pub fn omega_s_coefficients(d: u32, e: u32) -> Result<Vec<Rational>> {
    if e < 2 || d + 1 < e {
        return Err(Error::OutOfRegime(format!(
            "need e >= 2, d >= e-1, got ({d}, {e})"
        )));
    }
    let (d, e) = (d as i64, e as i64);
    Ok((0..=e - 2)
        .map(|s| {
            let beta: Rational = (1..e).map(|i| beta_is(d, e, i, s)).sum();
            binomial(d + e - 2 * s - 2, d - s) * alpha_s(d, e, s) * beta
        })
        .collect())
}

/// `sum_s omega_s (E, (F,G)_(s+1))_(d-s)` for a given order-`d` form `E`.
pub fn syzygy_sum(ev: &BinaryForm, d: u32, e: u32) -> Result<BinaryForm> {
    let f = generic_form(d, CoefSymbol::A, Pair::X)?;
    let g = generic_form(e, CoefSymbol::B, Pair::X)?;
    let omega = omega_s_coefficients(d, e)?;
    let mut acc = BinaryForm::zero(e - 2, Pair::X);
    for (s, w) in omega.iter().enumerate() {
        let s = s as u32;
        let tau = transvectant(&f, &g, s + 1)?;
        acc = acc.add(&transvectant(ev, &tau, d - s)?.scale(w))?;
    }
    Ok(acc)
}

pub fn resultant_syzygy_check(d: u32, e: u32) -> Result<bool> {
    Ok(syzygy_sum(&resultant_evectant(d, e)?, d, e)?.is_zero())
}

/// `(G, E)_e = 0` for a given order-`d` form `E`.
pub fn g_apolarity_holds(ev: &BinaryForm, e: u32) -> Result<bool> {
    let g = generic_form(e, CoefSymbol::B, Pair::X)?;
    Ok(transvectant(&g, ev, e)?.is_zero())
}

pub fn g_apolarity_check(d: u32, e: u32) -> Result<bool> {
    g_apolarity_holds(&resultant_evectant(d, e)?, e)
}

/// Coefficient lists for `l * F'` and `l * G'` with `l = p x1 + q x2`.
pub(crate) fn common_factor_pair(
    d: u32,
    e: u32,
    l: (i64, i64),
    rest_f: &[Rational],
    rest_g: &[Rational],
) -> Result<(BinaryForm, BinaryForm)> {
    let lin = BinaryForm::new(1, Pair::X, vec![MPoly::int(l.0), MPoly::int(l.1)])?;
    let mk = |n: u32, c: &[Rational]| -> Result<BinaryForm> {
        BinaryForm::new(n, Pair::X, c.iter().cloned().map(MPoly::constant).collect())
    };
    Ok((lin.mul(&mk(d - 1, rest_f)?)?, lin.mul(&mk(e - 1, rest_g)?)?))
}

fn values(f: &BinaryForm) -> Result<Vec<Rational>> {
    crate::forms::generic_values(f)
}

/// With a single common factor `l`, every theta column vanishes at the
/// root of `l` and `E` specialises to a multiple of `l^d`. Points where the
/// cofactors share a further root are skipped.
pub fn common_factor_report(d: u32, e: u32, seed: u64) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("common factor ({d},{e})"));
    let eta = super::morley::eta_matrix(d, e)?;
    let res = resultant_det(d, e)?;
    let ev = resultant_evectant_of(&res, d);
    let pts = crate::special::sample_points(seed, 40, (d + e + 2) as usize, 5);
    let mut used = 0;
    for pt in &pts {
        if used == 3 {
            break;
        }
        let l = (pt[0].to_i64().unwrap().max(1), pt[1].to_i64().unwrap());
        let (rest_f, rest_g) = (&pt[2..2 + d as usize], &pt[2 + d as usize..]);
        let cof_f: Vec<MPoly> = rest_f.iter().cloned().map(MPoly::constant).collect();
        let cof_g: Vec<MPoly> = rest_g.iter().cloned().map(MPoly::constant).collect();
        if rest_f[0].is_zero() || rest_g[0].is_zero() {
            continue;
        }
        if crate::matrix::sylvester_matrix(&cof_f, &cof_g)
            .determinant()?
            .is_zero()
        {
            continue;
        }
        let k = used;
        used += 1;
        let (f, g) = common_factor_pair(d, e, l, rest_f, rest_g)?;
        let mut assign = a_assignment(&values(&f)?);
        assign.extend(b_assignment(&values(&g)?));
        // the root of l is (x1, x2) = (l.1, -l.0)
        let root = (MPoly::int(l.1), MPoly::int(-l.0));
        let mut ok = true;
        for j in 0..eta.cols() {
            if !eta.col_basis()[j].starts_with("theta") {
                continue;
            }
            let col = BinaryForm::new(
                d,
                Pair::X,
                eta.column(j).iter().map(|c| c.evaluate(&assign)).collect(),
            )?;
            ok &= col.at(&root.0, &root.1).is_zero();
        }
        rep.push(
            format!("theta columns vanish at the root of l, point {k}"),
            ok,
            "",
        );
        let evs = ev.evaluate(&assign);
        let lpow = BinaryForm::new(1, Pair::X, vec![MPoly::int(l.0), MPoly::int(l.1)])?.pow(d)?;
        let r = are_proportional(&lpow.to_poly(), &evs.to_poly());
        rep.push(
            format!("E ~ l^{d}, point {k}"),
            r.is_some() && !evs.is_zero(),
            match r {
                Some(r) => format!("ratio {r}"),
                None => "not proportional".into(),
            },
        );
    }
    if used < 3 {
        return Err(Error::Consistency(
            "too few usable common-factor points".into(),
        ));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resultant::GRID;

    #[test]
    fn omega_values() {
        // frozen from a sympy evaluation of the factorial formulas
        let q = |n, d| Rational::new(n, d);
        assert_eq!(omega_s_coefficients(3, 2).unwrap(), vec![q(1, 1)]);
        assert_eq!(omega_s_coefficients(4, 3).unwrap(), vec![q(2, 1), q(-1, 5)]);
        assert_eq!(
            omega_s_coefficients(5, 4).unwrap(),
            vec![q(3, 1), q(-3, 7), q(2, 5)]
        );
        assert_eq!(omega_s_coefficients(3, 3).unwrap().len(), 2);
        assert!(omega_s_coefficients(2, 4).is_err());
    }

    #[test]
    fn omega_zero_is_e_minus_one_times_alpha() {
        for (d, e) in GRID {
            let w0 = &omega_s_coefficients(d, e).unwrap()[0];
            let (di, ei) = (d as i64, e as i64);
            let expect = binomial(di + ei - 2, di) * alpha_s(di, ei, 0) * Rational::from(ei - 1);
            assert_eq!(w0, &expect);
        }
    }

    #[test]
    fn syzygies_on_small_cells() {
        for (d, e) in [(2, 2), (3, 2), (3, 3), (4, 3)] {
            assert!(g_apolarity_check(d, e).unwrap(), "({d},{e})");
            assert!(resultant_syzygy_check(d, e).unwrap(), "({d},{e})");
        }
    }

    #[test]
    fn printed_ordering_is_the_mirror_image() {
        let r = resultant_det(3, 2).unwrap();
        let ev = resultant_evectant_of(&r, 3);
        let printed = resultant_evectant_as_printed_of(&r, 3);
        let swapped = printed
            .to_poly()
            .rename(&[(Var::X1, Var::X2), (Var::X2, Var::X1)]);
        assert_eq!(
            are_proportional(&ev.to_poly(), &swapped),
            Some(Rational::from(-1))
        );
        assert!(!g_apolarity_holds(&printed, 2).unwrap());
    }

    #[test]
    fn common_root_x2_gives_power_of_x2() {
        for (d, e) in [(3, 2), (4, 3)] {
            let ev = resultant_evectant(d, e).unwrap();
            let rest_f: Vec<Rational> = (1..=d as i64).map(Rational::from).collect();
            let rest_g: Vec<Rational> = (0..e as i64).map(|k| Rational::from(2 - 3 * k)).collect();
            let (f, g) = common_factor_pair(d, e, (0, 1), &rest_f, &rest_g).unwrap();
            let mut assign = a_assignment(&values(&f).unwrap());
            assign.extend(b_assignment(&values(&g).unwrap()));
            let evs = ev.evaluate(&assign);
            let x2d = MPoly::var_pow(crate::poly::Var::X2, d);
            assert!(!evs.is_zero());
            assert!(
                are_proportional(&x2d, &evs.to_poly()).is_some(),
                "({d},{e})"
            );
        }
    }

    #[test]
    fn common_factor_specialisations() {
        for (d, e) in [(2, 2), (3, 2), (3, 3), (4, 3)] {
            let rep = common_factor_report(d, e, crate::special::DEFAULT_SEED).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }
}
