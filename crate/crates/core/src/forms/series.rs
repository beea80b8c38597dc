//! Gordan-series coefficients and plethysm multiplicities.

use crate::error::{Error, Result};
use crate::forms::biform::{bracket, omega, outer, polarize, BiForm, Polarization};
use crate::forms::binary::{generic_form, transvectant};
use crate::poly::{CoefSymbol, Pair};
use crate::rational::{binomial, factorial, Rational};

/// `c_r = C(d,2r)^2 / C(2d-2r+1, 2r)`.
pub fn gordan_c(d: u32, r: u32) -> Result<Rational> {
    if 2 * r > d {
        return Err(Error::Range(format!(
            "gordan_c needs 2r <= d, got d={d} r={r}"
        )));
    }
    let (d, r) = (d as i64, r as i64);
    let num = binomial(d, 2 * r).pow(2);
    Ok(num / binomial(2 * d - 2 * r + 1, 2 * r))
}

/// Right-hand side of the Gordan series for `F(x) F(y)`:
/// `sum_r c_r (xy)^(2r) tau_x^(d-2r) tau_y^(d-2r)` with `tau = (F,F)_(2r)`,
/// the symbolic product realised by polarising `tau` `d-2r` times.
pub fn gordan_series(d: u32) -> Result<BiForm> {
    let f = generic_form(d, CoefSymbol::A, Pair::X)?;
    let mut acc = BiForm::zero((Pair::X, Pair::Y), (d, d));
    for r in 0..=d / 2 {
        let tau = transvectant(&f, &f, 2 * r)?;
        let k = d - 2 * r;
        let t = BiForm::new(tau.to_poly(), (Pair::X, Pair::Y), (tau.order(), 0))?;
        let pol = polarize(&t, Polarization::YdX, k)?;
        // tau_x^(N-k) tau_y^k = (N-k)!/N! (y d/dx)^k tau with N = 2d-4r
        let scale = factorial(k) / factorial(2 * k) * gordan_c(d, r)?;
        let br = bracket(Pair::X, Pair::Y).pow(2 * r)?;
        let term = BiForm::new(pol.poly() * &br, (Pair::X, Pair::Y), (d, d))?;
        acc = acc.add(&term.scale(&scale))?;
    }
    Ok(acc)
}

/// Checks `F(x) F(y)` against its Gordan series for the generic `d`-ic.
pub fn gordan_series_check(d: u32) -> Result<bool> {
    let f = generic_form(d, CoefSymbol::A, Pair::X)?;
    let fy = f.with_pair(Pair::Y)?;
    let lhs = outer(&f, &fy)?;
    Ok(gordan_series(d)?.poly() == lhs.poly())
}

/// `Omega(F(x) F(y)) / (xy)` as a biform of orders `(d-2, d-2)`.
pub fn omega_quotient(d: u32) -> Result<BiForm> {
    let f = generic_form(d, CoefSymbol::A, Pair::X)?;
    let fy = f.with_pair(Pair::Y)?;
    let om = omega(&outer(&f, &fy)?)?;
    let q = om
        .poly()
        .div_exact(&bracket(Pair::X, Pair::Y))
        .map_err(|e| Error::Consistency(format!("omega quotient: {e}")))?;
    BiForm::new(q, (Pair::X, Pair::Y), (d - 2, d - 2))
}

/// Number of partitions of `k` into at most `m` parts, each at most `d`:
/// the coefficient of `q^k` in the Gaussian binomial `[m+d choose m]_q`.
pub fn box_partitions(k: u32, m: u32, d: u32) -> u128 {
    if k > m * d {
        return 0;
    }
    // table[j][s]: partitions of s into at most j parts bounded by the
    // current largest allowed part
    let k = k as usize;
    let m = m as usize;
    let mut table = vec![vec![0u128; k + 1]; m + 1];
    for row in table.iter_mut() {
        row[0] = 1;
    }
    for part in 1..=d as usize {
        // add parts of size `part`, at most m parts in total
        let mut next = table.clone();
        for j in 1..=m {
            for s in part..=k {
                next[j][s] = table[j][s] + next[j - 1][s - part];
            }
        }
        table = next;
    }
    table[m][k]
}

/// Multiplicity of `S_q` in `S_m(S_d)` by the Cayley-Sylvester formula.
pub fn plethysm_multiplicity(m: u32, d: u32, q: u32) -> u128 {
    let md = m * d;
    if q > md || (md - q) % 2 != 0 {
        return 0;
    }
    let k = (md - q) / 2;
    let pk = box_partitions(k, m, d);
    let pk1 = if k == 0 {
        0
    } else {
        box_partitions(k - 1, m, d)
    };
    pk.saturating_sub(pk1)
}

/// Decomposition of `S_m(S_d)` as `(q, multiplicity)` in descending `q`.
pub fn plethysm_decomposition(m: u32, d: u32) -> Vec<(u32, u128)> {
    (0..=m * d)
        .rev()
        .map(|q| (q, plethysm_multiplicity(m, d, q)))
        .filter(|&(_, c)| c > 0)
        .collect()
}

/// `sum_r c_r (2r)(2d-2r+1) (xy)^(2r-2) ...`: the Bezoutiant expansion as a
/// check on the Gordan coefficients, returned as a biform.
pub fn bezoutiant_series(d: u32) -> Result<BiForm> {
    let series = gordan_series(d)?;
    let om = omega(&series)?;
    let q = om
        .poly()
        .div_exact(&bracket(Pair::X, Pair::Y))
        .map_err(|e| Error::Consistency(format!("bezoutiant series: {e}")))?;
    BiForm::new(q, (Pair::X, Pair::Y), (d - 2, d - 2))
}
