//! Degree bookkeeping for the singular locus of the discriminant.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::loci::{hilbert_degree, PartitionSpec};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub d: u32,
    pub deg_z: u64,
    pub deg_x_tau: u64,
    pub deg_x_delta: u64,
    /// Multiplicities of `Z` along `X_tau` and `X_delta`.
    pub multiplicity_solution: (u64, u64),
}

/// Generalised binomial `C(k, j)` for integer `k`.
fn gbinomial(k: i64, j: u32) -> Rational {
    (0..j as i64).map(|t| Rational::new(k - t, t + 1)).product()
}

/// Coefficient of `h^2` in `(1+h)^(-3) (1+2h)^(3-d)`.
pub fn porteous_degree(d: u32) -> Rational {
    let k = 3 - d as i64;
    (0..=2u32)
        .map(|j| {
            let left = gbinomial(-3, j);
            let right = gbinomial(k, 2 - j) * Rational::from(2).pow(2 - j);
            left * right
        })
        .sum()
}

fn hilbert_u64(parts: Vec<u32>) -> Result<u64> {
    let h = hilbert_degree(&PartitionSpec::new(parts)?);
    u64::try_from(h).map_err(|_| Error::Range("degree exceeds u64".into()))
}

pub fn degree_report(d: u32) -> Result<DegreeReport> {
    if d < 4 {
        return Err(Error::Range(format!("degree report needs d >= 4, got {d}")));
    }
    let n = d as u64;
    let deg_z = 2 * n * (n - 2);
    if porteous_degree(d) != Rational::from(deg_z as i64) {
        return Err(Error::Consistency(format!(
            "Porteous coefficient {} differs from 2d(d-2) = {deg_z}",
            porteous_degree(d)
        )));
    }
    // Hilbert degrees of X_(3,1^(d-3)) and X_(2,2,1^(d-4))
    let tau = [vec![3], vec![1; d as usize - 3]].concat();
    let delta = [vec![2, 2], vec![1; d as usize - 4]].concat();
    let deg_x_tau = hilbert_u64(tau)?;
    let deg_x_delta = hilbert_u64(delta)?;
    let solutions: Vec<(u64, u64)> = (1..=deg_z / deg_x_tau)
        .flat_map(|a| {
            let rest = deg_z.checked_sub(a * deg_x_tau)?;
            (rest > 0 && rest % deg_x_delta == 0).then_some((a, rest / deg_x_delta))
        })
        .collect();
    match solutions.as_slice() {
        [one] => Ok(DegreeReport {
            d,
            deg_z,
            deg_x_tau,
            deg_x_delta,
            multiplicity_solution: *one,
        }),
        _ => Err(Error::Consistency(format!(
            "expected one multiplicity solution for d = {d}, found {solutions:?}"
        ))),
    }
}
