//! Degrees of coincident-root loci.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};

/// A partition of `d`, stored with weakly decreasing parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PartitionSpec {
    parts: Vec<u32>,
}

impl PartitionSpec {
    /// Sorts `parts` into decreasing order; rejects empty input and zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Precondition(
                "partition parts must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartitionSpec { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn d(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn n(&self) -> u32 {
        self.parts.len() as u32
    }

    /// `e_r`, the number of parts equal to `r`, for each `r` that occurs.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `n! / prod e_r! * prod lambda_i`.
pub fn hilbert_degree(lambda: &PartitionSpec) -> BigUint {
    let denom = lambda
        .multiplicities()
        .values()
        .fold(BigUint::one(), |acc, &e| acc * factorial(e));
    let prod = lambda.parts.iter().fold(BigUint::one(), |acc, &p| acc * p);
    factorial(lambda.n()) / denom * prod
}

/// All partitions of `d` into exactly `n` parts, in decreasing lex order.
pub fn partitions_into(d: u32, n: u32) -> Vec<PartitionSpec> {
    fn go(rest: u32, slots: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<PartitionSpec>) {
        if slots == 0 {
            if rest == 0 {
                out.push(PartitionSpec { parts: cur.clone() });
            }
            return;
        }
        // the remaining slots - 1 parts need at least 1 each
        let hi = max.min(rest.saturating_sub(slots - 1));
        for p in (1..=hi).rev() {
            if p * slots < rest {
                break;
            }
            cur.push(p);
            go(rest - p, slots - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 1 && n <= d {
        go(d, n, d, &mut Vec::new(), &mut out);
    }
    out
}

/// All partitions of `d`.
pub fn partitions(d: u32) -> Vec<PartitionSpec> {
    (1..=d)
        .rev()
        .flat_map(|n| partitions_into(d, n))
        .rev()
        .collect()
}

/// `deg Phi_n = C(d+n-1, d-n)`, checked against the sum of Hilbert degrees
/// over partitions of `d` into `n` parts.
pub fn phi_degree(d: u32, n: u32) -> Result<BigUint> {
    if n < 1 || n > d {
        return Err(Error::Range(format!(
            "phi_degree needs 1 <= n <= d, got d={d} n={n}"
        )));
    }
    let closed = binomial(d + n - 1, d - n);
    let sum: BigUint = partitions_into(d, n).iter().map(hilbert_degree).sum();
    if sum != closed {
        return Err(Error::Consistency(format!(
            "partition sum {sum} differs from C(d+n-1, d-n) = {closed} at d={d} n={n}"
        )));
    }
    Ok(closed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> PartitionSpec {
        PartitionSpec::new(p.to_vec()).unwrap()
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(
            hilbert_degree(&part(&[3, 3, 2, 1, 1, 1])),
            BigUint::from(1080u32)
        );
        assert_eq!(
            hilbert_degree(&part(&[1, 3, 1, 3, 2, 1])),
            BigUint::from(1080u32)
        );
        assert_eq!(hilbert_degree(&part(&[7])), BigUint::from(7u32));
        assert_eq!(hilbert_degree(&part(&[1; 6])), BigUint::from(1u32));
        assert_eq!(hilbert_degree(&part(&[3, 1])), BigUint::from(6u32));
        assert_eq!(hilbert_degree(&part(&[2, 2])), BigUint::from(4u32));
        assert!(PartitionSpec::new(vec![]).is_err());
        assert!(PartitionSpec::new(vec![2, 0]).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|d| partitions(d).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions_into(6, 3).len(), 3);
        assert!(partitions(5).iter().all(|p| p.d() == 5));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_degree(6, 3).unwrap(), BigUint::from(56u32));
        assert_eq!(phi_degree(4, 2).unwrap(), BigUint::from(10u32));
        for d in 1..=12 {
            assert_eq!(phi_degree(d, d).unwrap(), BigUint::from(1u32));
            for n in 1..=d {
                assert!(phi_degree(d, n).is_ok());
            }
        }
        assert!(phi_degree(3, 0).is_err());
    }
}
