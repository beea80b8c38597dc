//! Factored test forms and the membership cross-check over them.
//!
//! One form per line: `[[[c1,c2],m], ...]` stands for the product of
//! `(c1 x1 + c2 x2)^m`. Linear factors on a line must be pairwise
//! non-proportional.

use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::forms::{from_linear_factors, BinaryForm};

use super::covariants::{alpha_rank, covariant_a_of, g_f, tau_delta_classify, Stratum};
use super::degrees::PartitionSpec;

pub const BUILTIN_CORPUS: &str = include_str!("../../data/loci_corpus.jsonl");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredForm {
    pub factors: Vec<((i64, i64), u32)>,
}

impl FactoredForm {
    pub fn form(&self) -> BinaryForm {
        from_linear_factors(&self.factors)
    }

    pub fn order(&self) -> u32 {
        self.factors.iter().map(|f| f.1).sum()
    }

    pub fn partition(&self) -> Result<PartitionSpec> {
        PartitionSpec::new(self.factors.iter().map(|f| f.1).collect())
    }

    pub fn distinct_roots(&self) -> u32 {
        self.factors.len() as u32
    }

    /// Stratum read off from the root multiplicities.
    pub fn expected_stratum(&self) -> Stratum {
        let p = self.partition().expect("validated on parse");
        let big: Vec<u32> = p.parts().iter().copied().filter(|&m| m > 1).collect();
        match big.as_slice() {
            [] => Stratum::Smooth,
            [2] => Stratum::Nodal,
            [3] => Stratum::Tau,
            [2, 2] => Stratum::Delta,
            _ => Stratum::Deeper,
        }
    }
}

pub fn parse_corpus(text: &str) -> Result<Vec<FactoredForm>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let factors: Vec<([i64; 2], u32)> = serde_json::from_str(line)
            .map_err(|e| Error::Precondition(format!("corpus line {}: {e}", lineno + 1)))?;
        let factors: Vec<((i64, i64), u32)> = factors
            .into_iter()
            .map(|(c, m)| ((c[0], c[1]), m))
            .collect();
        for (i, &((a, b), m)) in factors.iter().enumerate() {
            if (a == 0 && b == 0) || m == 0 {
                return Err(Error::Precondition(format!(
                    "corpus line {}: degenerate factor",
                    lineno + 1
                )));
            }
            for &((c, e), _) in &factors[..i] {
                if a * e == b * c {
                    return Err(Error::Precondition(format!(
                        "corpus line {}: proportional factors",
                        lineno + 1
                    )));
                }
            }
        }
        if factors.is_empty() {
            return Err(Error::Precondition(format!(
                "corpus line {}: empty",
                lineno + 1
            )));
        }
        out.push(FactoredForm { factors });
    }
    Ok(out)
}

pub fn builtin_corpus() -> Vec<FactoredForm> {
    parse_corpus(BUILTIN_CORPUS).expect("builtin corpus parses")
}

/// For each form and each `1 <= n <= d-1`, the three membership tests for
/// `Phi_n` (vanishing of `A_n`, rank drop of `alpha_n`, `ord g_F >= d-n`)
/// must agree with each other and with the root count. Forms with `d >= 4`
/// are also run through the stratum classifier.
pub fn membership_report(corpus: &[FactoredForm]) -> Result<CheckReport> {
    let mut report = CheckReport::new("loci membership");
    for ff in corpus {
        let f = ff.form();
        let d = f.order();
        let label = ff.partition()?.to_string();
        let g_order = g_f(&f)?.order();
        let mut ok = g_order == d - ff.distinct_roots();
        let mut detail = Vec::new();
        for n in 1..d {
            let truth = ff.distinct_roots() <= n;
            let by_a = covariant_a_of(&f, n)?.is_zero();
            let by_alpha = alpha_rank(&f, n)? < 2 * n as usize;
            let by_g = g_order >= d - n;
            if !(by_a == truth && by_alpha == truth && by_g == truth) {
                ok = false;
                detail.push(format!(
                    "n={n}: A {by_a} alpha {by_alpha} g {by_g} roots {truth}"
                ));
            }
        }
        if d >= 4 {
            let got = tau_delta_classify(&f)?;
            let want = ff.expected_stratum();
            if got != want {
                ok = false;
                detail.push(format!(
                    "stratum {} expected {}",
                    got.as_str(),
                    want.as_str()
                ));
            }
        }
        let detail = if detail.is_empty() {
            format!("d={d}")
        } else {
            detail.join("; ")
        };
        report.push(format!("{label} {:?}", ff.factors), ok, detail);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loci::degrees::partitions;
    use std::collections::BTreeSet;

    #[test]
    fn corpus_covers_all_shapes() {
        let c = builtin_corpus();
        assert_eq!(c.len(), 30);
        let seen: BTreeSet<PartitionSpec> = c.iter().map(|f| f.partition().unwrap()).collect();
        for d in 2..=6 {
            for p in partitions(d) {
                assert!(seen.contains(&p), "missing {p}");
            }
        }
    }

    #[test]
    fn parse_rejects_bad_lines() {
        assert!(parse_corpus("[[[1,0],2],[[2,0],1]]").is_err());
        assert!(parse_corpus("[[[0,0],2]]").is_err());
        assert!(parse_corpus("[1,2]").is_err());
        assert_eq!(parse_corpus("\n[[[1,1],2]]\n").unwrap().len(), 1);
    }

    #[test]
    fn builtin_membership() {
        let r = membership_report(&builtin_corpus()).unwrap();
        assert!(r.passed(), "{r}");
    }
}
