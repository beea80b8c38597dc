//! Identity suites as lists of independent work items.
//!
//! Each item produces its own [`CheckReport`]; callers may run them in any
//! order or in parallel and print the reports in list order.

use std::fmt;
use std::str::FromStr;

use crate::check::CheckReport;
use crate::discriminant::{
    apolarity_identity_check, degree_report, diffeq_deg2_check, discriminant_det,
    discriminant_oracle, oracle_comparison_specialised, quartic_identities_report,
    quartic_pde_check, quintic_identities_report, sl2_annihilation_check, wronskian_evectant_check,
};
use crate::error::Result;
use crate::forms::{from_linear_factors, plethysm_decomposition};
use crate::loci::{
    a1_hessian_check, a_top_discriminant_check, builtin_corpus, evectant_via_a_check,
    hilbert_degree, lemma_gf_check, membership_report, phi_degree, tau_delta_classify,
    PartitionSpec, Stratum,
};
use crate::poly::are_proportional;
use crate::rational::Rational;
use crate::resultant::{
    common_factor_report, g_apolarity_check, morley_identity_check, resultant_det,
    resultant_syzygy_check, sylvester_resultant, GRID,
};
use crate::special::DEFAULT_SEED;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Discriminant,
    Quartic,
    Quintic,
    Morley,
    Syzygy,
    Diffeq,
    Loci,
    Numerics,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Discriminant,
        Suite::Quartic,
        Suite::Quintic,
        Suite::Morley,
        Suite::Syzygy,
        Suite::Diffeq,
        Suite::Loci,
        Suite::Numerics,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Discriminant => "discriminant",
            Suite::Quartic => "quartic",
            Suite::Quintic => "quintic",
            Suite::Morley => "morley",
            Suite::Syzygy => "syzygy",
            Suite::Diffeq => "diffeq",
            Suite::Loci => "loci",
            Suite::Numerics => "numerics",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .iter()
            .chain([Suite::All].iter())
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Overrides for the default parameters of a suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub d: Option<u32>,
    pub e: Option<u32>,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            d: None,
            e: None,
            seed: DEFAULT_SEED,
        }
    }
}

type Job = Box<dyn Fn() -> Result<CheckReport> + Send + Sync>;

pub struct WorkItem {
    pub suite: Suite,
    pub name: String,
    job: Job,
}

impl WorkItem {
    fn new(
        suite: Suite,
        name: impl Into<String>,
        job: impl Fn() -> Result<CheckReport> + Send + Sync + 'static,
    ) -> Self {
        WorkItem {
            suite,
            name: name.into(),
            job: Box::new(job),
        }
    }

    /// Runs the item. An error becomes a single failed entry.
    pub fn run(&self) -> CheckReport {
        match (self.job)() {
            Ok(r) => r,
            Err(e) => {
                let mut r = CheckReport::new(self.name.clone());
                r.push("evaluation", false, e.to_string());
                r
            }
        }
    }
}

fn ratio_detail(r: &Option<Rational>) -> String {
    match r {
        Some(r) => format!("ratio {r}"),
        None => "not proportional".into(),
    }
}

fn single(title: String, name: &str, passed: bool, detail: String) -> CheckReport {
    let mut r = CheckReport::new(title);
    r.push(name, passed, detail);
    r
}

fn discriminant_items(opts: &SuiteOptions) -> Vec<WorkItem> {
    let s = Suite::Discriminant;
    let seed = opts.seed;
    let degrees: Vec<u32> = match opts.d {
        Some(d) => vec![d],
        None => vec![3, 4, 5, 6, 7],
    };
    degrees
        .into_iter()
        .map(|d| {
            WorkItem::new(s, format!("discriminant d={d}"), move || {
                let title = format!("discriminant d={d}");
                if d <= 5 {
                    let r = are_proportional(&discriminant_det(d)?, &discriminant_oracle(d)?);
                    Ok(single(
                        title,
                        "det h ~ oracle (symbolic)",
                        r.is_some(),
                        ratio_detail(&r),
                    ))
                } else {
                    let c = oracle_comparison_specialised(d, 20, seed)?;
                    let ok = c.points == 20 && c.ratio.is_some();
                    let detail = format!("{} points, {}", c.points, ratio_detail(&c.ratio));
                    Ok(single(
                        title,
                        "det h ~ oracle (20 specialisations)",
                        ok,
                        detail,
                    ))
                }
            })
        })
        .collect()
}

fn quartic_items() -> Vec<WorkItem> {
    let s = Suite::Quartic;
    vec![
        WorkItem::new(s, "quartic identities", quartic_identities_report),
        WorkItem::new(s, "quartic pde", || {
            Ok(single(
                "quartic".into(),
                "displayed PDE annihilates Delta",
                quartic_pde_check()?,
                String::new(),
            ))
        }),
    ]
}

fn cells(opts: &SuiteOptions) -> Vec<(u32, u32)> {
    match (opts.d, opts.e) {
        (Some(d), Some(e)) => vec![(d, e)],
        _ => GRID.to_vec(),
    }
}

fn morley_items(opts: &SuiteOptions) -> Vec<WorkItem> {
    let seed = opts.seed;
    cells(opts)
        .into_iter()
        .map(|(d, e)| {
            WorkItem::new(Suite::Morley, format!("morley ({d},{e})"), move || {
                let mut r = CheckReport::new(format!("morley ({d},{e})"));
                r.push("Morley identity", morley_identity_check(d, e)?, "");
                let ratio = are_proportional(&resultant_det(d, e)?, &sylvester_resultant(d, e)?);
                r.push("det eta ~ Sylvester", ratio.is_some(), ratio_detail(&ratio));
                r.extend(common_factor_report(d, e, seed)?);
                Ok(r)
            })
        })
        .collect()
}

fn syzygy_items(opts: &SuiteOptions) -> Vec<WorkItem> {
    let s = Suite::Syzygy;
    let mut items = Vec::new();
    for d in 3..=6 {
        items.push(WorkItem::new(s, format!("sl2 d={d}"), move || {
            let ok = sl2_annihilation_check(&discriminant_det(d)?, d);
            Ok(single(
                format!("syzygy d={d}"),
                "sl2 operators annihilate Delta",
                ok,
                String::new(),
            ))
        }));
    }
    for d in 3..=5 {
        items.push(WorkItem::new(s, format!("apolarity d={d}"), move || {
            let ok = apolarity_identity_check(d)?;
            Ok(single(
                format!("syzygy d={d}"),
                "(F, E_Delta)_(d-1) = 0",
                ok,
                String::new(),
            ))
        }));
    }
    for (d, e) in cells(opts) {
        items.push(WorkItem::new(
            s,
            format!("resultant syzygies ({d},{e})"),
            move || {
                let mut r = CheckReport::new(format!("syzygy ({d},{e})"));
                r.push("(G, E_R)_e = 0", g_apolarity_check(d, e)?, "");
                r.push(
                    "sum omega_s (E_R, (F, G)_(s+1))_(d-s) = 0",
                    resultant_syzygy_check(d, e)?,
                    "",
                );
                Ok(r)
            },
        ));
    }
    items
}

fn diffeq_items() -> Vec<WorkItem> {
    let s = Suite::Diffeq;
    (4..=6)
        .map(|d| {
            WorkItem::new(s, format!("diffeq d={d}"), move || {
                let ok = diffeq_deg2_check(d)?;
                Ok(single(
                    format!("diffeq d={d}"),
                    "sum xi_r (E_Delta, (F, F)_2r) = 0",
                    ok,
                    String::new(),
                ))
            })
        })
        .collect()
}

type Factors = Vec<((i64, i64), u32)>;

fn labelled_forms() -> Vec<(Factors, Stratum)> {
    vec![
        (vec![((1, 0), 3), ((0, 1), 1), ((1, 1), 1)], Stratum::Tau),
        (vec![((1, 0), 2), ((0, 1), 2), ((1, 1), 1)], Stratum::Delta),
        (
            vec![
                ((1, 0), 1),
                ((0, 1), 1),
                ((1, 1), 1),
                ((1, -1), 1),
                ((1, 2), 1),
            ],
            Stratum::Smooth,
        ),
        (
            vec![((1, 0), 2), ((0, 1), 1), ((1, 1), 1), ((1, -1), 1)],
            Stratum::Nodal,
        ),
        (vec![((1, 0), 3), ((0, 1), 1)], Stratum::Tau),
        (vec![((1, 0), 2), ((0, 1), 2)], Stratum::Delta),
        (
            vec![((1, 2), 3), ((0, 1), 1), ((1, 1), 1), ((3, -1), 1)],
            Stratum::Tau,
        ),
        (
            vec![((1, 0), 2), ((0, 1), 2), ((1, 1), 1), ((2, 1), 1)],
            Stratum::Delta,
        ),
        (vec![((1, 0), 4), ((0, 1), 1)], Stratum::Deeper),
        (vec![((1, 0), 3), ((0, 1), 2)], Stratum::Deeper),
        (vec![((1, 0), 2), ((0, 1), 2), ((1, 1), 2)], Stratum::Deeper),
    ]
}

fn loci_items() -> Vec<WorkItem> {
    let s = Suite::Loci;
    let mut items = Vec::new();
    for d in 3..=6 {
        items.push(WorkItem::new(s, format!("A_n ends d={d}"), move || {
            let mut r = CheckReport::new(format!("loci d={d}"));
            let h = a1_hessian_check(d)?;
            r.push("A_1 ~ H", h.is_some(), ratio_detail(&h));
            let t = a_top_discriminant_check(d)?;
            r.push("A_(d-1) ~ Delta", t.is_some(), ratio_detail(&t));
            if d <= 5 {
                let e = evectant_via_a_check(d)?;
                r.push(
                    "(A_(d-2), F)_(d-2) ~ E_Delta",
                    e.is_some(),
                    ratio_detail(&e),
                );
            }
            Ok(r)
        }));
    }
    items.push(WorkItem::new(s, "lemma g_F", || {
        let mut r = CheckReport::new("loci lemma");
        for ff in builtin_corpus() {
            let n = ff.distinct_roots();
            if n >= 2 {
                let name = format!("A_(n-1) ~ g_F^(2n-2) for {:?}", ff.factors);
                r.push(name, lemma_gf_check(&ff.form(), n)?, format!("n={n}"));
            }
        }
        Ok(r)
    }));
    items.push(WorkItem::new(s, "membership", || {
        membership_report(&builtin_corpus())
    }));
    items.push(WorkItem::new(s, "classifier", || {
        let mut r = CheckReport::new("loci classifier");
        for (factors, want) in labelled_forms() {
            let got = tau_delta_classify(&from_linear_factors(&factors))?;
            r.push(
                format!("{factors:?}"),
                got == want,
                format!("{} expected {}", got.as_str(), want.as_str()),
            );
        }
        Ok(r)
    }));
    items
}

fn numerics_items() -> Vec<WorkItem> {
    let s = Suite::Numerics;
    vec![
        WorkItem::new(s, "hilbert and phi degrees", || {
            let mut r = CheckReport::new("numerics");
            let h = hilbert_degree(&PartitionSpec::new(vec![3, 3, 2, 1, 1, 1])?);
            r.push(
                "deg X_(3,3,2,1,1,1) = 1080",
                h == 1080u32.into(),
                h.to_string(),
            );
            let mut ok = true;
            for d in 1..=12 {
                for n in 1..=d {
                    ok &= phi_degree(d, n).is_ok();
                }
            }
            r.push("phi_degree binomial = partition sum, d <= 12", ok, "");
            Ok(r)
        }),
        WorkItem::new(s, "degree reports", || {
            let mut r = CheckReport::new("numerics");
            for d in 4..=12u64 {
                let rep = degree_report(d as u32)?;
                let want = (2 * d * (d - 2), 3 * (d - 2), 2 * (d - 2) * (d - 3));
                let got = (rep.deg_z, rep.deg_x_tau, rep.deg_x_delta);
                let ok = got == want && rep.multiplicity_solution == (2, 1);
                r.push(
                    format!("degree report d={d}"),
                    ok,
                    format!("{got:?} {:?}", rep.multiplicity_solution),
                );
            }
            Ok(r)
        }),
        WorkItem::new(s, "plethysm", || {
            let mut r = CheckReport::new("numerics");
            let s34 = plethysm_decomposition(3, 4);
            r.push(
                "S3(S4) = S12 + S8 + S6 + S4 + S0",
                s34 == vec![(12, 1), (8, 1), (6, 1), (4, 1), (0, 1)],
                format!("{s34:?}"),
            );
            let s26 = plethysm_decomposition(2, 6);
            r.push(
                "S2(S6) = S12 + S8 + S4 + S0",
                s26 == vec![(12, 1), (8, 1), (4, 1), (0, 1)],
                format!("{s26:?}"),
            );
            Ok(r)
        }),
        WorkItem::new(s, "wronskian of minors", || {
            let mut r = CheckReport::new("numerics");
            for d in 3..=5 {
                let how = if d <= 4 { "symbolic" } else { "specialised" };
                r.push(
                    format!("Wronskian of minors ~ E_Delta d={d}"),
                    wronskian_evectant_check(d)?,
                    how,
                );
            }
            Ok(r)
        }),
    ]
}

/// The work items of `suite`, in output order.
pub fn work_items(suite: Suite, opts: &SuiteOptions) -> Vec<WorkItem> {
    match suite {
        Suite::Discriminant => discriminant_items(opts),
        Suite::Quartic => quartic_items(),
        Suite::Quintic => vec![WorkItem::new(
            Suite::Quintic,
            "quintic identities",
            quintic_identities_report,
        )],
        Suite::Morley => morley_items(opts),
        Suite::Syzygy => syzygy_items(opts),
        Suite::Diffeq => diffeq_items(),
        Suite::Loci => loci_items(),
        Suite::Numerics => numerics_items(),
        Suite::All => Suite::EACH
            .iter()
            .flat_map(|&s| work_items(s, opts))
            .collect(),
    }
}

pub fn run_sequential(items: &[WorkItem]) -> Vec<CheckReport> {
    items.iter().map(WorkItem::run).collect()
}
