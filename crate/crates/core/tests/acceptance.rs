//! One PASS/FAIL line per acceptance criterion. Every comparison is exact:
//! rational equality or exact proportionality, tolerance zero.
//! Run with `--nocapture` to see the lines.

use std::time::{Duration, Instant};

use binform_core::check::CheckReport;
use binform_core::resultant::{
    g_apolarity_holds, resultant_det, resultant_evectant_as_printed_of, resultant_evectant_of,
};
use binform_core::suites::{work_items, Suite, SuiteOptions, WorkItem};
use binform_core::Var;

struct Outcome {
    reports: Vec<CheckReport>,
    elapsed: Duration,
}

impl Outcome {
    fn failures(&self) -> Vec<String> {
        self.reports
            .iter()
            .flat_map(|r| {
                r.items
                    .iter()
                    .filter(|i| !i.passed)
                    .map(move |i| format!("{}: {}", r.title, i.name))
            })
            .collect()
    }

    fn count(&self) -> usize {
        self.reports.iter().map(|r| r.items.len()).sum()
    }
}

fn run(items: Vec<WorkItem>) -> Outcome {
    let t = Instant::now();
    let reports = items.iter().map(WorkItem::run).collect();
    Outcome {
        reports,
        elapsed: t.elapsed(),
    }
}

fn items(suite: Suite, d: Option<u32>) -> Vec<WorkItem> {
    work_items(
        suite,
        &SuiteOptions {
            d,
            ..SuiteOptions::default()
        },
    )
}

/// Prints the criterion line and its failing items, then asserts.
fn verdict(n: u32, what: &str, parts: &[(&Outcome, Option<Duration>)]) {
    let mut ok = true;
    let mut timing = Vec::new();
    let mut failures = Vec::new();
    let mut checks = 0;
    for (o, limit) in parts {
        checks += o.count();
        failures.extend(o.failures());
        match limit {
            Some(l) => {
                ok &= o.elapsed <= *l;
                timing.push(format!(
                    "{:.2}s <= {}s",
                    o.elapsed.as_secs_f64(),
                    l.as_secs()
                ));
            }
            None => timing.push(format!("{:.2}s", o.elapsed.as_secs_f64())),
        }
    }
    ok &= failures.is_empty();
    let tag = if ok { "PASS" } else { "FAIL" };
    println!(
        "{tag} criterion {n}: {what} ({checks} checks, {} failed, exact, {})",
        failures.len(),
        timing.join(", ")
    );
    for f in &failures {
        println!("    failed: {f}");
    }
    assert!(ok, "criterion {n} failed: {failures:?}");
}

const MIN: u64 = 60;

#[test]
fn criterion_1_determinantal_discriminant() {
    let symbolic = run((3..=5)
        .flat_map(|d| items(Suite::Discriminant, Some(d)))
        .collect());
    let special = run((6..=7)
        .flat_map(|d| items(Suite::Discriminant, Some(d)))
        .collect());
    verdict(
        1,
        "det h ~ Sylvester oracle, symbolic d=3..5, 20 seeded points d=6,7",
        &[
            (&symbolic, Some(Duration::from_secs(MIN))),
            (&special, Some(Duration::from_secs(2 * MIN))),
        ],
    );
}

#[test]
fn criterion_2_quartic_suite() {
    let o = run(items(Suite::Quartic, None));
    verdict(
        2,
        "quartic identities and PDE",
        &[(&o, Some(Duration::from_secs(10)))],
    );
}

#[test]
fn criterion_3_quintic_suite() {
    let o = run(items(Suite::Quintic, None));
    for r in &o.reports {
        for i in r.items.iter().filter(|i| i.name.starts_with("(D1, F)_2 ~")) {
            println!("    observed: {} ({})", i.name, i.detail);
        }
    }
    verdict(
        3,
        "quintic identities and specialisation",
        &[(&o, Some(Duration::from_secs(5 * MIN)))],
    );
}

#[test]
fn criterion_4_morley_and_resultant() {
    let o = run(items(Suite::Morley, None));
    verdict(
        4,
        "Morley identity, det eta ~ Sylvester, theta columns at common factors, six grid cells",
        &[(&o, Some(Duration::from_secs(2 * MIN)))],
    );
}

#[test]
fn criterion_5_syzygies() {
    let mut all = items(Suite::Syzygy, None);
    all.extend(items(Suite::Diffeq, None));
    let o = run(all);
    // the evectant with the exponents exactly as printed is the x1 <-> x2
    // mirror of the one used above and fails (G, E)_e = 0
    let res = resultant_det(3, 2).unwrap();
    let printed = resultant_evectant_as_printed_of(&res, 3);
    let dual = resultant_evectant_of(&res, 3);
    let mirrored = printed
        .to_poly()
        .rename(&[(Var::X1, Var::X2), (Var::X2, Var::X1)]);
    println!(
        "    observed: printed ordering at (3,2): (G, E)_2 = 0 is {}, mirror ratio to the dual ordering {:?}",
        g_apolarity_holds(&printed, 2).unwrap(),
        binform_core::are_proportional(&mirrored, &dual.to_poly()).map(|r| r.to_string())
    );
    verdict(
        5,
        "sl2 annihilation, apolarity, degree-2 equation, resultant syzygies",
        &[(&o, None)],
    );
}

#[test]
fn criterion_6_loci() {
    let o = run(items(Suite::Loci, None));
    verdict(
        6,
        "A_n ends, evectant via A_(d-2), lemma g_F, membership corpus, classifier",
        &[(&o, None)],
    );
}

#[test]
fn criterion_7_numerics() {
    let o = run(items(Suite::Numerics, None));
    verdict(
        7,
        "Hilbert and phi degrees, degree reports d=4..12, plethysm lists, Wronskian of minors",
        &[(&o, None)],
    );
}

#[test]
fn criterion_8_scope() {
    // nothing is computed for perfection, resolutions or primary decompositions
    let names: Vec<String> = work_items(Suite::All, &SuiteOptions::default())
        .into_iter()
        .map(|w| w.name)
        .collect();
    let stray = names.iter().any(|n| {
        ["resolution", "perfect", "primary"]
            .iter()
            .any(|w| n.contains(w))
    });
    println!(
        "SKIP criterion 8: scope statement only, {} work items, none outside scope: {}",
        names.len(),
        !stray
    );
    assert!(!stray);
}
