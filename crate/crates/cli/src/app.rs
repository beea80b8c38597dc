//! Argument parsing and command dispatch.

use std::fmt::Write as _;

use binform_core::discriminant::{degree_report, discriminant_det};
use binform_core::forms::{plethysm_decomposition, plethysm_multiplicity, BinaryForm};
use binform_core::loci::{covariant_a, hilbert_degree, phi_degree, PartitionSpec};
use binform_core::poly::json::to_json;
use binform_core::poly::to_text;
use binform_core::resultant::{morley_form, resultant_det, sylvester_resultant};
use binform_core::special::DEFAULT_SEED;
use binform_core::suites::{work_items, Suite, SuiteOptions};
use binform_core::{forms::a_assignment, MPoly, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::expr::{parse_expr, Env};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "binform", version, about = "Exact covariants of binary forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Determinantal discriminant of the generic form of order D.
    Disc {
        #[arg(long)]
        degree: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Resultant of generic forms of orders D and E as det eta.
    Res {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        e: u32,
        /// Print the Sylvester determinant instead.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        out: Output,
    },
    /// The Morley form of orders D and E.
    Morley {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        e: u32,
        #[command(flatten)]
        out: Output,
    },
    /// A covariant given by an expression, or the Wronskian covariant A_N.
    Covariant {
        #[arg(long)]
        degree: u32,
        #[arg(long, conflicts_with = "an", required_unless_present = "an")]
        expr: Option<String>,
        #[arg(long = "An")]
        an: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Degrees of coincident-root loci.
    Degree {
        #[arg(long, value_delimiter = ',', num_args = 1.., group = "what")]
        partition: Option<Vec<u32>>,
        #[arg(long, num_args = 2, value_names = ["D", "N"], group = "what")]
        phi: Option<Vec<u32>>,
        #[arg(long, value_name = "D", group = "what")]
        jacobian: Option<u32>,
    },
    /// Multiplicities of S_q in S_m(S_d).
    Plethysm {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        q: Option<u32>,
    },
    /// Run an identity suite.
    Check {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        e: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Evaluate an expression at given coefficients a0..aD.
    Eval {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        expr: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        at: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

fn core_error(e: binform_core::Error) -> Outcome {
    match e {
        binform_core::Error::Consistency(_) => Outcome {
            code: EXIT_CHECK_FAILED,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        _ => Outcome::usage(e),
    }
}

fn poly_out(p: &MPoly, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", to_text(p)),
        Format::Json => format!("{}\n", to_json(p)),
    }
}

fn form_out(f: &BinaryForm, format: Format) -> String {
    poly_out(&f.to_poly(), format)
}

pub fn run(cli: Cli) -> Outcome {
    match execute(cli.command) {
        Ok(o) => o,
        Err(e) => core_error(e),
    }
}

fn execute(cmd: Command) -> binform_core::Result<Outcome> {
    Ok(match cmd {
        Command::Disc { degree, out } => {
            Outcome::ok(poly_out(&discriminant_det(degree)?, out.format))
        }
        Command::Res { d, e, oracle, out } => {
            let r = if oracle {
                sylvester_resultant(d, e)?
            } else {
                resultant_det(d, e)?
            };
            Outcome::ok(poly_out(&r, out.format))
        }
        Command::Morley { d, e, out } => {
            Outcome::ok(poly_out(morley_form(d, e)?.value.poly(), out.format))
        }
        Command::Covariant {
            degree,
            expr,
            an,
            out,
        } => match (expr, an) {
            (Some(src), _) => match eval_expr(degree, &src)? {
                Ok(f) => Outcome::ok(form_out(&f, out.format)),
                Err(o) => o,
            },
            (None, Some(n)) => Outcome::ok(form_out(&covariant_a(n, degree)?, out.format)),
            (None, None) => Outcome::usage("one of --expr or --An is required"),
        },
        Command::Degree {
            partition,
            phi,
            jacobian,
        } => degree_cmd(partition, phi, jacobian)?,
        Command::Plethysm { m, d, q } => match q {
            Some(q) => Outcome::ok(format!("{}\n", plethysm_multiplicity(m, d, q))),
            None => {
                let parts: Vec<String> = plethysm_decomposition(m, d)
                    .into_iter()
                    .map(|(q, k)| {
                        if k == 1 {
                            format!("S{q}")
                        } else {
                            format!("{k}*S{q}")
                        }
                    })
                    .collect();
                Outcome::ok(format!("{}\n", parts.join(" + ")))
            }
        },
        Command::Check { suite, d, e, seed } => check_cmd(suite, SuiteOptions { d, e, seed }),
        Command::Eval {
            degree,
            expr,
            at,
            out,
        } => {
            if at.len() != degree as usize + 1 {
                return Ok(Outcome::usage(format!(
                    "--at needs {} values for degree {degree}, got {}",
                    degree + 1,
                    at.len()
                )));
            }
            let mut values = Vec::with_capacity(at.len());
            for v in &at {
                match v.parse::<Rational>() {
                    Ok(r) => values.push(r),
                    Err(_) => return Ok(Outcome::usage(format!("invalid rational `{v}` in --at"))),
                }
            }
            match eval_expr(degree, &expr)? {
                Ok(f) => Outcome::ok(form_out(&f.evaluate(&a_assignment(&values)), out.format)),
                Err(o) => o,
            }
        }
    })
}

/// Parse and evaluate; expression errors become usage outcomes.
fn eval_expr(degree: u32, src: &str) -> binform_core::Result<Result<BinaryForm, Outcome>> {
    let mut env = Env::new(degree)?;
    Ok(parse_expr(src)
        .and_then(|e| env.eval(&e))
        .map_err(Outcome::usage))
}

fn degree_cmd(
    partition: Option<Vec<u32>>,
    phi: Option<Vec<u32>>,
    jacobian: Option<u32>,
) -> binform_core::Result<Outcome> {
    Ok(if let Some(p) = partition {
        Outcome::ok(format!("{}\n", hilbert_degree(&PartitionSpec::new(p)?)))
    } else if let Some(v) = phi {
        Outcome::ok(format!("{}\n", phi_degree(v[0], v[1])?))
    } else if let Some(d) = jacobian {
        let r = degree_report(d)?;
        let json = serde_json::to_string(&r).expect("degree report serializes");
        Outcome::ok(format!("{json}\n"))
    } else {
        Outcome::usage("one of --partition, --phi or --jacobian is required")
    })
}

fn check_cmd(suite: Suite, opts: SuiteOptions) -> Outcome {
    let items = work_items(suite, &opts);
    let reports: Vec<_> = items.par_iter().map(|w| w.run()).collect();
    let mut stdout = String::new();
    let (mut pass, mut fail) = (0, 0);
    for r in &reports {
        stdout.push_str(&r.to_string());
        for i in &r.items {
            if i.passed {
                pass += 1;
            } else {
                fail += 1;
            }
        }
    }
    let _ = writeln!(stdout, "{suite}: {pass} passed, {fail} failed");
    Outcome {
        code: if fail == 0 {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        },
        stdout,
        stderr: String::new(),
    }
}
