//! Command-line front end.
//!
//! Decisions print `YES`/`NO` (plus a ratio or witness when there is one) and
//! exit with 0/1; input errors exit with 2.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::factor::{TrialDivision, DEFAULT_TRIAL_BOUND};
use crate::morita::{self, AlgebraDescriptor, CornerOrdering};
use crate::rational::PositiveRational;
use crate::supernatural::SupernaturalNumber;
use crate::text::parse_steinitz_with;
use crate::tower::{run_suite, SuiteConfig, RANK_ORDER_CAP};

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "steinitz",
    version,
    about = "Supernatural numbers and Morita classes of locally matrix algebras",
    after_help = "Expressions: PRIME[^EXP] terms joined by '*', EXP a number or 'inf', \
                  plus at most one 'rest^EXP' for all other primes; '1' is the empty product.\n\
                  Example: '2^inf*3*rest^0'"
)]
struct Cli {
    /// Largest trial divisor used when checking that listed primes are prime.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIAL_BOUND)]
    trial_bound: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the canonical form of an expression.
    Parse { expr: String },
    /// Product of one or more numbers.
    Mul {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Least common multiple.
    Lcm {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Greatest common divisor.
    Gcd {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Does A divide B?
    Divides { a: String, b: String },
    /// Is every exponent finite?
    LocallyFinite { expr: String },
    /// Are the algebras with these invariants isomorphic?
    Iso { a: String, b: String },
    /// Are they Morita equivalent? Prints the ratio st(B)/st(A) when they are.
    Morita { a: String, b: String },
    /// The ratio st(B)/st(A), if it exists.
    Ratio { a: String, b: String },
    /// Minimal k, l with M_k(A) isomorphic to M_l(B).
    Witness { a: String, b: String },
    /// Invariant of the corner eAe for an idempotent of relative rank R (m/n).
    Corner { expr: String, rank: String },
    /// Invariant of C with A = M_n(C).
    Decompose { expr: String, n: u64 },
    /// Invariants q·st(A) of the Morita class, for q = m/n with m, n <= bound.
    Enumerate {
        expr: String,
        #[arg(long, default_value_t = 4)]
        bound: u64,
    },
    /// Position of A relative to B in their Morita class.
    Compare { a: String, b: String },
    /// Run the seeded matrix-tower verification suite.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = RANK_ORDER_CAP)]
        max_order: u64,
        /// Number of tower trials.
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(line: impl Into<String>) -> Self {
        Self::with_code(EXIT_YES, line)
    }

    fn with_code(code: u8, line: impl Into<String>) -> Self {
        let mut stdout = line.into();
        if !stdout.ends_with('\n') {
            stdout.push('\n');
        }
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn decision(yes: bool, detail: Option<String>) -> Self {
        match (yes, detail) {
            (true, Some(d)) => Self::ok(format!("YES {d}")),
            (true, None) => Self::ok("YES"),
            (false, _) => Self::with_code(EXIT_NO, "NO"),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

type CmdResult = Result<Outcome, String>;

struct Context {
    td: TrialDivision,
}

impl Context {
    fn number(&self, text: &str) -> Result<SupernaturalNumber, String> {
        parse_steinitz_with(text, &self.td).map_err(|e| format!("{text:?}: {e}"))
    }

    fn algebra(&self, text: &str) -> Result<AlgebraDescriptor, String> {
        self.number(text).map(AlgebraDescriptor::new)
    }

    fn fold(
        &self,
        exprs: &[String],
        op: fn(&SupernaturalNumber, &SupernaturalNumber) -> SupernaturalNumber,
    ) -> CmdResult {
        let mut values = exprs.iter().map(|e| self.number(e));
        let first = values.next().expect("clap requires one")?;
        let folded = values.try_fold(first, |acc, v| v.map(|v| op(&acc, &v)))?;
        Ok(Outcome::ok(folded.to_string()))
    }
}

fn execute(cli: Cli) -> CmdResult {
    let cx = Context {
        td: TrialDivision::with_bound(cli.trial_bound),
    };
    let err = |e: &dyn std::fmt::Display| e.to_string();
    match cli.command {
        Command::Parse { expr } => Ok(Outcome::ok(cx.number(&expr)?.to_string())),
        Command::Mul { exprs } => cx.fold(&exprs, SupernaturalNumber::mul),
        Command::Lcm { exprs } => cx.fold(&exprs, SupernaturalNumber::lcm),
        Command::Gcd { exprs } => cx.fold(&exprs, SupernaturalNumber::gcd),
        Command::Divides { a, b } => Ok(Outcome::decision(
            cx.number(&a)?.divides(&cx.number(&b)?),
            None,
        )),
        Command::LocallyFinite { expr } => Ok(Outcome::decision(
            cx.number(&expr)?.is_locally_finite(),
            None,
        )),
        Command::Iso { a, b } => Ok(Outcome::decision(
            morita::are_isomorphic(&cx.algebra(&a)?, &cx.algebra(&b)?),
            None,
        )),
        Command::Morita { a, b } => {
            let ratio = morita::morita_ratio(&cx.algebra(&a)?, &cx.algebra(&b)?);
            Ok(Outcome::decision(
                ratio.is_some(),
                ratio.map(|q| format!("ratio={q}")),
            ))
        }
        Command::Ratio { a, b } => match morita::morita_ratio(&cx.algebra(&a)?, &cx.algebra(&b)?) {
            Some(q) => Ok(Outcome::ok(q.to_string())),
            None => Ok(Outcome::decision(false, None)),
        },
        Command::Witness { a, b } => {
            let w = morita::morita_witness(&cx.algebra(&a)?, &cx.algebra(&b)?);
            Ok(Outcome::decision(
                w.is_some(),
                w.map(|w| format!("k={} l={}", w.k, w.l)),
            ))
        }
        Command::Corner { expr, rank } => {
            let r: PositiveRational = rank.parse().map_err(|e| err(&e))?;
            let c = cx.algebra(&expr)?.corner(&r).map_err(|e| err(&e))?;
            Ok(Outcome::ok(c.to_string()))
        }
        Command::Decompose { expr, n } => {
            let c = cx
                .algebra(&expr)?
                .decompose_matrix_factor(n)
                .map_err(|e| err(&e))?;
            Ok(Outcome::ok(c.to_string()))
        }
        Command::Enumerate { expr, bound } => {
            if bound == 0 {
                return Err("--bound must be at least 1".into());
            }
            let class = cx.algebra(&expr)?.morita_class(bound);
            let lines: Vec<String> = class.iter().map(ToString::to_string).collect();
            Ok(Outcome::ok(lines.join("\n")))
        }
        Command::Compare { a, b } => {
            let ord = morita::proper_corner_compare(&cx.algebra(&a)?, &cx.algebra(&b)?);
            let code = if ord == CornerOrdering::Incomparable {
                EXIT_NO
            } else {
                EXIT_YES
            };
            Ok(Outcome::with_code(code, ord.to_string()))
        }
        Command::Verify {
            seed,
            max_order,
            trials,
        } => {
            if max_order == 0 || max_order > RANK_ORDER_CAP {
                return Err(format!("--max-order must be in 1..={RANK_ORDER_CAP}"));
            }
            let report = run_suite(&SuiteConfig {
                seed,
                max_order,
                tower_trials: trials,
                ..SuiteConfig::default()
            });
            let failed = report.failures().count();
            let mut out = report.to_string();
            out.push_str(&format!(
                "SUMMARY checks={} failed={failed}\n",
                report.checks.len()
            ));
            Ok(Outcome::with_code(
                if failed == 0 { EXIT_YES } else { EXIT_NO },
                out,
            ))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => Outcome::usage(e.to_string()),
            }
        }
    };
    match execute(cli) {
        Ok(outcome) => outcome,
        Err(message) => Outcome::usage(format!("error: {message}")),
    }
}
