//! Argument grammar and dispatch for the `topdiff` binary.
//!
//! [`run`] never panics on bad input and never touches stdout, which keeps
//! every report testable as a plain string. Exit codes: 0 success, 1 a
//! property or oracle check failed, 2 usage, input or parameter error.

mod commands;
mod inputs;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "topdiff", version, about = "Weighted top-difference distances and median rankings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for the exhaustive solver.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
}

/// Weights: a params file, or a preset such as `kendall`, `linear`,
/// `binomial:1/3`, `gilbert:3`, `unavailable-candidate:2`.
#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    #[arg(long, default_value = "kendall")]
    pub params: String,

    /// Overrides the measure, e.g. `--mu "1 1 2"`.
    #[arg(long)]
    pub mu: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Exact,
    Footrule,
    Myopic,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Distance between two rankings.
    Dist {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Evaluate the menu sum instead of the closed form.
        #[arg(long)]
        naive: bool,
    },
    /// μ-weighted β-footrule between two rankings.
    Footrule {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Footrule sandwich factor γ_β, with the U/u correction for μ.
    Gamma {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Metric / semimetric label of (β, μ).
    Classify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Median rankings of a profile.
    Aggregate {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        profile: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
        method: MethodArg,
        /// MyopicTop window depth.
        #[arg(long)]
        k: Option<usize>,
        /// MyopicTop target: K is chosen so the result is within 1+ε.
        #[arg(long)]
        epsilon: Option<String>,
    },
    /// Truncation depth g(1/ε) of a weight rule.
    PtasDepth {
        /// `plus-one`, `alternating`, `exponential:α`, or `explicit` with --params.
        #[arg(long)]
        rule: String,
        #[arg(long)]
        epsilon: String,
        /// Use the MyopicTop argument 12·U/(u·ε) with U/u given by --ratio.
        #[arg(long)]
        guarantee: bool,
        #[arg(long, default_value = "1")]
        ratio: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Finite horizon for explicit weights.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Integer program for the median problem in LP text format.
    IlpExport {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        profile: PathBuf,
    },
    /// Audit an axiom of the distance or a property of the median.
    Check {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, conflicts_with = "property", required_unless_present = "property")]
        axiom: Option<String>,
        #[arg(long)]
        property: Option<String>,
        #[arg(long)]
        profile: Option<PathBuf>,
        /// Second profile for `reinforcing`.
        #[arg(long)]
        second: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Compare the closed form against the menu sum on random inputs.
    VerifyOracle {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Fixed weights; random nonnegative rationals when absent.
        #[arg(long)]
        params: Option<String>,
    },
    /// Approximation ratios of footrule and MyopicTop against the exact optimum.
    Bench {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        m: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
}

/// A finished command: report text and exit code.
pub struct Report {
    pub text: String,
    pub code: i32,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: 0 }
    }
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let report = match commands::execute(&cli) {
        Ok(r) => r,
        Err(msg) => return (2, format!("error: {msg}\n")),
    };
    match &cli.out {
        Some(path) => match std::fs::write(path, &report.text) {
            Ok(()) => (report.code, String::new()),
            Err(e) => (2, format!("error: cannot write `{}`: {e}\n", path.display())),
        },
        None => (report.code, report.text),
    }
}
