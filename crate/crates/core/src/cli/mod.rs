//! `gftcheck` command-line front end.
//!
//! Exit codes: 0 holds, 1 fails, 2 inconclusive, 3 input or parameter error.

pub mod input;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::checks::{check, membership, CheckConfig, ClassId, Params, TheoremId};
use crate::error::{Error, Result};
use crate::sup::GridSpec;
use crate::witness::{falsify, make_witness, radius_of_validity, FalsifyConfig, WitnessId};
use input::{parse_complex, FunctionSpecFile};
use report::{to_json, ReportFile};

pub const EXIT_HOLDS: u8 = 0;
pub const EXIT_FAILS: u8 = 1;
pub const EXIT_INCONCLUSIVE: u8 = 2;
pub const EXIT_ERROR: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "gftcheck", version, about = "Check sufficient conditions for starlikeness, convexity and bounded turning")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check one theorem instance on a function file.
    Check(CheckArgs),
    /// Test membership in a class of order alpha.
    Membership(MembershipArgs),
    /// Print one of the extremal example functions as a function file.
    Example(ExampleArgs),
    /// Run randomized hypothesis-satisfying trials through a checker.
    Falsify(FalsifyArgs),
    /// Bisect for the largest subdisk on which a hypothesis holds.
    Radius(RadiusArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    Lem11,
    Lem12,
    Thm1,
    Cor1,
    Thm2,
    Lem3,
    Thm3,
}

impl From<TheoremArg> for TheoremId {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Lem11 => TheoremId::Lem11,
            TheoremArg::Lem12 => TheoremId::Lem12,
            TheoremArg::Thm1 => TheoremId::Thm1,
            TheoremArg::Cor1 => TheoremId::Cor1,
            TheoremArg::Thm2 => TheoremId::Thm2,
            TheoremArg::Lem3 => TheoremId::Lem3,
            TheoremArg::Thm3 => TheoremId::Thm3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Star,
    C,
    K,
}

impl From<ClassArg> for ClassId {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Star => ClassId::Star,
            ClassArg::C => ClassId::BoundedTurning,
            ClassArg::K => ClassId::Convex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessArg {
    Ex1,
    Ex2,
    Ex3,
}

impl From<WitnessArg> for WitnessId {
    fn from(w: WitnessArg) -> Self {
        match w {
            WitnessArg::Ex1 => WitnessId::Ex1,
            WitnessArg::Ex2 => WitnessId::Ex2,
            WitnessArg::Ex3 => WitnessId::Ex3,
        }
    }
}

#[derive(Debug, Args)]
pub struct TheoremParamArgs {
    #[arg(long, value_enum)]
    pub theorem: TheoremArg,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Complex literal such as `0.5-1i`.
    #[arg(long, default_value = "0+0i", allow_hyphen_values = true)]
    pub beta: String,
    /// Radius for lem11, lem12 and lem3.
    #[arg(long, allow_negative_numbers = true)]
    pub rho: Option<f64>,
}

impl TheoremParamArgs {
    fn params(&self, n: usize) -> Result<Params> {
        Ok(Params { n, alpha: self.alpha, beta: parse_complex(&self.beta)?, rho: self.rho })
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub theorem: TheoremParamArgs,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 0.999)]
    pub rmax: f64,
    #[arg(long = "grid-m", default_value_t = 4096)]
    pub grid_m: usize,
    /// Required gap below the hypothesis threshold.
    #[arg(long, default_value_t = 0.0)]
    pub slack: f64,
}

#[derive(Debug, Args)]
pub struct MembershipArgs {
    #[arg(long, value_enum)]
    pub class: ClassArg,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 0.999)]
    pub rmax: f64,
    #[arg(long = "grid-m", default_value_t = 4096)]
    pub grid_m: usize,
}

#[derive(Debug, Args)]
pub struct ExampleArgs {
    #[arg(long, value_enum)]
    pub id: WitnessArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
}

#[derive(Debug, Args)]
pub struct FalsifyArgs {
    #[command(flatten)]
    pub theorem: TheoremParamArgs,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.9)]
    pub margin: f64,
    #[arg(long = "tail-len", default_value_t = 4)]
    pub tail_len: usize,
    #[arg(long, default_value_t = 0.999)]
    pub rmax: f64,
    #[arg(long = "grid-m", default_value_t = 4096)]
    pub grid_m: usize,
}

#[derive(Debug, Args)]
pub struct RadiusArgs {
    #[command(flatten)]
    pub theorem: TheoremParamArgs,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long = "grid-m", default_value_t = 4096)]
    pub grid_m: usize,
    /// Circle on which each rescaled hypothesis is certified.
    #[arg(long = "probe-radius", default_value_t = 1.0)]
    pub probe_radius: f64,
}

#[derive(Debug, Serialize)]
struct CheckEcho {
    theorem: TheoremId,
    params: Params,
    input: String,
    function: FunctionSpecFile,
    config: CheckConfig,
}

#[derive(Debug, Serialize)]
struct MembershipEcho {
    class: ClassId,
    alpha: f64,
    input: String,
    function: FunctionSpecFile,
    config: CheckConfig,
}

#[derive(Debug, Serialize)]
struct FalsifyEcho {
    theorem: TheoremId,
    params: Params,
    config: FalsifyConfig,
}

#[derive(Debug, Serialize)]
struct RadiusEcho {
    theorem: TheoremId,
    params: Params,
    input: String,
    function: FunctionSpecFile,
    grid: GridSpec,
    probe_radius: f64,
}

/// Output of one command: text for standard output and the exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

fn emit<T: Serialize>(value: &T, code: u8) -> Result<Outcome> {
    let stdout = to_json(value).map_err(|e| Error::Input(format!("cannot serialize report: {e}")))?;
    Ok(Outcome { stdout, code })
}

fn grid(m: usize) -> GridSpec {
    GridSpec::with_m(m)
}

pub fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Check(a) => {
            let f = FunctionSpecFile::read(&a.input)?;
            let params = a.theorem.params(f.n())?;
            let theorem = a.theorem.theorem.into();
            let config = CheckConfig { grid: grid(a.grid_m), r_max: a.rmax, slack: a.slack, ..CheckConfig::default() };
            let rep = check(theorem, &f, &params, &config)?;
            let code = rep.verdict.state.exit_code();
            let echo = CheckEcho {
                theorem,
                params,
                input: a.input.display().to_string(),
                function: FunctionSpecFile::from_series(&f),
                config,
            };
            emit(&ReportFile::new("check", echo, rep), code)
        }
        Command::Membership(a) => {
            let f = FunctionSpecFile::read(&a.input)?;
            let class = a.class.into();
            let config = CheckConfig { grid: grid(a.grid_m), r_max: a.rmax, ..CheckConfig::default() };
            let rep = membership(class, &f, a.alpha, &config)?;
            let code = rep.verdict.state.exit_code();
            let echo = MembershipEcho {
                class,
                alpha: a.alpha,
                input: a.input.display().to_string(),
                function: FunctionSpecFile::from_series(&f),
                config,
            };
            emit(&ReportFile::new("membership", echo, rep), code)
        }
        Command::Example(a) => {
            let f = make_witness(a.id.into(), a.n, a.alpha)?;
            emit(&FunctionSpecFile::from_series(&f), EXIT_HOLDS)
        }
        Command::Falsify(a) => {
            let theorem: TheoremId = a.theorem.theorem.into();
            let params = a.theorem.params(a.n)?;
            let config = FalsifyConfig {
                trials: a.trials,
                seed: a.seed,
                margin: a.margin,
                tail_len: a.tail_len,
                r_max: a.rmax,
                grid: grid(a.grid_m),
            };
            let summary = falsify(theorem, a.n, &params, &config)?;
            let code = if summary.fails == 0 { EXIT_HOLDS } else { EXIT_FAILS };
            emit(&ReportFile::new("falsify", FalsifyEcho { theorem, params, config }, summary), code)
        }
        Command::Radius(a) => {
            let f = FunctionSpecFile::read(&a.input)?;
            let theorem: TheoremId = a.theorem.theorem.into();
            let params = a.theorem.params(f.n())?;
            let grid = grid(a.grid_m);
            let rep = radius_of_validity(theorem, &f, &params, &grid, a.probe_radius)?;
            let echo = RadiusEcho {
                theorem,
                params,
                input: a.input.display().to_string(),
                function: FunctionSpecFile::from_series(&f),
                grid,
                probe_radius: a.probe_radius,
            };
            emit(&ReportFile::new("radius", echo, rep), EXIT_HOLDS)
        }
    }
}

/// Parses `args`, runs the command, writes the report, and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(stdout, "{e}");
            return EXIT_HOLDS;
        }
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return EXIT_ERROR;
        }
    };
    match execute(&cli.command) {
        Ok(out) => {
            if writeln!(stdout, "{}", out.stdout).is_err() {
                return EXIT_ERROR;
            }
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "gftcheck: {e}");
            EXIT_ERROR
        }
    }
}
