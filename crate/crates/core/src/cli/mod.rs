//! The `oligoperm` command line.
//!
//! Every subcommand produces a [`RunReport`]; the exit code is 0 when all of
//! its checks pass, 1 when one fails, and 2 for usage and input errors.

mod commands;
mod suite;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::coeff::{parse_field, Field};
use crate::error::{Error, Result};
use crate::gset::{Backend, FiniteGroup};
use crate::measure::{solve_measures, Measure};
use crate::report::Report;

pub use suite::run_suite;

/// Version tag of the JSON report layout.
pub const SCHEMA: u32 = 1;

/// Largest `--bound` accepted unless `OLIGOPERM_MAX_BOUND` says otherwise.
pub const DEFAULT_MAX_BOUND: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "oligoperm", version, about = "Measures, integral matrices and Frobenius structures for oligomorphic groups")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Which group the G-sets belong to.
    #[arg(long, global = true, value_enum, default_value_t = BackendArg::Sym)]
    pub backend: BackendArg,
    /// Finite group: S3, C4, D5, or generators such as `(1 2)(3 4)@4`.
    #[arg(long, global = true)]
    pub group: Option<String>,
    /// Largest atom size enumerated.
    #[arg(long, global = true, default_value_t = 3)]
    pub bound: usize,
    /// Coefficient field: q, qt or fp:<p>.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Measure file overriding the solved (or counting) measure.
    #[arg(long, global = true)]
    pub measure: Option<PathBuf>,
    /// Write the JSON report here; `-` for stdout.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BackendArg {
    Sym,
    Line,
    Finite,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the atoms within bound with their measures.
    Atoms,
    /// Dimension of Hom(Vec_X, Vec_Y).
    Homdim {
        #[arg(long = "X")]
        x: String,
        #[arg(long = "Y")]
        y: String,
    },
    /// Integral product of two matrix files, lhs after rhs.
    Compose {
        #[arg(long)]
        lhs: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
    },
    /// Categorical dimension of Vec_X.
    Dim {
        #[arg(long = "X")]
        x: String,
    },
    /// Solve for measures or check a measure file
    #[command(subcommand)]
    Measure(MeasureCommand),
    /// Frobenius algebras and E-idempotents
    #[command(subcommand)]
    Frob(FrobCommand),
    /// The pre-Galois axioms within bound.
    Pregalois,
    /// The linearization functor and measure re-extraction.
    CheckLinearization,
    /// Every checker for the chosen backend.
    Suite,
}

#[derive(Subcommand, Debug)]
enum MeasureCommand {
    /// Solve the measure constraints within bound.
    Solve,
    /// Check a measure file against the axioms.
    Check {
        /// Measure file to check
        #[arg(long)]
        spec: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum FrobCommand {
    /// Frobenius, trace and splitting checks on Vec_X.
    Verify {
        #[arg(long = "X")]
        x: String,
    },
    /// Check a γ file (lines `i j orbit = value`) on Vec_B.
    Eidem {
        #[arg(long)]
        gamma: PathBuf,
        #[arg(long = "B")]
        b: String,
    },
    /// The E-idempotent of a surjection read from a file.
    GammaOf {
        #[arg(long)]
        map: PathBuf,
    },
}

/// What a subcommand reports, in a fixed field order.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: Vec<String>,
    pub backend: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measure: Option<Vec<String>>,
    pub pass: bool,
    pub checks: Report,
    pub data: Value,
}

/// Backend, measure and options shared by the subcommands.
pub struct Context {
    pub backend: Backend,
    pub bound: usize,
    pub seed: u64,
    field: Option<Field>,
    measure_file: Option<PathBuf>,
}

impl Context {
    pub fn new(common: &Common) -> Result<Self> {
        let max = std::env::var("OLIGOPERM_MAX_BOUND")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .unwrap_or(DEFAULT_MAX_BOUND);
        if common.bound > max {
            return Err(Error::Parse(format!("bound {} exceeds OLIGOPERM_MAX_BOUND = {max}", common.bound)));
        }
        let backend = match common.backend {
            BackendArg::Sym => Backend::sym(),
            BackendArg::Line => Backend::line(),
            BackendArg::Finite => {
                let g = common.group.as_deref().ok_or_else(|| Error::Parse("--backend finite needs --group".into()))?;
                Backend::finite(FiniteGroup::parse(g)?)
            }
        };
        let field = common.field.as_deref().map(parse_field).transpose()?;
        Ok(Context { backend, bound: common.bound, seed: common.seed, field, measure_file: common.measure.clone() })
    }

    /// The field used when none is given: ℚ(t) for the symmetric backend, ℚ otherwise.
    pub fn field(&self) -> Field {
        self.field.unwrap_or(match self.backend.kind() {
            crate::gset::Kind::Sym => Field::RatFuncQ('t'),
            _ => Field::Rational,
        })
    }

    /// The measure file if given, else counting measure for finite groups and
    /// the generic solved measure otherwise.
    pub fn measure(&self) -> Result<Measure> {
        if let Some(path) = &self.measure_file {
            return Measure::parse(&self.backend, &read(path)?, self.field());
        }
        if self.backend.group().is_some() {
            return Measure::counting(&self.backend, self.bound);
        }
        Ok(solve_measures(&self.backend, self.bound.max(2), self.field())?.generic_measure(&self.backend))
    }
}

pub(crate) fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Result of one subcommand before it is wrapped into a [`RunReport`].
pub struct Outcome {
    pub report: Report,
    pub measure: Option<Measure>,
    pub data: Value,
    pub text: String,
}

fn dispatch(ctx: &Context, command: &Command) -> Result<Outcome> {
    match command {
        Command::Atoms => commands::atoms(ctx),
        Command::Homdim { x, y } => commands::homdim(ctx, x, y),
        Command::Compose { lhs, rhs } => commands::compose(ctx, lhs, rhs),
        Command::Dim { x } => commands::dim(ctx, x),
        Command::Measure(MeasureCommand::Solve) => commands::measure_solve(ctx),
        Command::Measure(MeasureCommand::Check { spec }) => commands::measure_check(ctx, spec),
        Command::Frob(FrobCommand::Verify { x }) => commands::frob_verify(ctx, x),
        Command::Frob(FrobCommand::Eidem { gamma, b }) => commands::frob_eidem(ctx, gamma, b),
        Command::Frob(FrobCommand::GammaOf { map }) => commands::frob_gamma_of(ctx, map),
        Command::Pregalois => commands::pregalois(ctx),
        Command::CheckLinearization => commands::check_linearization(ctx),
        Command::Suite => run_suite(ctx),
    }
}

/// Parses `args` (program name first), runs the subcommand and writes the
/// human report to `out`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let started = Instant::now();
    let outcome = Context::new(&cli.common).and_then(|ctx| Ok((dispatch(&ctx, &cli.command)?, ctx)));
    let (outcome, ctx) = match outcome {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let run = RunReport {
        schema: SCHEMA,
        command: args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
        backend: ctx.backend.id().to_string(),
        measure: outcome.measure.as_ref().map(|m| m.to_text().lines().map(str::to_string).collect()),
        pass: outcome.report.pass(),
        checks: outcome.report,
        data: outcome.data,
    };
    let json = serde_json::to_string_pretty(&run).expect("reports serialize") + "\n";
    match cli.common.json.as_deref() {
        Some(p) if p.as_os_str() == "-" => {
            let _ = out.write_all(json.as_bytes());
        }
        other => {
            if let Some(p) = other {
                if let Err(e) = std::fs::write(p, &json) {
                    let _ = writeln!(err, "error: {}: {e}", p.display());
                    return 2;
                }
            }
            let _ = write!(out, "backend {}\n{}", run.backend, outcome.text);
            let _ = write!(out, "{}", run.checks);
            let _ = writeln!(out, "{} in {:.2?}", if run.pass { "PASS" } else { "FAIL" }, started.elapsed());
        }
    }
    if run.pass {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("oligoperm").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["measure", "solve", "--backend", "line", "--bound", "3"]).0, 0);
        let (code, out, _) = call(&["pregalois", "--backend", "sym", "--bound", "2"]);
        assert_eq!(code, 1, "{out}");
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["suite", "--backend", "finite"]).0, 2);
        assert_eq!(call(&["atoms", "--bound", "99"]).0, 2);
        assert_eq!(call(&["dim", "--X", "sym:inj[x]"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn json_is_deterministic() {
        let args = ["homdim", "--backend", "line", "--X", "line:inc[2]", "--Y", "line:inc[2]", "--json", "-"];
        let (code, first, _) = call(&args);
        assert_eq!(code, 0);
        assert_eq!(call(&args).1, first);
        let v: Value = serde_json::from_str(&first).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["data"]["dim"], 13);
        assert_eq!(v["pass"], true);
    }

    #[test]
    fn dimensions_and_tensors() {
        let (_, out, _) = call(&["dim", "--X", "sym:inj[1] (x) sym:inj[1]"]);
        assert!(out.contains("= t^2"), "{out}");
        let (_, out, _) = call(&["dim", "--backend", "line", "--X", "line:inc[1]"]);
        assert!(out.contains("= -1"), "{out}");
        let (_, out, _) = call(&["homdim", "--X", "1", "--Y", "sym:inj[2]"]);
        assert!(out.contains("= 1"), "{out}");
    }
}
