//! Command-line front end.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage or parse error,
//! 3 divergent norm, 4 I/O error.

mod figures;
mod table;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::lorentz::{lorentz_quasinorm, lp_norm, lp_norm_profile, triple_norm, LorentzIndex, NormReport};
use crate::maximal::maximal;
use crate::numeric::{integrate, numeric_rearrange_with, Decreasing, Domain, QuadratureSpec, RadialProfile};
use crate::spec_file::{parse, FunctionSpec};
use crate::step::{distribution, rearrange, SimpleFunction};
use crate::verify::{run_suite, CheckReport, SUITES};

pub use figures::{figure, FIGURES};
pub use table::{format_number, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DIVERGENT: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Divergent(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Divergent(_) => EXIT_DIVERGENT,
            CliError::Io(_) => EXIT_IO,
            CliError::Failed(_) => EXIT_FAILED,
        }
    }
}

fn io_error(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

#[derive(Debug, Parser)]
#[command(name = "rearrange", version, about = "Decreasing rearrangements, maximal functions and Lorentz norms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Quasi,
    Triple,
    Lp,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate f, μ_f, f# and f** for a function spec.
    Rearrange {
        spec: PathBuf,
        #[arg(long, default_value_t = 100)]
        grid: usize,
        /// Write rearrange.csv and rearrange.breaks.csv here instead of
        /// printing to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute an L^p, Lorentz or maximal-function norm.
    Norm {
        spec: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        /// Secondary exponent, a number or `inf`; defaults to p.
        #[arg(long, allow_negative_numbers = true)]
        q: Option<f64>,
        #[arg(long, value_enum, default_value = "quasi")]
        which: Which,
    },
    /// Run inequality suites and print a CSV summary.
    Verify {
        /// Suite name or `all`.
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        /// Print every report, not only failing ones, to stderr.
        #[arg(long)]
        details: bool,
    },
    /// Write figure datasets as CSV.
    Figures {
        /// Figure number 1 to 8, or `all`.
        which: String,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Rearrange { spec, grid, out: dir } => cmd_rearrange(&spec, grid, dir.as_deref(), out),
        Command::Norm { spec, p, q, which } => cmd_norm(&spec, p, q.unwrap_or(p), which, out, err),
        Command::Verify {
            suite,
            seed,
            trials,
            details,
        } => cmd_verify(&suite, seed, trials, details, out, err),
        Command::Figures { which, out: dir } => cmd_figures(&which, &dir, out),
    }
}

pub fn load_spec(path: &Path) -> Result<FunctionSpec, CliError> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn profile_of(spec: &FunctionSpec) -> Result<Option<RadialProfile>, CliError> {
    spec.to_profile()
        .transpose()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn write_stdout(out: &mut dyn Write, table: &Table) -> Result<(), CliError> {
    table
        .write_csv(out)
        .map_err(|e| CliError::Io(format!("stdout: {e}")))
}

pub fn write_table(path: &Path, table: &Table) -> Result<(), CliError> {
    let file = fs::File::create(path).map_err(|e| io_error(path, e))?;
    table.write_csv(file).map_err(|e| io_error(path, e))
}

fn create_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| io_error(dir, e))
}

/// Sampled `t, f, mu_f, f_sharp, f_starstar` columns on an even grid of
/// `[0, T]` and, for steps, the exact breakpoints.
pub fn rearrange_tables(spec: &FunctionSpec, grid: usize) -> Result<(Table, Table), CliError> {
    if grid < 2 {
        return Err(CliError::Usage("--grid needs at least 2 points".into()));
    }
    let mut table = Table::new(&["t", "f", "mu_f", "f_sharp", "f_starstar"]);
    let mut breaks = Table::new(&["series", "left", "right", "constant", "coefficient"]);
    match spec {
        FunctionSpec::Step(f) => {
            step_rows(f, grid, &mut table, &mut breaks);
        }
        _ => {
            let profile = profile_of(spec)?.expect("non-step kinds have a profile");
            let quad = QuadratureSpec::from_env();
            let sharp = numeric_rearrange_with(&profile, &quad).map_err(|e| CliError::Usage(e.to_string()))?;
            let support = sharp.support_measure();
            let end = if support.is_finite() { support } else { 10.0 };
            let spec = quad.singular_start(sharp.singular_at_zero());
            for i in 0..grid {
                let t = end * i as f64 / (grid - 1) as f64;
                let fs = sharp.value(t);
                let average = if t == 0.0 {
                    fs
                } else {
                    integrate(|s| sharp.value(s), Domain::Finite(0.0, t.min(support)), &spec)
                        .map(|e| e.value / t)
                        .unwrap_or(f64::INFINITY)
                };
                table.push(vec![t, profile.eval(t), sharp.distribution(t), fs, average]);
            }
        }
    }
    Ok((table, breaks))
}

// Breakpoint series codes: 0 = f, 1 = mu_f, 2 = f_sharp, 3 = f_starstar.
fn step_rows(f: &SimpleFunction, grid: usize, table: &mut Table, breaks: &mut Table) {
    let sharp = rearrange(f);
    let mu = distribution(f);
    let m = maximal(&sharp);
    let hull_end = f.hull().map(|h| h.1).unwrap_or(0.0);
    let end = hull_end.max(f.max_value()).max(sharp.support());
    let end = if end > 0.0 { end } else { 1.0 };
    for i in 0..grid {
        let t = end * i as f64 / (grid - 1) as f64;
        let average = if t == 0.0 { m.limit_at_zero() } else { m.eval(t).expect("t > 0") };
        table.push(vec![
            t,
            f.eval(t),
            mu.eval(t).expect("t ≥ 0"),
            sharp.eval(t).expect("t ≥ 0"),
            average,
        ]);
    }
    for p in f.pieces() {
        breaks.push(vec![0.0, p.left, p.right, p.value, 0.0]);
    }
    for p in mu.pieces() {
        breaks.push(vec![1.0, p.left, p.right, p.value, 0.0]);
    }
    for p in sharp.pieces() {
        breaks.push(vec![2.0, p.left, p.right, p.value, 0.0]);
    }
    for p in m.pieces() {
        breaks.push(vec![3.0, p.left, p.right, p.constant, p.coefficient]);
    }
}

fn cmd_rearrange(path: &Path, grid: usize, dir: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = load_spec(path)?;
    let (table, breaks) = rearrange_tables(&spec, grid)?;
    match dir {
        None => write_stdout(out, &table),
        Some(dir) => {
            create_dir(dir)?;
            write_table(&dir.join("rearrange.csv"), &table)?;
            write_breaks(&dir.join("rearrange.breaks.csv"), &breaks)
        }
    }
}

// Same layout as the table, with the series column spelled out.
fn write_breaks(path: &Path, breaks: &Table) -> Result<(), CliError> {
    const NAMES: [&str; 4] = ["f", "mu_f", "f_sharp", "f_starstar"];
    let file = fs::File::create(path).map_err(|e| io_error(path, e))?;
    let mut w = csv::Writer::from_writer(file);
    let result = (|| -> csv::Result<()> {
        w.write_record(&breaks.header)?;
        for row in &breaks.rows {
            let mut record = vec![NAMES[row[0] as usize].to_string()];
            record.extend(row[1..].iter().map(|&x| format_number(x)));
            w.write_record(&record)?;
        }
        w.flush()?;
        Ok(())
    })();
    result.map_err(|e| io_error(path, e))
}

/// Norm of a parsed spec.
pub fn compute_norm(spec: &FunctionSpec, p: f64, q: f64, which: &str) -> Result<NormReport, CliError> {
    let usage = |e: &dyn std::fmt::Display| CliError::Usage(e.to_string());
    let index = || LorentzIndex::new(p, q).map_err(|e| usage(&e));
    let quad = QuadratureSpec::from_env();
    let profile = profile_of(spec)?;
    match (which, spec, profile) {
        ("lp", FunctionSpec::Step(f), _) => lp_norm(f, p).map_err(|e| usage(&e)),
        ("lp", _, Some(profile)) => lp_norm_profile(&profile, p, &quad).map_err(|e| usage(&e)),
        ("quasi", FunctionSpec::Step(f), _) => lorentz_quasinorm(&rearrange(f), index()?).map_err(|e| usage(&e)),
        ("quasi", _, Some(profile)) => {
            let idx = index()?;
            let sharp = numeric_rearrange_with(&profile, &quad).map_err(|e| usage(&e))?;
            lorentz_quasinorm(&sharp, idx).map_err(|e| usage(&e))
        }
        ("triple", FunctionSpec::Step(f), _) => {
            triple_norm(&maximal(&rearrange(f)), index()?).map_err(|e| usage(&e))
        }
        ("triple", _, _) => Err(CliError::Usage(
            "the maximal-function norm is available for step functions only".into(),
        )),
        (other, _, _) => Err(CliError::Usage(format!("unknown norm `{other}`"))),
    }
}

fn cmd_norm(path: &Path, p: f64, q: f64, which: Which, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let spec = load_spec(path)?;
    let name = match which {
        Which::Quasi => "quasi",
        Which::Triple => "triple",
        Which::Lp => "lp",
    };
    let report = compute_norm(&spec, p, q, name)?;
    let text = format!(
        "norm: {name}\np: {}\nq: {}\nvalue: {}\nmethod: {}\nerror_bound: {}\n",
        format_number(p),
        format_number(q),
        format_number(report.value),
        report.method,
        format_number(report.error_bound)
    );
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::Io(format!("stdout: {e}")))?;
    match report.divergence {
        Some(reason) => {
            let _ = writeln!(out, "divergence: {reason}");
            let _ = writeln!(err, "divergent integral: {reason}");
            Err(CliError::Divergent(format!("norm is +inf ({})", path.display())))
        }
        None => Ok(()),
    }
}

/// One CSV row per report: `name,trials,violations,min_margin,empirical_constant`.
pub fn summary_table(reports: &[CheckReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let _ = w.write_record(["name", "trials", "violations", "min_margin", "empirical_constant"]);
    for r in reports {
        let _ = w.write_record([
            r.name.clone(),
            r.trials.to_string(),
            r.violations.to_string(),
            format_number(r.min_margin),
            r.empirical_constant.map(format_number).unwrap_or_default(),
        ]);
    }
    String::from_utf8(w.into_inner().unwrap_or_default()).unwrap_or_default()
}

fn cmd_verify(
    suite: &str,
    seed: u64,
    trials: usize,
    details: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut reports = Vec::new();
    for name in names {
        let batch = run_suite(name, seed, trials).ok_or_else(|| {
            CliError::Usage(format!("unknown suite `{name}`; expected one of: all, {}", SUITES.join(", ")))
        })?;
        reports.extend(batch);
    }
    out.write_all(summary_table(&reports).as_bytes())
        .map_err(|e| CliError::Io(format!("stdout: {e}")))?;
    for r in reports.iter().filter(|r| details || !r.passed()) {
        let _ = write!(err, "{r}");
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.name.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("violations in {}", failed.join(", "))))
    }
}

fn cmd_figures(which: &str, dir: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let ids: Vec<usize> = if which == "all" {
        FIGURES.to_vec()
    } else {
        match which.parse::<usize>() {
            Ok(n) if FIGURES.contains(&n) => vec![n],
            _ => return Err(CliError::Usage(format!("unknown figure `{which}`; expected 1 to 8 or all"))),
        }
    };
    create_dir(dir)?;
    for id in ids {
        let table = figure(id)?;
        let path = dir.join(format!("figure{id}.csv"));
        write_table(&path, &table)?;
        let _ = writeln!(out, "{}", path.display());
    }
    Ok(())
}
