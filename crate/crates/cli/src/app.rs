//! Command dispatch and the exit-code contract: 0 success, 1 verification
//! failure, 2 syntax, validation or I/O error, 3 budget exceeded,
//! 4 not supported.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use symrep::budget::Budget;
use symrep::reduce::{analyze, basis_to_strings, run_reduction, AnalysisReport, AnalyzeOptions, ReduceError};
use symrep::reps::{invariant_dims, RepError};
use symrep::rootdata::{subspace_normalizer, RootDataError};

use crate::budget::resolve_budget;
use crate::error::CliError;
use crate::report::{Report, SCHEMA_VERSION};
use crate::spec_file::{parse_spec, rep_error_code, ParsedSpec};
use crate::verify::run_checks;

#[derive(Debug, Parser)]
#[command(name = "symrep", version, about = "Analyze symplectic representations of reductive groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank, complexity, little Weyl group and isotropy shape.
    Analyze {
        spec: PathBuf,
        #[command(flatten)]
        format: Format,
        /// Include the reduction trace.
        #[arg(long)]
        trace: bool,
    },
    /// Analysis plus numeric verification on the matrix model.
    Verify {
        spec: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
        #[command(flatten)]
        format: Format,
    },
    /// Dimensions of the invariants of degree 0..=D.
    Hilbert {
        spec: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// The group Γ = N_W(a*)/Z_W(a*).
    Gamma { spec: PathBuf },
    /// Analyze every `.json` file in a directory.
    Batch {
        dir: PathBuf,
        /// Write one report per spec into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct Format {
    /// JSON report (default).
    #[arg(long)]
    json: bool,
    /// Human-readable report.
    #[arg(long)]
    text: bool,
}

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_SAMPLES: usize = 20;

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. `env` supplies budget overrides.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, env: &dyn Fn(&str) -> Option<String>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out, err, env) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "symrep: error[{}]: {e}", e.code());
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write, env: &dyn Fn(&str) -> Option<String>) -> Result<i32, CliError> {
    match cmd {
        Command::Analyze { spec, format, trace } => {
            let report = analyze_path(&spec, trace, env)?;
            emit(out, &report, format.text)?;
            Ok(0)
        }
        Command::Verify { spec, seed, samples, format } => {
            let (parsed, budget) = load(&spec, env)?;
            let analysis = run_analysis(&parsed, &budget)?;
            let mut report = Report::new(&parsed.file, dim(&parsed)?, &analysis, false);
            let seed = seed.or(parsed.file.options.seed).unwrap_or(DEFAULT_SEED);
            let samples = samples.or(parsed.file.options.samples).unwrap_or(DEFAULT_SAMPLES);
            let block = run_checks(&parsed.spec, &analysis, &budget, seed, samples)?;
            let failed: Vec<String> = block.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
            report.numeric_verification = Some(block);
            emit(out, &report, format.text)?;
            if failed.is_empty() {
                Ok(0)
            } else {
                let e = CliError::Verification(failed.join(", "));
                let _ = writeln!(err, "symrep: error[{}]: {e}", e.code());
                Ok(e.exit_code())
            }
        }
        Command::Hilbert { spec, degree } => {
            let (parsed, budget) = load(&spec, env)?;
            let dims = invariant_dims(&parsed.spec, degree, &budget).map_err(rep_failure)?;
            #[derive(Serialize)]
            struct HilbertOut {
                schema_version: u32,
                max_degree: usize,
                invariant_dims: Vec<u64>,
            }
            write_json(out, &HilbertOut { schema_version: SCHEMA_VERSION, max_degree: degree, invariant_dims: dims })?;
            Ok(0)
        }
        Command::Gamma { spec } => {
            let (parsed, budget) = load(&spec, env)?;
            let (_, terminal) = run_reduction(&parsed.spec, &budget).map_err(reduce_failure)?;
            let datum = parsed.spec.datum();
            let g = subspace_normalizer(datum, &terminal.a_star_basis, budget.weyl_cap).map_err(root_failure)?;
            #[derive(Serialize)]
            struct GammaOut {
                schema_version: u32,
                a_star_basis: Vec<Vec<String>>,
                weyl_order: String,
                normalizer_order: usize,
                centralizer_order: usize,
                order: usize,
                reflection_count: usize,
            }
            write_json(
                out,
                &GammaOut {
                    schema_version: SCHEMA_VERSION,
                    a_star_basis: basis_to_strings(&g.a_star_basis),
                    weyl_order: datum.weyl_order().to_string(),
                    normalizer_order: g.normalizer.len(),
                    centralizer_order: g.centralizer.len(),
                    order: g.order(),
                    reflection_count: g.reflection_count(),
                },
            )?;
            Ok(0)
        }
        Command::Batch { dir, out: out_dir, trace } => batch(&dir, out_dir.as_deref(), trace, out, env),
    }
}

fn batch(
    dir: &Path,
    out_dir: Option<&Path>,
    trace: bool,
    out: &mut dyn Write,
    env: &dyn Fn(&str) -> Option<String>,
) -> Result<i32, CliError> {
    let io = |e: std::io::Error, p: &Path| CliError::Io { path: p.display().to_string(), message: e.to_string() };
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| io(e, dir))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    if let Some(o) = out_dir {
        std::fs::create_dir_all(o).map_err(|e| io(e, o))?;
    }
    // The environment closure is not Sync; resolve overrides once up front.
    let env_snapshot: Vec<(String, Option<String>)> =
        crate::budget::ENV_VARS.iter().map(|n| (n.to_string(), env(n))).collect();
    let lookup = |name: &str| env_snapshot.iter().find(|(n, _)| n == name).and_then(|(_, v)| v.clone());
    let results: Vec<(PathBuf, Result<Report, CliError>)> = files
        .par_iter()
        .map(|p| (p.clone(), analyze_path(p, trace, &lookup)))
        .collect();
    let mut code = 0;
    for (path, result) in results {
        let name = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
        match result {
            Ok(r) => {
                let lw = r.little_weyl.order.map_or_else(|| r.little_weyl.status.clone(), |o| format!("|W_V|={o}"));
                writeln!(out, "{name}: ok rk_s={} c_s={} mf={} {lw}", r.rk_s, r.c_s, r.mf)
                    .map_err(|e| io(e, Path::new("<stdout>")))?;
                if let Some(o) = out_dir {
                    let target = o.join(&name);
                    std::fs::write(&target, r.to_json()).map_err(|e| io(e, &target))?;
                }
            }
            Err(e) => {
                writeln!(out, "{name}: error[{}] exit {}: {e}", e.code(), e.exit_code())
                    .map_err(|e| io(e, Path::new("<stdout>")))?;
                code = code.max(e.exit_code());
            }
        }
    }
    Ok(code)
}

fn load(path: &Path, env: &dyn Fn(&str) -> Option<String>) -> Result<(ParsedSpec, Budget), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    let parsed = parse_spec(&text)?;
    let budget = resolve_budget(&parsed.file.options, env)?;
    Ok((parsed, budget))
}

/// Parses, validates and analyzes one spec file.
pub fn analyze_path(path: &Path, trace: bool, env: &dyn Fn(&str) -> Option<String>) -> Result<Report, CliError> {
    let (parsed, budget) = load(path, env)?;
    let analysis = run_analysis(&parsed, &budget)?;
    Ok(Report::new(&parsed.file, dim(&parsed)?, &analysis, trace))
}

fn run_analysis(parsed: &ParsedSpec, budget: &Budget) -> Result<AnalysisReport, CliError> {
    let mut opts = AnalyzeOptions { budget: budget.clone(), ..AnalyzeOptions::default() };
    if let Some(d) = parsed.file.options.hilbert_degree {
        opts.hilbert_degree = d;
    }
    analyze(&parsed.spec, &opts).map_err(reduce_failure)
}

fn dim(parsed: &ParsedSpec) -> Result<u64, CliError> {
    parsed.spec.dim().map_err(rep_failure)
}

fn root_failure(e: RootDataError) -> CliError {
    match e {
        RootDataError::GroupTooLarge { .. } => CliError::Budget(e.to_string()),
        other => CliError::Defect(other.to_string()),
    }
}

fn rep_failure(e: RepError) -> CliError {
    match e {
        RepError::BudgetExceeded(_) | RepError::DimensionCap { .. } => CliError::Budget(e.to_string()),
        RepError::RootData(r) => root_failure(r),
        other => CliError::Invalid { code: rep_error_code(&other), field: "rep".to_string(), message: other.to_string() },
    }
}

fn reduce_failure(e: ReduceError) -> CliError {
    match e {
        ReduceError::Rep(r) => rep_failure(r),
        ReduceError::RootData(r) => root_failure(r),
        other => CliError::Defect(other.to_string()),
    }
}

fn emit(out: &mut dyn Write, report: &Report, text: bool) -> Result<(), CliError> {
    let s = if text { report.to_text() } else { report.to_json() };
    out.write_all(s.as_bytes()).map_err(|e| CliError::Io { path: "<stdout>".to_string(), message: e.to_string() })
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let mut s = serde_json::to_string_pretty(value).expect("outputs serialize");
    s.push('\n');
    out.write_all(s.as_bytes()).map_err(|e| CliError::Io { path: "<stdout>".to_string(), message: e.to_string() })
}
