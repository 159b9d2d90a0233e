//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::fmt::Write;

use clap::{Parser, Subcommand, ValueEnum};
use schubert_core::diagram::{effective_region, essential_set, is_dominant, rank_matrix, rothe_diagram};
use schubert_core::groth::pipe_dream_grothendieck;
use schubert_core::ideal::{cross_check_with, fulton_generators};
use schubert_core::{Ambient, GrothendieckEngine, HilbertReport, OracleLimits, Permutation};

use crate::error::CliError;
use crate::json;
use crate::render;
use crate::verify::{Check, VerificationJob};

/// Overrides the oracle's monomial ceiling.
pub const MAX_MONOMIALS_ENV: &str = "SCHUBERT_MAX_MONOMIALS";

#[derive(Debug, Parser)]
#[command(name = "schubert", version, about = "Grothendieck polynomials and Hilbert invariants of matrix Schubert varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Transition,
    Pipedream,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grothendieck polynomial of a permutation.
    Groth {
        perm: Permutation,
        #[arg(long, value_enum, default_value = "transition")]
        engine: Engine,
        #[arg(long)]
        json: bool,
    },
    /// Rothe diagram, essential set, effective region and rank matrix.
    Diagram {
        perm: Permutation,
        /// Grid size; defaults to the size of the normalized permutation.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Fulton generators of the Schubert determinantal ideal.
    Ideal {
        perm: Permutation,
        /// Use only the effective-region variables.
        #[arg(long)]
        effective: bool,
        /// Full ambient size; defaults to the size of the normalized permutation.
        #[arg(long)]
        n: Option<usize>,
        /// Take minors at every box instead of only essential boxes.
        #[arg(long)]
        all_boxes: bool,
        /// Print each minor expanded as a polynomial.
        #[arg(long)]
        expand: bool,
        #[arg(long)]
        json: bool,
    },
    /// K-polynomial, Hilbert function and polynomial, postulation and regularity.
    Hilbert {
        perm: Permutation,
        #[arg(long)]
        effective: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run checks over every permutation of S_n.
    Verify {
        #[arg(long)]
        n: usize,
        /// Comma-separated checks; all when omitted.
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<Check>,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Largest degree for the oracle check.
        #[arg(long, default_value_t = 4)]
        oracle_k_max: usize,
        /// Largest effective region the oracle check visits.
        #[arg(long, default_value_t = 6)]
        oracle_max_boxes: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compare brute-force graded dimensions with the K-polynomial series.
    Oracle {
        perm: Permutation,
        #[arg(long)]
        effective: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k_max: usize,
        #[arg(long)]
        json: bool,
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
        Outcome { code: 0, stdout, stderr: String::new() }
    }
}

/// Parses `args` (program name first) and runs the subcommand.
/// Exit codes: 0 success, 1 failed check, 2 usage or input error.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn ambient_for(w: &Permutation, effective: bool, n: Option<usize>) -> Result<Ambient, CliError> {
    match (effective, n) {
        (true, Some(_)) => Err(CliError::Usage("--effective and --n cannot be combined".into())),
        (true, None) => {
            if effective_region(w).is_empty() {
                return Err(CliError::Usage(format!("the effective ambient of {w} has no variables")));
            }
            Ok(Ambient::Effective)
        }
        (false, Some(n)) => {
            let needed = w.size();
            if n < needed {
                return Err(CliError::Usage(format!("--n {n} is smaller than the permutation size {needed}")));
            }
            Ok(Ambient::Full(n))
        }
        (false, None) => Ok(Ambient::full_for(w)),
    }
}

fn oracle_limits() -> Result<OracleLimits, CliError> {
    let mut limits = OracleLimits::default();
    if let Ok(raw) = std::env::var(MAX_MONOMIALS_ENV) {
        limits.max_monomials = raw
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_MONOMIALS_ENV} must be a nonnegative integer, got {raw:?}")))?;
    }
    Ok(limits)
}

fn ambient_label(a: Ambient, n_vars: usize) -> String {
    match a {
        Ambient::Full(n) => format!("full {n}x{n} ({n_vars} variables)"),
        Ambient::Effective => format!("effective ({n_vars} variables)"),
    }
}

fn dispatch(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Groth { perm, engine, json } => {
            let w = perm.normalize();
            let (name, g) = match engine {
                Engine::Transition => ("transition", GrothendieckEngine::new().grothendieck(&w)),
                Engine::Pipedream => ("pipedream", pipe_dream_grothendieck(&w, w.size())?),
            };
            Ok(Outcome::ok(if json {
                json::to_string(&json::GrothDoc::new(&w, name, &g)) + "\n"
            } else {
                format!("{g}\n")
            }))
        }
        Command::Diagram { perm, n, json } => {
            let w = perm.normalize();
            let n = n.unwrap_or(w.size());
            let ranks = rank_matrix(&w, n)?;
            if json {
                return Ok(Outcome::ok(json::to_string(&json::DiagramDoc::new(&w, n)?) + "\n"));
            }
            let mut out = String::new();
            let _ = writeln!(out, "permutation: {w}");
            let _ = writeln!(out, "length: {}", w.coxeter_length());
            let _ = writeln!(out, "descents: {}", render::index_list(&w.descents()));
            out.push_str(&render::grid(&w, n));
            let _ = writeln!(out, "diagram: {}", render::box_list(&rothe_diagram(&w)));
            let _ = writeln!(out, "essential set: {}", render::box_list(&essential_set(&w)));
            let lam = effective_region(&w);
            let _ = writeln!(out, "effective region: {} boxes, rows {}", lam.len(), render::index_list(&lam.row_counts()));
            let _ = writeln!(out, "dominant: {}", if is_dominant(&w) { "yes" } else { "no" });
            out.push_str("rank matrix:\n");
            for row in ranks.rows() {
                let cells: Vec<String> = row.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "  {}", cells.join(" "));
            }
            Ok(Outcome::ok(out))
        }
        Command::Ideal { perm, effective, n, all_boxes, expand, json } => {
            let w = perm.normalize();
            let ambient = ambient_for(&w, effective, n)?;
            let gens = fulton_generators(&w, !all_boxes, ambient)?;
            if json {
                let doc = json::IdealDoc::new(&w, ambient, !all_boxes, &gens, expand)?;
                return Ok(Outcome::ok(json::to_string(&doc) + "\n"));
            }
            let polys = if expand { Some(gens.polynomials()?) } else { None };
            let mut out = String::new();
            let _ = writeln!(out, "permutation: {w}");
            let _ = writeln!(out, "ambient: {}", ambient_label(ambient, gens.variables.len()));
            let _ = writeln!(out, "generators: {}", gens.len());
            for (idx, m) in gens.minors.iter().enumerate() {
                let _ = write!(
                    out,
                    "  {}x{} minor at ({},{}) rank {}: rows {} cols {}",
                    m.size(),
                    m.size(),
                    m.source.0,
                    m.source.1,
                    m.rank,
                    render::index_list(&m.rows),
                    render::index_list(&m.cols)
                );
                if let Some(ps) = &polys {
                    let _ = write!(out, " = {}", render::z_poly(&ps[idx], &gens.variables));
                }
                out.push('\n');
            }
            Ok(Outcome::ok(out))
        }
        Command::Hilbert { perm, effective, n, k_max, json } => {
            let w = perm.normalize();
            let ambient = ambient_for(&w, effective, n)?;
            let report = HilbertReport::build(&w, ambient, k_max)?;
            if json {
                return Ok(Outcome::ok(json::to_string(&json::HilbertDoc::from(&report)) + "\n"));
            }
            let mut out = String::new();
            let _ = writeln!(out, "permutation: {w}");
            let _ = writeln!(out, "ambient: {}", ambient_label(ambient, report.variable_count));
            let _ = writeln!(out, "K(t) = {}", report.k_polynomial);
            let hf: Vec<String> = report.hf_table.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "HF(0..={}) = {}", report.hf_table.len() - 1, hf.join(", "));
            let _ = writeln!(out, "HP(k) = {}", report.hilbert_polynomial);
            let _ = writeln!(out, "postulation: {}", report.postulation);
            let _ = writeln!(out, "regularity: {}", report.regularity);
            let _ = writeln!(out, "hilbertian: {}", if report.hilbertian { "yes" } else { "no" });
            Ok(Outcome::ok(out))
        }
        Command::Verify { n, checks, jobs, oracle_k_max, oracle_max_boxes, json } => {
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            if jobs == Some(0) {
                return Err(CliError::Usage("--jobs must be at least 1".into()));
            }
            let mut job = if checks.is_empty() { VerificationJob::all_checks(n) } else { VerificationJob::new(n, &checks) };
            job.parallelism = jobs;
            job.oracle.k_max = oracle_k_max;
            job.oracle.max_effective_boxes = oracle_max_boxes;
            job.oracle.limits = oracle_limits()?;
            let report = job.run()?;
            let stdout = if json { json::to_string(&json::VerifyDoc::from(&report)) + "\n" } else { report.to_text() };
            Ok(Outcome { code: if report.passed() { 0 } else { 1 }, stdout, stderr: String::new() })
        }
        Command::Oracle { perm, effective, n, k_max, json } => {
            let w = perm.normalize();
            let ambient = ambient_for(&w, effective, n)?;
            let report = cross_check_with(&mut GrothendieckEngine::new(), &w, ambient, k_max, oracle_limits()?)?;
            let code = if report.passed() { 0 } else { 1 };
            if json {
                let stdout = json::to_string(&json::OracleDoc::from(&report)) + "\n";
                return Ok(Outcome { code, stdout, stderr: String::new() });
            }
            let mut out = String::new();
            let _ = writeln!(out, "permutation: {w}");
            let _ = writeln!(out, "ambient: {}", ambient_label(ambient, report.variable_count));
            let _ = writeln!(out, "k  series  essential  all-boxes");
            for row in &report.rows {
                let _ = writeln!(out, "{}  {}  {}  {}", row.k, row.expected, row.essential, row.all_boxes);
            }
            for m in &report.mismatches {
                let _ = writeln!(
                    out,
                    "mismatch at k = {} ({}): expected {}, got {}",
                    m.k,
                    json::generator_list_name(m.generators),
                    m.expected,
                    m.actual
                );
            }
            let _ = writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" });
            Ok(Outcome { code, stdout: out, stderr: String::new() })
        }
    }
}
