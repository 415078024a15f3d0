//! Command-line front end for `lfvop-core`.
//!
//! Exit codes: 0 classified, 1 internal failure (including a failed
//! `--recheck`), 2 input error, 3 invalid instance (empty feasible set or a
//! denominator that is not positive on it).

pub mod document;
pub mod report;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use lfvop_core::rational::int;
use lfvop_core::{
    classify, find_interior_certificate, find_weak_certificate, selftest, sweep, validate_problem,
    AxisRange, Error, GridSpec, PointOutcome, Problem, Query, Rational, Refinement,
    ValidationReport,
};

use document::{parse_problem, parse_vector};
use report::{
    fraction, fractions, recheck_certificate, recheck_check_report, to_json, CertifyReport,
    CheckReport, InvalidInstanceReport, RecheckReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

pub const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Parser)]
#[command(
    name = "lfvop",
    version,
    about = "Approximate efficiency checks for linear fractional vector optimization"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct QueryArgs {
    /// Problem document (JSON).
    pub problem: PathBuf,
    /// Candidate point, comma separated, e.g. `0,1/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
    /// Tolerance vector, comma separated, one entry per objective.
    #[arg(long, allow_hyphen_values = true)]
    pub epsilon: String,
    /// Re-verify every emitted certificate and witness from the report text.
    #[arg(long)]
    pub recheck: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Weak,
    Interior,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a candidate point.
    Check(QueryArgs),
    /// Search for a single multiplier certificate.
    Certify {
        #[command(flatten)]
        query: QueryArgs,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Classify every feasible point of a grid and write CSV.
    Sweep {
        problem: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: String,
        /// `lo..hi`, once per axis.
        #[arg(long = "box", allow_hyphen_values = true, required = true)]
        boxes: Vec<String>,
        /// Intervals per axis; one value applies to every axis.
        #[arg(long, required = true)]
        steps: Vec<u32>,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the randomized consistency suites.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

/// What a command prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
            code,
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::EmptyFeasibleSet => EXIT_INVALID,
        Error::MalformedLp(_) | Error::Inconsistent(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

fn core_failure(e: &Error) -> Outcome {
    Outcome::fail(exit_code(e), format!("{}: {e}", e.kind()))
}

fn load_problem(path: &Path) -> Result<Problem, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::fail(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))?;
    parse_problem(&text).map_err(|e| Outcome::fail(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn vector_arg(name: &str, text: &str) -> Result<Vec<Rational>, Outcome> {
    parse_vector(text).map_err(|e| Outcome::fail(EXIT_INPUT, format!("--{name}: {e}")))
}

fn length_arg(name: &str, expected: usize, found: usize) -> Result<(), Outcome> {
    if expected == found {
        Ok(())
    } else {
        Err(Outcome::fail(
            EXIT_INPUT,
            format!("DimensionMismatch: --{name} has {found} entries, expected {expected}"),
        ))
    }
}

/// Validates the instance; an invalid one ends the command with exit 3 and a
/// report naming the defect.
fn validate(command: &'static str, problem: &Problem) -> Result<ValidationReport, Outcome> {
    let validation = validate_problem(problem).map_err(|e| core_failure(&e))?;
    if validation.is_valid() {
        return Ok(validation);
    }
    let report = InvalidInstanceReport {
        command,
        validation: (&validation).into(),
    };
    let message = match &validation {
        ValidationReport::EmptyFeasibleSet => "invalid instance: feasible set is empty".to_string(),
        ValidationReport::StandingConditionViolated { index, .. } => {
            format!(
                "invalid instance: denominator of objective {} is not positive on the feasible set",
                index + 1
            )
        }
        ValidationReport::Valid { .. } => unreachable!(),
    };
    Err(Outcome {
        stdout: to_json(&report),
        stderr: format!("error: {message}\n"),
        code: EXIT_INVALID,
    })
}

fn prepare(
    command: &'static str,
    args: &QueryArgs,
) -> Result<(Problem, Query, ValidationReport), Outcome> {
    let problem = load_problem(&args.problem)?;
    let point = vector_arg("point", &args.point)?;
    let epsilon = vector_arg("epsilon", &args.epsilon)?;
    length_arg("point", problem.dim(), point.len())?;
    length_arg("epsilon", problem.num_objectives(), epsilon.len())?;
    let validation = validate(command, &problem)?;
    let query = Query::new(point, epsilon);
    problem.check_query(&query).map_err(|e| core_failure(&e))?;
    Ok((problem, query, validation))
}

fn finish_with_recheck(stdout: String, recheck: Option<&RecheckReport>) -> Outcome {
    match recheck {
        Some(r) if !r.passed => {
            let failed: Vec<&str> = r
                .items
                .iter()
                .filter(|i| !i.passed)
                .map(|i| i.artifact)
                .collect();
            Outcome {
                stdout,
                stderr: format!("error: recheck failed for {}\n", failed.join(", ")),
                code: EXIT_INTERNAL,
            }
        }
        _ => Outcome::ok(stdout),
    }
}

pub fn cmd_check(args: &QueryArgs) -> Outcome {
    let (problem, query, validation) = match prepare("check", args) {
        Ok(v) => v,
        Err(out) => return out,
    };
    let classification = match classify(&problem, &query, Refinement::Oracle) {
        Ok(c) => c,
        Err(e) => return core_failure(&e),
    };
    let mut report = match CheckReport::new(&problem, &query, &validation, &classification) {
        Ok(r) => r,
        Err(e) => return core_failure(&e),
    };
    if args.recheck {
        report.recheck = Some(recheck_check_report(&problem, &query, &report));
    }
    finish_with_recheck(to_json(&report), report.recheck.as_ref())
}

pub fn cmd_certify(args: &QueryArgs, mode: Mode) -> Outcome {
    let (problem, query, validation) = match prepare("certify", args) {
        Ok(v) => v,
        Err(out) => return out,
    };
    let (mode_name, artifact, found) = match mode {
        Mode::Weak => (
            "weak",
            "weak_certificate",
            find_weak_certificate(&problem, &query),
        ),
        Mode::Interior => (
            "interior",
            "interior_certificate",
            find_interior_certificate(&problem, &query),
        ),
    };
    let certificate = match found {
        Ok(c) => c,
        Err(e) => return core_failure(&e),
    };
    let mut report = CertifyReport {
        command: "certify",
        mode: mode_name,
        point: fractions(&query.x_bar),
        epsilon: fractions(&query.epsilon),
        validation: (&validation).into(),
        outcome: if certificate.is_some() {
            "Found"
        } else {
            "NoCertificate"
        },
        certificate: certificate.as_ref().map(Into::into),
        recheck: None,
    };
    if args.recheck {
        let items: Vec<_> = report
            .certificate
            .iter()
            .map(|c| recheck_certificate(&problem, &query, artifact, c))
            .collect();
        report.recheck = Some(RecheckReport {
            passed: items.iter().all(|i| i.passed),
            items,
        });
    }
    finish_with_recheck(to_json(&report), report.recheck.as_ref())
}

fn parse_box(text: &str) -> Result<(Rational, Rational), String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("{text:?}: expected lo..hi"))?;
    let parse =
        |s: &str| lfvop_core::parse_rational(s.trim()).map_err(|e| format!("{text:?}: {e}"));
    Ok((parse(lo)?, parse(hi)?))
}

pub fn grid_from_args(boxes: &[String], steps: &[u32]) -> Result<GridSpec, String> {
    if steps.len() != 1 && steps.len() != boxes.len() {
        return Err(format!(
            "--steps given {} times; expected once or once per --box ({})",
            steps.len(),
            boxes.len()
        ));
    }
    let axes = boxes
        .iter()
        .enumerate()
        .map(|(k, b)| {
            let (lo, hi) = parse_box(b)?;
            let s = if steps.len() == 1 { steps[0] } else { steps[k] };
            Ok(AxisRange::new(lo, hi, s))
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(GridSpec::new(axes))
}

/// CSV text for a sweep. Columns: `x_1..x_n, status, verdict, certificate,
/// lambda_1..lambda_m, witness_1..witness_n`. `lambda` is the interior
/// certificate when one exists, else the weak one.
pub fn sweep_csv(problem: &Problem, rows: &[lfvop_core::SweepRow]) -> String {
    let n = problem.dim();
    let m = problem.num_objectives();
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = (1..=n).map(|j| format!("x_{j}")).collect();
    header.extend(["status", "verdict", "certificate"].map(String::from));
    header.extend((1..=m).map(|i| format!("lambda_{i}")));
    header.extend((1..=n).map(|j| format!("witness_{j}")));
    writer.write_record(&header).expect("in-memory write");

    for row in rows {
        let mut record = fractions(&row.point);
        let blank = |k: usize| vec![String::new(); k];
        match &row.outcome {
            PointOutcome::Classified(c) => {
                record.push("ok".into());
                record.push(c.membership.as_str().into());
                match c
                    .interior_certificate
                    .as_ref()
                    .or(c.weak_certificate.as_ref())
                {
                    Some(cert) => {
                        record.push(report::CertificateReport::from(cert).kind.into());
                        record.extend(cert.lambda.iter().map(fraction));
                    }
                    None => {
                        record.push(String::new());
                        record.extend(blank(m));
                    }
                }
                match &c.witness {
                    Some(w) => record.extend(w.y.iter().map(fraction)),
                    None => record.extend(blank(n)),
                }
            }
            PointOutcome::Skipped => {
                record.push("outside_feasible_set".into());
                record.extend(blank(2 + m + n));
            }
            PointOutcome::Failed(e) => {
                record.push(format!("error:{}", e.kind()));
                record.extend(blank(2 + m + n));
            }
        }
        writer.write_record(&record).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("utf-8")
}

pub fn cmd_sweep(
    problem: &Path,
    epsilon: &str,
    boxes: &[String],
    steps: &[u32],
    out: Option<&Path>,
) -> Outcome {
    let problem = match load_problem(problem) {
        Ok(p) => p,
        Err(out) => return out,
    };
    let epsilon = match vector_arg("epsilon", epsilon) {
        Ok(e) => e,
        Err(out) => return out,
    };
    if let Err(out) = length_arg("epsilon", problem.num_objectives(), epsilon.len()) {
        return out;
    }
    if let Err(out) = length_arg("box", problem.dim(), boxes.len()) {
        return out;
    }
    if let Some(i) = epsilon.iter().position(|e| e < &int(0)) {
        return core_failure(&Error::NegativeEpsilon { index: i });
    }
    let grid = match grid_from_args(boxes, steps) {
        Ok(g) => g,
        Err(e) => return Outcome::fail(EXIT_INPUT, e),
    };
    if let Err(out) = validate("sweep", &problem) {
        return out;
    }
    let rows = match sweep(&problem, &epsilon, &grid) {
        Ok(r) => r,
        Err(e) => return core_failure(&e),
    };
    let text = sweep_csv(&problem, &rows);
    match out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::fail(EXIT_INPUT, format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome::ok(text),
    }
}

pub fn cmd_selftest(seed: u64, count: usize) -> Outcome {
    let summary = selftest::run(seed, count);
    let mut stdout = format!("selftest seed={seed} count={count}\n");
    for suite in &summary.suites {
        stdout.push_str(&format!(
            "{}: {} passed, {} failed\n",
            suite.name, suite.passed, suite.failed
        ));
        if let Some(first) = &suite.first_failure {
            stdout.push_str(&format!("  first failure: {first}\n"));
        }
    }
    let mut stderr = String::new();
    if count == 0 {
        stderr.push_str("warning: 0 cases requested; every suite passes vacuously\n");
    }
    let code = if summary.all_passed() {
        stdout.push_str("all suites passed\n");
        EXIT_OK
    } else {
        stdout.push_str("FAILED\n");
        EXIT_INTERNAL
    };
    Outcome {
        stdout,
        stderr,
        code,
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Certify { query, mode } => cmd_certify(query, *mode),
        Command::Sweep {
            problem,
            epsilon,
            boxes,
            steps,
            out,
        } => cmd_sweep(problem, epsilon, boxes, steps, out.as_deref()),
        Command::Selftest { seed, count } => cmd_selftest(*seed, *count),
    }
}
