//! `uqsl`: verification runs and Fock-module dumps from the command line.
//!
//! Exit codes: 0 success, 1 a check failed, 2 a check was inconclusive,
//! 64 usage or configuration error, 65 energies violate the supertrace
//! constraint, 70 internal error.

mod config;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use uqsl::fock::{brute_force_dimension, build_fock, FockDump, HamiltonianSpec, LadderReport, SupercommutationReport};
use uqsl::presentations::AlgebraSpec;
use uqsl::suites::{run_extra, run_suite, SuiteContext, SuiteReport};
use uqsl::{Error, Status};

use config::{
    budget, default_suites, needs_deformation, parse_check_flag, parse_epsilons, parse_suites, require, CheckSpec,
    Epsilons, FileConfig, Format,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Errors that end a run before a report is produced.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Constraint(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 64,
            Failure::Constraint(_) => 65,
            Failure::Internal(_) => 70,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(s) | Failure::Constraint(s) | Failure::Internal(s) => s,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedSpec | Error::Parse(_) | Error::AlphabetMismatch(_) | Error::IndexOutOfRange { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Internal(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "uqsl", version, about = "Rewriting-based verification for quantum superalgebras of type A")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a report.
    Verify(VerifyArgs),
    /// Build a truncated Fock module, check it and dump it.
    Fock(FockArgs),
}

#[derive(Args)]
struct Common {
    /// JSON config file; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    n: Option<u8>,
    #[arg(long)]
    m: Option<u8>,
    /// Output file, written atomically; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Work with the deformed algebra (default true).
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    deformed: Option<bool>,
    /// Suite to run; repeatable.
    #[arg(long = "suite")]
    suites: Vec<String>,
    #[arg(long)]
    max_steps: Option<usize>,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    max_new_rules: Option<usize>,
    /// Extra target `LABEL=EXPR` over Chevalley and CAG symbols; repeatable.
    #[arg(long = "check")]
    checks: Vec<String>,
}

#[derive(Args)]
struct FockArgs {
    #[command(flatten)]
    common: Common,
    /// Order p of the supersymmetric power.
    #[arg(long)]
    order_p: Option<u32>,
    /// Largest total occupation kept (default p + 1).
    #[arg(long, allow_hyphen_values = true)]
    cutoff: Option<i64>,
    /// Comma-separated energies, e.g. "1,1" or "1/2,-1".
    #[arg(long, allow_hyphen_values = true)]
    epsilons: Option<String>,
    /// Also write the spectrum as CSV.
    #[arg(long)]
    spectrum_csv: Option<PathBuf>,
}

#[derive(Serialize)]
struct VerifyConfig {
    n: u8,
    m: u8,
    deformed: bool,
    suites: Vec<String>,
    max_steps: usize,
    max_degree: usize,
    max_new_rules: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    checks: Vec<CheckSpec>,
}

#[derive(Serialize, Default)]
struct Summary {
    total: usize,
    proved_zero: usize,
    rep_consistent: usize,
    inconclusive: usize,
    failed: usize,
}

#[derive(Serialize)]
struct VerifyReport {
    schema_version: u32,
    engine_version: &'static str,
    command: &'static str,
    config: VerifyConfig,
    suites: Vec<SuiteReport>,
    summary: Summary,
    exit_code: u8,
}

#[derive(Serialize)]
struct FockConfig {
    n: u8,
    m: u8,
    order_p: u32,
    cutoff: i64,
    epsilons: Vec<String>,
}

#[derive(Serialize)]
struct FockReport {
    schema_version: u32,
    engine_version: &'static str,
    command: &'static str,
    config: FockConfig,
    dimension: usize,
    expected_dimension: usize,
    dimension_matches: bool,
    integral_entries: bool,
    ladder: LadderReport,
    supercommutation: SupercommutationReport,
    /// Whether `Σ ε_i H_i` equals the oscillator form of the Hamiltonian.
    hamiltonian_forms_agree: bool,
    module: FockDump,
    exit_code: u8,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 64 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Fock(a) => fock(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("uqsl: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn verify(a: VerifyArgs) -> Result<u8, Failure> {
    let file = FileConfig::load(a.common.config.as_deref())?;
    let n = require(a.common.n.or(file.n), "n")?;
    let m = require(a.common.m.or(file.m), "m")?;
    let deformed = a.deformed.or(file.deformed).unwrap_or(true);
    let budget = budget(
        a.max_steps.or(file.max_steps),
        a.max_degree.or(file.max_degree),
        a.max_new_rules.or(file.max_new_rules),
    )?;
    let suites = if !a.suites.is_empty() {
        parse_suites(&a.suites)?
    } else if let Some(s) = &file.suites {
        parse_suites(s)?
    } else {
        default_suites(deformed)
    };
    let checks: Vec<CheckSpec> = if !a.checks.is_empty() {
        a.checks.iter().map(|s| parse_check_flag(s)).collect()
    } else {
        file.checks.clone().unwrap_or_default()
    };
    if !deformed {
        if let Some(s) = suites.iter().find(|s| needs_deformation(**s)) {
            return Err(Failure::Usage(format!("suite {s} needs the deformed algebra")));
        }
        if !checks.is_empty() {
            return Err(Failure::Usage("extra checks need the deformed algebra".into()));
        }
    }
    AlgebraSpec::new(n, m, deformed)?;
    let out = a.common.out.or(file.out);
    let format = a.common.format.or(file.format).unwrap_or_default();

    let mut ctx = SuiteContext::new(n, m, budget)?;
    ctx.deformed_reps = deformed;
    let mut reports = Vec::new();
    for id in &suites {
        reports.push(run_suite(&ctx, *id)?);
    }
    if !checks.is_empty() {
        let labelled: Vec<(String, String)> = checks
            .iter()
            .enumerate()
            .map(|(k, c)| (c.label.clone().unwrap_or_else(|| format!("check{}", k + 1)), c.expr.clone()))
            .collect();
        reports.push(run_extra(&ctx, &labelled)?);
    }

    let mut summary = Summary::default();
    for c in reports.iter().flat_map(|r| &r.checks) {
        summary.total += 1;
        match c.status {
            Status::ProvedZero => summary.proved_zero += 1,
            Status::RepConsistent => summary.rep_consistent += 1,
            Status::Inconclusive => summary.inconclusive += 1,
            Status::Failed => summary.failed += 1,
        }
    }
    let exit_code = if summary.failed > 0 {
        1
    } else if summary.inconclusive > 0 {
        2
    } else {
        0
    };
    let report = VerifyReport {
        schema_version: SCHEMA_VERSION,
        engine_version: uqsl::VERSION,
        command: "verify",
        config: VerifyConfig {
            n,
            m,
            deformed,
            suites: suites.iter().map(|s| s.to_string()).collect(),
            max_steps: budget.max_steps,
            max_degree: budget.max_degree,
            max_new_rules: budget.max_new_rules,
            checks,
        },
        suites: reports,
        summary,
        exit_code,
    };
    let body = match format {
        Format::Json => to_json(&report)?,
        Format::Text => verify_text(&report),
    };
    emit(out.as_deref(), &body)?;
    Ok(exit_code)
}

fn verify_text(r: &VerifyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "uqsl {} verify n={} m={} deformed={}", r.engine_version, r.config.n, r.config.m, r.config.deformed);
    for rep in &r.suites {
        let _ = writeln!(s, "suite {} ({} checks, {:.1}% proved)", rep.suite, rep.checks.len(), 100.0 * rep.proved_fraction());
        if let Some(sys) = &rep.system {
            let _ = writeln!(
                s,
                "  system {}: {} rules, {} unresolved overlaps{}",
                sys.name,
                sys.rules,
                sys.unresolved,
                if sys.truncated { ", truncated" } else { "" }
            );
        }
        if let Some(c) = &rep.cartan_matrix {
            for row in c {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                let _ = writeln!(s, "  {}", cells.join(""));
            }
        }
        for c in &rep.checks {
            let _ = writeln!(s, "  {:<24} {}", c.evidence, c.label);
        }
    }
    let sm = &r.summary;
    let _ = writeln!(
        s,
        "total {}: {} proved, {} rep-consistent, {} inconclusive, {} failed",
        sm.total, sm.proved_zero, sm.rep_consistent, sm.inconclusive, sm.failed
    );
    s
}

fn fock(a: FockArgs) -> Result<u8, Failure> {
    let file = FileConfig::load(a.common.config.as_deref())?;
    let n = require(a.common.n.or(file.n), "n")?;
    let m = require(a.common.m.or(file.m), "m")?;
    let spec = AlgebraSpec::new(n, m, false)?;
    let p = a.order_p.or(file.order_p).unwrap_or(1);
    if p == 0 {
        return Err(Failure::Usage("order_p must be positive".into()));
    }
    let cutoff = a.cutoff.or(file.cutoff).unwrap_or(p as i64 + 1);
    if cutoff < 0 {
        return Err(Failure::Usage(format!("cutoff must be nonnegative, got {cutoff}")));
    }
    let epsilons = match (&a.epsilons, &file.epsilons) {
        (Some(s), _) => parse_epsilons(&Epsilons::Text(s.clone()))?,
        (None, Some(e)) => parse_epsilons(e)?,
        (None, None) => vec![uqsl::Rat::from_integer(0.into()); spec.rank()],
    };
    if epsilons.len() != spec.rank() {
        return Err(Failure::Usage(format!("expected {} energies, got {}", spec.rank(), epsilons.len())));
    }
    let h = HamiltonianSpec { epsilons };
    h.validate(&spec).map_err(|e| Failure::Constraint(e.to_string()))?;
    let out = a.common.out.or(file.out);
    let format = a.common.format.or(file.format).unwrap_or_default();

    let module = build_fock(&spec, p, cutoff)?;
    let expected = brute_force_dimension(&spec, p, cutoff as u32);
    let ladder = module.ladder_check(&h)?;
    let supercommutation = module.supercommutation_check()?;
    let integral = module.entries_are_integral()?;
    let forms_agree = module.hamiltonian(&h)? == module.hamiltonian_cartan_form(&h)?;
    let dimension_matches = module.dim() == expected;
    let exit_code = if dimension_matches && ladder.holds && supercommutation.holds && integral { 0 } else { 1 };
    if let Some(path) = &a.spectrum_csv {
        write_atomic(path, &module.spectrum_csv(&h)?)?;
    }
    let report = FockReport {
        schema_version: SCHEMA_VERSION,
        engine_version: uqsl::VERSION,
        command: "fock",
        config: FockConfig {
            n,
            m,
            order_p: p,
            cutoff,
            epsilons: h.epsilons.iter().map(|e| e.to_string()).collect(),
        },
        dimension: module.dim(),
        expected_dimension: expected,
        dimension_matches,
        integral_entries: integral,
        ladder,
        supercommutation,
        hamiltonian_forms_agree: forms_agree,
        module: module.to_json(Some(&h))?,
        exit_code,
    };
    let body = match format {
        Format::Json => to_json(&report)?,
        Format::Text => fock_text(&report),
    };
    emit(out.as_deref(), &body)?;
    Ok(exit_code)
}

fn fock_text(r: &FockReport) -> String {
    let mut s = String::new();
    let c = &r.config;
    let _ = writeln!(s, "uqsl {} fock n={} m={} p={} cutoff={}", r.engine_version, c.n, c.m, c.order_p, c.cutoff);
    let _ = writeln!(s, "dimension {} (expected {})", r.dimension, r.expected_dimension);
    let spectrum = r.module.spectrum.as_deref().unwrap_or(&[]);
    for (k, state) in r.module.basis.iter().enumerate() {
        let occ: Vec<String> = state.iter().map(u32::to_string).collect();
        let _ = writeln!(s, "  |{}>  E = {}", occ.join(","), spectrum.get(k).map(String::as_str).unwrap_or("?"));
    }
    let _ = writeln!(s, "ladder relations: {} on {} interior states", ok(r.ladder.holds), r.ladder.interior_states);
    let _ = writeln!(s, "creators supercommute: {}", ok(r.supercommutation.holds));
    let _ = writeln!(s, "integral entries: {}", ok(r.integral_entries));
    let _ = writeln!(s, "Hamiltonian forms agree: {}", r.hamiltonian_forms_agree);
    s
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Failure::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn emit(out: Option<&Path>, body: &str) -> Result<(), Failure> {
    match out {
        Some(path) => write_atomic(path, body),
        None => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| Failure::Internal(format!("cannot write to stdout: {e}"))),
    }
}

/// Writes to a sibling temporary file, then renames it over `path`.
fn write_atomic(path: &Path, body: &str) -> Result<(), Failure> {
    let name = path
        .file_name()
        .ok_or_else(|| Failure::Usage(format!("not a file path: {}", path.display())))?;
    let tmp = path.with_file_name(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    let io = |e: std::io::Error| Failure::Internal(format!("cannot write {}: {e}", path.display()));
    let mut f = fs::File::create(&tmp).map_err(io)?;
    f.write_all(body.as_bytes()).map_err(io)?;
    f.sync_all().map_err(io)?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        io(e)
    })
}
