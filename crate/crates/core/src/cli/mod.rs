//! The `casimir` command-line front end.
//!
//! Exit codes: 0 success, 1 audit mismatch, 2 validation, 3 convergence or
//! root loss, 4 I/O.

mod records;
mod sweep;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::energy::{self, coefficient_audit, KMax, Method, NumericConfig};
use crate::regsum::QuadratureConfig;
use crate::specfun::BesselOrder;
use crate::spectrum::{asymptotic_omega_for_order, find_roots, relative_residual, Geometry};
use crate::Error;

pub use records::{EnergyRecord, SpectrumRow, SCHEMA_VERSION, SWEEP_HEADER};
pub use sweep::SweepSpec;

pub const EXIT_OK: u8 = 0;
pub const EXIT_AUDIT: u8 = 1;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_CONVERGENCE: u8 = 3;
pub const EXIT_IO: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "casimir",
    version,
    about = "Scalar Casimir energy between concentric D-spheres"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Energy of one geometry by one or more routes.
    Energy(EnergyArgs),
    /// Energies over a list of eta values at sqrt(ab) = 1, as CSV or JSON.
    Sweep(SweepArgs),
    /// Exact and evenly spaced eigenfrequencies for one angular mode.
    Spectrum(SpectrumArgs),
    /// Closed-form leading coefficients against the plate formula.
    Audit(AuditArgs),
}

#[derive(Debug, Args)]
struct Tolerances {
    /// Relative tolerance of the Bose-integral quadrature.
    #[arg(long, default_value = "1e-13")]
    rel_tol: f64,
    /// Absolute tolerance of the quadrature.
    #[arg(long, default_value = "1e-15")]
    abs_tol: f64,
    /// Bose-factor truncation T (>= 30).
    #[arg(long, default_value_t = QuadratureConfig::DEFAULT_TRUNCATION)]
    truncation: f64,
    /// Relative tolerance on the truncated k-sum.
    #[arg(long, default_value = "1e-14")]
    sum_tol: f64,
    /// Number of angular modes, or `auto`.
    #[arg(long, default_value = "auto", value_parser = parse_k_max)]
    k_max: KMax,
}

impl Tolerances {
    fn config(&self) -> Result<NumericConfig, Error> {
        Ok(NumericConfig {
            quadrature: QuadratureConfig::new(self.rel_tol, self.abs_tol, self.truncation)?,
            k_max: self.k_max,
            sum_tol: self.sum_tol,
            k_cap: NumericConfig::DEFAULT_K_CAP,
        })
    }
}

fn parse_k_max(s: &str) -> Result<KMax, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(KMax::Auto);
    }
    match s.parse::<u32>() {
        Ok(n) if n >= 1 => Ok(KMax::Fixed(n)),
        _ => Err(format!("expected a positive integer or 'auto', got '{s}'")),
    }
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
struct EnergyArgs {
    #[arg(long)]
    dim: u32,
    #[arg(long, requires = "outer", conflicts_with = "eta")]
    inner: Option<f64>,
    #[arg(long, requires = "inner")]
    outer: Option<f64>,
    /// Use sqrt(ab) = 1 and b - a = eta instead of explicit radii.
    #[arg(long)]
    eta: Option<f64>,
    /// Comma-separated routes: closed-form, numeric, plate-limit.
    #[arg(long, value_delimiter = ',', default_value = "numeric", value_parser = parse_method)]
    method: Vec<Method>,
    #[command(flatten)]
    tolerances: Tolerances,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long)]
    dim: u32,
    /// Comma-separated eta values, strictly monotone, each in (0, 1).
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    eta: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "numeric", value_parser = parse_method)]
    method: Vec<Method>,
    #[command(flatten)]
    tolerances: Tolerances,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON array instead of CSV.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    #[arg(long)]
    dim: u32,
    #[arg(long)]
    inner: f64,
    #[arg(long)]
    outer: f64,
    /// Angular index; the Bessel order is k + (D-2)/2.
    #[arg(long, default_value_t = 0)]
    k: u32,
    #[arg(long, default_value_t = 5)]
    n_max: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct AuditArgs {
    #[arg(long)]
    json: bool,
    /// Also list the correction terms, flagging those no derivation reproduces.
    #[arg(long)]
    include_corrections: bool,
}

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(String),
    Audit,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Domain(_)
        | Error::InvalidInput(_)
        | Error::UnsupportedDimension(_)
        | Error::OutOfRegime(_) => EXIT_VALIDATION,
        Error::RootLoss(_) | Error::Convergence { .. } | Error::NonConvergentTail(_) => {
            EXIT_CONVERGENCE
        }
    }
}

/// Parse `args` (program name first) and run, writing to the given streams.
/// Returns the process exit code.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_VALIDATION
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Energy(a) => cmd_energy(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, out),
        Command::Spectrum(a) => cmd_spectrum(&a, out),
        Command::Audit(a) => cmd_audit(&a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::Convergence {
                partial: Some(p), ..
            } = e
            {
                let _ = writeln!(err, "partial result: {p}");
            }
            exit_code(&e)
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_IO
        }
        Err(Failure::Audit) => {
            let _ = writeln!(err, "error: leading coefficient mismatch above tolerance");
            EXIT_AUDIT
        }
    }
}

/// Entry point for the binary.
pub fn run<I: IntoIterator<Item = OsString>>(args: I) -> ExitCode {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = execute(args, &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code)
}

fn check_methods(dim: u32, methods: &[Method]) -> Result<(), Error> {
    if methods.is_empty() {
        return Err(Error::InvalidInput(
            "at least one --method is required".into(),
        ));
    }
    if methods.contains(&Method::ClosedForm) && !(4..=11).contains(&dim) {
        return Err(Error::UnsupportedDimension(dim));
    }
    Ok(())
}

fn cmd_energy(args: &EnergyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    check_methods(args.dim, &args.method)?;
    let geom = match (args.inner, args.outer, args.eta) {
        (Some(a), Some(b), None) => Geometry::new(args.dim, a, b)?,
        (None, None, Some(eta)) => Geometry::from_eta(args.dim, eta)?,
        _ => {
            return Err(
                Error::InvalidInput("give either --inner and --outer, or --eta".into()).into(),
            )
        }
    };
    let config = args.tolerances.config()?;
    let mut records = Vec::with_capacity(args.method.len());
    for &m in &args.method {
        let result = energy::energy(&geom, m, &config)?;
        records.push(EnergyRecord::new(&geom, &result)?);
    }
    if args.json {
        serde_json::to_writer_pretty(&mut *out, &records)?;
        writeln!(out)?;
    } else {
        for (i, r) in records.iter().enumerate() {
            if i > 0 {
                writeln!(out)?;
            }
            r.write_text(out)?;
        }
    }
    Ok(())
}

fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let spec = SweepSpec::new(args.dim, args.eta.clone(), args.method.clone())?;
    let config = args.tolerances.config()?;
    let records = spec.run(&config)?;
    match &args.out {
        Some(path) => {
            let mut file = File::create(path)
                .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
            records::write_records(&records, args.json, &mut file)?;
            file.flush()?;
        }
        None => records::write_records(&records, args.json, out)?,
    }
    Ok(())
}

fn cmd_spectrum(args: &SpectrumArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let geom = Geometry::new(args.dim, args.inner, args.outer)?;
    let nu = BesselOrder::for_mode(args.k, args.dim)?;
    let roots = find_roots(&geom, nu, args.n_max)?;
    let rows = roots
        .iter()
        .enumerate()
        .map(|(i, &exact)| {
            let n = i as u32 + 1;
            let asymptotic = asymptotic_omega_for_order(&geom, nu, n);
            Ok(SpectrumRow {
                n,
                nu: nu.value(),
                exact,
                asymptotic,
                rel_diff: (asymptotic - exact).abs() / exact,
                residual: relative_residual(&geom, nu, exact)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    if args.json {
        serde_json::to_writer_pretty(&mut *out, &rows)?;
        writeln!(out)?;
    } else {
        let mut w = csv::Writer::from_writer(out);
        for r in &rows {
            w.serialize(r)?;
        }
        w.flush()?;
    }
    Ok(())
}

fn cmd_audit(args: &AuditArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let mut report = coefficient_audit();
    if !args.include_corrections {
        for row in &mut report.rows {
            row.corrections.clear();
        }
    }
    if args.json {
        serde_json::to_writer_pretty(&mut *out, &report.rows)?;
        writeln!(out)?;
    } else {
        writeln!(
            out,
            "{:>3}  {:>24}  {:>24}  {:>10}  result",
            "D", "closed_form", "plate_limit", "rel_diff"
        )?;
        for row in &report.rows {
            writeln!(
                out,
                "{:>3}  {:>24e}  {:>24e}  {:>10.3e}  {}",
                row.dim,
                row.closed_form,
                row.plate_limit,
                row.rel_diff,
                if row.pass { "pass" } else { "FAIL" }
            )?;
        }
        if args.include_corrections {
            writeln!(out)?;
            writeln!(
                out,
                "{:>3}  {:>5}  {:>8}  {:>22}  {:>12}  status",
                "D", "eta^", "zeta", "coefficient", "derived"
            )?;
            for row in &report.rows {
                for c in &row.corrections {
                    let derived = c.derived.map_or("-".to_string(), |x| format!("{x:.6e}"));
                    let status = match c.status {
                        energy::CorrectionStatus::Verified => "verified",
                        energy::CorrectionStatus::Unverified => "unverified",
                    };
                    writeln!(
                        out,
                        "{:>3}  {:>5}  {:>8}  {:>22}  {:>12}  {status}",
                        row.dim,
                        c.term.eta_power,
                        format!("z({})", c.term.zeta_arg),
                        c.coefficient,
                        derived
                    )?;
                }
            }
        }
    }
    if report.all_pass {
        Ok(())
    } else {
        Err(Failure::Audit)
    }
}
