//! Command-line definitions and dispatch.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain or formula error (also
//! IO failures), 3 verification violation. Data goes to stdout (or the
//! requested file) and is byte-identical across runs; wall times and
//! progress notes go to stderr.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use cpulse_core::{classify_rep, time_cost, Error, PulseSequence};

use crate::angles::parse_angle;
use crate::config::Config;
use crate::document::{Provenance, SequenceDocument};
use crate::names::{self, PulseName};
use crate::parallel::{fidelity_map_threaded, no_go_scan_threaded};
use crate::table;
use crate::verification::{run_all, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Parser)]
#[command(
    name = "cpulse",
    version,
    about = "Build, concatenate and verify composite pulse sequences for single-qubit gates"
)]
pub struct Cli {
    /// Optional TOML config file (tolerances, grid defaults, thread count).
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Worker threads for grid evaluation (0 = one per core). Overrides the
    /// config file and the CPULSE_THREADS environment variable.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
}

#[derive(Subcommand)]
pub enum Command {
    /// Build a named sequence and write it as a JSON document.
    Build {
        /// Pulse name, e.g. corpse, bb1, cinsk, reduced-skinsc.
        name: String,
        /// Target rotation angle (radians; accepts pi tokens like 3pi/2).
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        /// Target axis angle.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        phi: String,
        /// Wing-pulse axis for trivial-triple (defaults to --phi).
        #[arg(long, allow_hyphen_values = true)]
        phi_prime: Option<String>,
        /// Interpret numeric angles as degrees.
        #[arg(long)]
        degrees: bool,
        /// Output path; stdout when omitted.
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Tabulate pulse counts N and operation time cost T.
    Timecost {
        /// Pulse names; use --all for the full table.
        names: Vec<String>,
        /// Tabulate every pulse with a table row.
        #[arg(long)]
        all: bool,
        /// Target angle; may be given several times for several columns.
        #[arg(long = "theta", required = true, allow_hyphen_values = true)]
        thetas: Vec<String>,
        /// Interpret numeric angles as degrees.
        #[arg(long)]
        degrees: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Report robustness axes and the residual-error-preserving class.
    Classify {
        /// Pulse name; alternatively read a sequence with --input.
        name: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        phi: String,
        #[arg(long, allow_hyphen_values = true)]
        phi_prime: Option<String>,
        #[arg(long)]
        degrees: bool,
        /// Classify a previously written sequence document.
        #[arg(long, value_name = "PATH", conflicts_with = "name")]
        input: Option<PathBuf>,
    },
    /// Sample gate fidelity on an (eps, f) grid and emit CSV.
    Fidmap {
        name: String,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        phi: String,
        #[arg(long, allow_hyphen_values = true)]
        phi_prime: Option<String>,
        #[arg(long)]
        degrees: bool,
        /// Grid bounds; config-file fidmap values are the defaults.
        #[arg(long, allow_hyphen_values = true)]
        eps_min: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        eps_max: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        f_min: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        f_max: Option<f64>,
        /// Samples per axis (>= 2).
        #[arg(long)]
        resolution: Option<usize>,
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Exhaustively verify that robust two-pulse sequences are trivial.
    Nogo {
        /// Grid resolution per parameter (>= 8); the scan covers
        /// resolution^4 pulse pairs.
        #[arg(long)]
        resolution: Option<usize>,
        #[arg(long)]
        robust_tol: Option<f64>,
        #[arg(long)]
        trivial_tol: Option<f64>,
    },
    /// Run the full verification suite (one line per criterion).
    Verify {
        /// Override the no-go scan resolution.
        #[arg(long)]
        resolution: Option<usize>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_DOMAIN,
            message: message.into(),
        }
    }

    fn violation(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_VIOLATION,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownName(_) => Failure::usage(e.to_string()),
            _ => Failure::domain(e.to_string()),
        }
    }
}

/// Parse arguments and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    let mut config = Config::load(cli.config.as_deref()).map_err(Failure::usage)?;
    if let Some(threads) = cli.threads {
        config.threads = threads;
    }
    match cli.command {
        Command::Build {
            name,
            theta,
            phi,
            phi_prime,
            degrees,
            output,
        } => cmd_build(&name, &theta, &phi, phi_prime.as_deref(), degrees, output),
        Command::Timecost {
            names,
            all,
            thetas,
            degrees,
            format,
        } => cmd_timecost(&names, all, &thetas, degrees, format),
        Command::Classify {
            name,
            theta,
            phi,
            phi_prime,
            degrees,
            input,
        } => cmd_classify(
            name.as_deref(),
            theta.as_deref(),
            &phi,
            phi_prime.as_deref(),
            degrees,
            input,
        ),
        Command::Fidmap {
            name,
            theta,
            phi,
            phi_prime,
            degrees,
            eps_min,
            eps_max,
            f_min,
            f_max,
            resolution,
            output,
        } => {
            let d = &config.fidmap;
            cmd_fidmap(
                &name,
                &theta,
                &phi,
                phi_prime.as_deref(),
                degrees,
                (eps_min.unwrap_or(d.eps_min), eps_max.unwrap_or(d.eps_max)),
                (f_min.unwrap_or(d.f_min), f_max.unwrap_or(d.f_max)),
                resolution.unwrap_or(d.resolution),
                output,
                config.threads,
            )
        }
        Command::Nogo {
            resolution,
            robust_tol,
            trivial_tol,
        } => cmd_nogo(
            resolution.unwrap_or(config.nogo.resolution),
            robust_tol.unwrap_or(config.tolerances.robust),
            trivial_tol.unwrap_or(config.tolerances.trivial),
            config.threads,
        ),
        Command::Verify { resolution } => cmd_verify(VerifyOptions {
            nogo_resolution: resolution.unwrap_or(config.nogo.resolution),
            robust_tol: config.tolerances.robust,
            trivial_tol: config.tolerances.trivial,
            threads: config.threads,
        }),
    }
}

fn parse_pulse(
    name: &str,
    theta: Option<&str>,
    phi: &str,
    phi_prime: Option<&str>,
    degrees: bool,
) -> Result<(PulseName, PulseSequence, Provenance), Failure> {
    let pulse: PulseName = name
        .parse()
        .map_err(|e: Error| Failure::usage(e.to_string()))?;
    let theta_text =
        theta.ok_or_else(|| Failure::usage(format!("--theta is required to build {name}")))?;
    let theta = parse_angle(theta_text, degrees).map_err(Failure::usage)?;
    let phi = parse_angle(phi, degrees).map_err(Failure::usage)?;
    let phi_prime = phi_prime
        .map(|t| parse_angle(t, degrees))
        .transpose()
        .map_err(Failure::usage)?;
    let seq = names::build(pulse, theta, phi, phi_prime)?;
    let provenance = Provenance {
        builder: pulse.cli_name().to_string(),
        theta_rad: theta,
        phi_rad: phi,
        phi_prime_rad: phi_prime,
    };
    Ok((pulse, seq, provenance))
}

fn write_output(path: Option<&PathBuf>, payload: &str, note: &str) -> Result<(), Failure> {
    match path {
        Some(p) => {
            fs::write(p, payload)
                .map_err(|e| Failure::domain(format!("cannot write {}: {e}", p.display())))?;
            eprintln!("{note} -> {}", p.display());
            Ok(())
        }
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn cmd_build(
    name: &str,
    theta: &str,
    phi: &str,
    phi_prime: Option<&str>,
    degrees: bool,
    output: Option<PathBuf>,
) -> Result<(), Failure> {
    let (_, seq, provenance) = parse_pulse(name, Some(theta), phi, phi_prime, degrees)?;
    let doc = SequenceDocument::from_sequence(&seq, provenance);
    write_output(
        output.as_ref(),
        &doc.to_json(),
        &format!("wrote {} ({} pulses)", seq.label(), seq.len()),
    )
}

fn cmd_timecost(
    names: &[String],
    all: bool,
    thetas: &[String],
    degrees: bool,
    format: TableFormat,
) -> Result<(), Failure> {
    let pulses: Vec<PulseName> = if all {
        PulseName::TABLE_ORDER.to_vec()
    } else if names.is_empty() {
        return Err(Failure::usage(
            "give one or more pulse names, or --all for the full table",
        ));
    } else {
        names
            .iter()
            .map(|n| n.parse().map_err(|e: Error| Failure::usage(e.to_string())))
            .collect::<Result<_, _>>()?
    };
    let mut angles = Vec::with_capacity(thetas.len());
    for t in thetas {
        angles.push(parse_angle(t, degrees).map_err(Failure::usage)?);
    }
    let rows = table::time_cost_rows(&pulses, &angles)?;
    let mut out = Vec::new();
    match format {
        TableFormat::Text => table::write_time_cost_text(&mut out, &rows, thetas),
        TableFormat::Csv => table::write_time_cost_csv(&mut out, &rows, thetas),
    }
    .map_err(|e| Failure::domain(format!("cannot write table: {e}")))?;
    print!("{}", String::from_utf8_lossy(&out));
    Ok(())
}

fn cmd_classify(
    name: Option<&str>,
    theta: Option<&str>,
    phi: &str,
    phi_prime: Option<&str>,
    degrees: bool,
    input: Option<PathBuf>,
) -> Result<(), Failure> {
    let seq = match (name, input) {
        (Some(name), None) => parse_pulse(name, theta, phi, phi_prime, degrees)?.1,
        (None, Some(path)) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| Failure::domain(format!("cannot read {}: {e}", path.display())))?;
            let doc = SequenceDocument::from_json(&text)
                .map_err(|e| Failure::domain(format!("cannot parse {}: {e}", path.display())))?;
            doc.to_sequence()?
        }
        _ => {
            return Err(Failure::usage(
                "give either a pulse name or --input PATH, not both",
            ))
        }
    };
    let class = classify_rep(&seq);
    let target = seq.target();
    println!("sequence: {}", seq.label());
    println!(
        "target: theta={} rad, phi={} rad",
        target.theta(),
        target.phi()
    );
    println!("pulses: {}", seq.len());
    match time_cost(&seq) {
        Ok(t) => println!("time cost: {t:.12}"),
        Err(e) => println!("time cost: undefined ({e})"),
    }
    let rep = match class.rep {
        Some(axis) => axis.to_string(),
        None => "none".to_string(),
    };
    println!("REP: {rep}");
    let robust = match (class.robust_ple, class.robust_ore) {
        (true, true) => "PLE, ORE".to_string(),
        (true, false) => "PLE".to_string(),
        (false, true) => "ORE".to_string(),
        (false, false) => "none".to_string(),
    };
    println!("robust: {robust}");
    println!("e_eps max-norm: {:.6e}", class.e_eps_norm);
    println!("e_f max-norm: {:.6e}", class.e_f_norm);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_fidmap(
    name: &str,
    theta: &str,
    phi: &str,
    phi_prime: Option<&str>,
    degrees: bool,
    eps_range: (f64, f64),
    f_range: (f64, f64),
    resolution: usize,
    output: Option<PathBuf>,
    threads: usize,
) -> Result<(), Failure> {
    if resolution < 2 {
        return Err(Failure::usage(format!(
            "--resolution must be at least 2, got {resolution}"
        )));
    }
    let (_, seq, _) = parse_pulse(name, Some(theta), phi, phi_prime, degrees)?;
    let map = fidelity_map_threaded(&seq, eps_range, f_range, resolution, threads)?;
    let mut out = Vec::new();
    table::write_fidelity_csv(&mut out, &map)
        .map_err(|e| Failure::domain(format!("cannot format grid: {e}")))?;
    let payload = String::from_utf8_lossy(&out).into_owned();
    write_output(
        output.as_ref(),
        &payload,
        &format!(
            "wrote {0}x{0} fidelity grid for {1} (min F = {2:.6})",
            resolution,
            seq.label(),
            map.min_value()
        ),
    )
}

fn cmd_nogo(
    resolution: usize,
    robust_tol: f64,
    trivial_tol: f64,
    threads: usize,
) -> Result<(), Failure> {
    if resolution < 8 {
        return Err(Failure::usage(format!(
            "--resolution must be at least 8, got {resolution}"
        )));
    }
    let started = Instant::now();
    let report = no_go_scan_threaded(resolution, robust_tol, trivial_tol, threads)?;
    let elapsed = started.elapsed().as_secs_f64();
    println!("resolution: {resolution}");
    println!("pairs scanned: {}", report.pairs_scanned);
    println!("PLE-robust pairs: {}", report.ple_robust);
    println!("ORE-robust pairs: {}", report.ore_robust);
    println!("violations: {}", report.violations);
    eprintln!("wall time: {elapsed:.3} s");
    if report.violations > 0 {
        return Err(Failure::violation(format!(
            "{} robust-yet-nontrivial pairs found",
            report.violations
        )));
    }
    Ok(())
}

fn cmd_verify(opts: VerifyOptions) -> Result<(), Failure> {
    let reports = run_all(&opts);
    let total = reports.len();
    let mut failed = 0;
    for r in &reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!(
            "[{}/{}] {} {}: {}",
            r.index, total, status, r.name, r.detail
        );
        eprintln!("criterion {} took {:.3} s", r.index, r.seconds);
        if !r.passed {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("RESULT: PASS ({total}/{total} criteria)");
        Ok(())
    } else {
        println!("RESULT: FAIL ({}/{total} criteria passed)", total - failed);
        Err(Failure::violation(format!(
            "{failed} verification criteria failed"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_subcommand_is_usage_error() {
        assert_eq!(run(["cpulse", "frobnicate"]), EXIT_USAGE);
    }

    #[test]
    fn help_exits_cleanly() {
        assert_eq!(run(["cpulse", "--help"]), EXIT_OK);
    }
}
