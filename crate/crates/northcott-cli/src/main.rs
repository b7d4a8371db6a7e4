//! Command-line front end: point classification, constants, radii table,
//! boundary tracing, grid dumps, critical-strip thresholds and counting
//! bounds. Tabular commands emit CSV suitable for plotting.
//!
//! Exit codes: 0 decided/success, 1 parse or evaluation error, 2 verdict
//! Unknown, 3 point in a region with no supported classification.

use clap::{Parser, Subcommand};
use northcott::boundary;
use northcott::counting::{self, CountBoundInput};
use northcott::criteria::{self, CriteriaError, VerdictKind};
use northcott::critstrip;
use northcott::radii;
use northcott::specfun::Constants;
use northcott::{ComplexPoint, NumericsConfig};
use num_complex::Complex64;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "northcott",
    about = "Classify complex points for the Northcott property of Dedekind zeta values",
    long_about = None,
    version
)]
struct Cli {
    /// Significant digits for CSV output (>= 15; also via NORTHCOTT_PRECISION).
    #[arg(long, global = true)]
    precision: Option<u32>,
    /// Write the command output to a file (atomically) instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the point sigma + i*tau.
    Classify {
        /// Real part of the point.
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        /// Imaginary part of the point.
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        tau: f64,
    },
    /// Print the named constants of the classification.
    Constants,
    /// Radii table for circles around negative integer centers.
    Table {
        /// Comma-separated centers, e.g. -1,-2,-3. A bare --centers with no
        /// values emits the header only.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 0..,
              default_values_t = vec![-1i32, -2, -3, -4, -5])]
        centers: Vec<i32>,
    },
    /// Trace the certified boundary curve over [from, to].
    Boundary {
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long, default_value_t = 0.0025)]
        delta: f64,
    },
    /// Evaluate the Northcott criterion on a grid.
    Grid {
        #[arg(long, allow_hyphen_values = true)]
        sigma_lo: f64,
        #[arg(long, allow_hyphen_values = true)]
        sigma_hi: f64,
        #[arg(long, allow_hyphen_values = true)]
        tau_lo: f64,
        #[arg(long, allow_hyphen_values = true)]
        tau_hi: f64,
        #[arg(long)]
        step: f64,
    },
    /// Unconditional non-Northcott threshold B(s) inside the critical strip.
    Bs {
        /// Real part, strictly between 1/2 and 1.
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        /// Imaginary part of the point.
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        tau: f64,
    },
    /// Upper bound for the number of fields with |zeta_K*(s)| <= B.
    Count {
        /// Real part of the point (must satisfy the Northcott criterion).
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        /// Imaginary part of the point.
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        tau: f64,
        /// The value bound B.
        #[arg(long)]
        bound: f64,
        /// Field-count constant; unpublished, results scale linearly with it.
        #[arg(long, default_value_t = 1.0)]
        q: f64,
    },
}

fn csv_digits(cli_precision: Option<u32>) -> Result<usize, String> {
    let p = match cli_precision {
        Some(p) => p,
        None => match std::env::var("NORTHCOTT_PRECISION") {
            Ok(v) => v
                .parse::<u32>()
                .map_err(|_| format!("NORTHCOTT_PRECISION is not a number: {v}"))?,
            Err(_) => NumericsConfig::default().working_precision,
        },
    };
    let cfg = NumericsConfig {
        working_precision: p,
        ..NumericsConfig::default()
    };
    cfg.validate().map_err(|e| e.to_string())?;
    // doubles carry at most 17 meaningful digits
    Ok(p.min(17) as usize)
}

/// Six significant digits for human-readable output.
fn fmt6(x: f64) -> String {
    format!("{x:.5e}")
}

fn fmt_sig(x: f64, digits: usize) -> String {
    format!("{:.*e}", digits.saturating_sub(1), x)
}

fn run_classify(sigma: f64, tau: f64) -> (String, u8) {
    let point = match ComplexPoint::new(sigma, tau) {
        Ok(p) => p,
        Err(e) => return (format!("error: {e}\n"), EXIT_ERROR),
    };
    match criteria::classify(point) {
        Ok(v) => {
            let (kind, extra) = match v.kind {
                VerdictKind::NorthcottAllB => ("NorthcottAllB".to_string(), String::new()),
                VerdictKind::NonNorthcottAllB => ("NonNorthcottAllB".to_string(), String::new()),
                VerdictKind::NonNorthcottForLargeB(b) => (
                    "NonNorthcottForLargeB".to_string(),
                    format!("threshold = {}\n", fmt6(b)),
                ),
                VerdictKind::ConditionalGrhNonNorthcott {
                    unconditional_threshold,
                } => (
                    "ConditionalGRHNonNorthcott".to_string(),
                    format!(
                        "unconditional_threshold = {}\n",
                        fmt6(unconditional_threshold)
                    ),
                ),
                VerdictKind::Unknown => ("Unknown".to_string(), String::new()),
            };
            let exit = if kind == "Unknown" { EXIT_UNKNOWN } else { EXIT_OK };
            (
                format!(
                    "point = {point}\nverdict = {kind}\nmargin = {}\ntag = {}\n{extra}",
                    fmt6(v.margin),
                    v.theorem_tag
                ),
                exit,
            )
        }
        Err(CriteriaError::UnsupportedRegion(s)) => (
            format!("unsupported region: no claim is available at sigma = {s}\n"),
            EXIT_UNSUPPORTED,
        ),
        Err(e) => (format!("error: {e}\n"), EXIT_ERROR),
    }
}

fn run_constants() -> Result<String, String> {
    let c = Constants::get();
    let rho1 = boundary::fit_circle_radius(-1).map_err(|e| e.to_string())?;
    let mut out = String::new();
    out.push_str(&format!("euler_gamma = {}\n", fmt6(c.euler_gamma)));
    out.push_str(&format!("d_min = {}\n", fmt6(c.d_min)));
    out.push_str(&format!("d_max = {}\n", fmt6(c.d_max)));
    out.push_str(&format!("tau0 = {}\n", fmt6(radii::tau0())));
    out.push_str(&format!("cosh_pi_tau0 = {}\n", fmt6(radii::cosh_pi_tau0())));
    out.push_str(&format!(
        "covering_radius = {}\n",
        fmt6(radii::covering_radius())
    ));
    out.push_str(&format!("sigma1 = {}\n", fmt6(boundary::sigma1())));
    out.push_str(&format!("rho_minus_one_numerical = {}\n", fmt6(rho1)));
    out.push_str(&format!(
        "psi_check = {}\n",
        fmt6(boundary::psi_positivity_check())
    ));
    out.push_str(&format!("i_integral = {}\n", fmt6(critstrip::i_integral())));
    Ok(out)
}

fn run_table(centers: &[i32], digits: usize) -> Result<String, String> {
    let mut rows = radii::reference::rows(centers).map_err(|e| e.to_string())?;
    for row in &mut rows {
        row.numerical_radius =
            Some(boundary::fit_circle_radius(row.center).map_err(|e| e.to_string())?);
    }
    let mut out = String::from("center,numerical_radius,closed_form_radius,non_northcott_radius\n");
    for row in rows {
        let closed = row
            .closed_form_radius
            .map(|r| fmt_sig(r, digits))
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.center,
            fmt_sig(row.numerical_radius.unwrap(), digits),
            closed,
            fmt_sig(row.non_northcott_radius, digits),
        ));
    }
    Ok(out)
}

fn run_bs(sigma: f64, tau: f64) -> (String, u8) {
    match critstrip::b_threshold(Complex64::new(sigma, tau)) {
        Ok(b) => (
            format!(
                "b_threshold = {}\nmoment_accuracy <= {}\n",
                fmt6(b.value),
                fmt6(b.moment_accuracy)
            ),
            EXIT_OK,
        ),
        Err(critstrip::CritStripError::StripDomain(s)) => (
            format!("unsupported region: B(s) needs 1/2 < sigma < 1, got {s}\n"),
            EXIT_UNSUPPORTED,
        ),
        Err(e) => (format!("error: {e}\n"), EXIT_ERROR),
    }
}

fn run_count(sigma: f64, tau: f64, bound: f64, q: f64) -> (String, u8) {
    let input = CountBoundInput {
        s: Complex64::new(sigma, tau),
        b: bound,
        q,
    };
    match counting::count_bound(&input) {
        Ok(cb) => {
            let b_line = match cb.bound {
                Some(b) => format!("bound = {}\n", fmt6(b)),
                None => "bound = (exceeds double range; use log_bound)\n".to_string(),
            };
            (
                format!(
                    "log_bound = {}\n{b_line}degree_cutoff = {}\nlog_disc_cutoff = {}\n\
                     note: the bound scales linearly with Q (supplied: {}); its true value is unpublished\n",
                    fmt6(cb.log_bound),
                    fmt6(cb.degree_cutoff),
                    fmt6(cb.log_disc_cutoff),
                    q
                ),
                EXIT_OK,
            )
        }
        Err(e) => (format!("error: {e}\n"), EXIT_ERROR),
    }
}

fn write_atomic(path: &Path, content: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let dir = dir.unwrap_or_else(|| Path::new("."));
    let tmp = dir.join(format!(
        ".{}.tmp-{}",
        path.file_name()
            .map(|s| s.to_string_lossy().to_string())
            .unwrap_or_else(|| "out".into()),
        std::process::id()
    ));
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(content.as_bytes())?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // the exit-code contract wants 1 for anything unparsable
            // (help/version display stays 0)
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let digits = match csv_digits(cli.precision) {
        Ok(d) => d,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_ERROR);
        }
    };

    let (out, code) = match &cli.command {
        Command::Classify { sigma, tau } => run_classify(*sigma, *tau),
        Command::Constants => match run_constants() {
            Ok(s) => (s, EXIT_OK),
            Err(msg) => (format!("error: {msg}\n"), EXIT_ERROR),
        },
        Command::Table { centers } => match run_table(centers, digits) {
            Ok(s) => (s, EXIT_OK),
            Err(msg) => (format!("error: {msg}\n"), EXIT_ERROR),
        },
        Command::Boundary { from, to, delta } => match boundary::build_boundary(*from, *to, *delta)
        {
            Ok(curve) => (curve.to_csv(digits), EXIT_OK),
            Err(e) => (format!("error: {e}\n"), EXIT_ERROR),
        },
        Command::Grid {
            sigma_lo,
            sigma_hi,
            tau_lo,
            tau_hi,
            step,
        } => match boundary::grid_scan((*sigma_lo, *sigma_hi, *tau_lo, *tau_hi), *step) {
            Ok(points) => (boundary::grid_to_csv(&points, digits), EXIT_OK),
            Err(e) => (format!("error: {e}\n"), EXIT_ERROR),
        },
        Command::Bs { sigma, tau } => run_bs(*sigma, *tau),
        Command::Count {
            sigma,
            tau,
            bound,
            q,
        } => run_count(*sigma, *tau, *bound, *q),
    };

    if code == EXIT_OK {
        if let Some(path) = &cli.output {
            if let Err(e) = write_atomic(path, &out) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_ERROR);
            }
            return ExitCode::from(EXIT_OK);
        }
    }
    print!("{out}");
    ExitCode::from(code)
}
