//! `wigner` — command-line front end for Wigner-function positivity
//! analysis on Fock-truncated quantum states.
//!
//! Subcommands map one-to-one onto the library operations: state
//! validation, Wigner grids, positivity certificates, the boundary map,
//! segment classification, family sweeps, and the affine generator
//! decomposition. All numeric output uses 17 significant digits, so the
//! printed values round-trip exactly to the computed `f64`s and identical
//! inputs produce byte-identical outputs regardless of thread count.
//!
//! Exit codes: `0` on success (for `positivity`, a non-negative verdict),
//! `1` when the input is a well-formed state that fails the command's
//! requirement (invalid state, negative verdict, wrong precondition), and
//! `2` for unreadable or malformed inputs and bad arguments.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{CliError, CmdResult};

/// Parsed invocation: one subcommand plus the shared output redirection.
#[derive(Parser)]
#[command(
    name = "wigner",
    version,
    about = "Wigner functions, positivity certificates, and the geometry of Wigner-positive states"
)]
struct Cli {
    /// Print every built-in default as JSON and exit.
    #[arg(long)]
    show_config: bool,

    /// Write the payload to this file instead of stdout.
    #[arg(long, short = 'o', value_name = "PATH", global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a density-matrix JSON file against the state invariants.
    ///
    /// Prints a validation report; exits 0 iff the file holds a valid
    /// density matrix (Hermitian, unit trace, positive semi-definite).
    #[command(name = "validate")]
    Validate {
        /// Density-matrix JSON file.
        state: PathBuf,
    },

    /// Evaluate the Wigner function on a square phase-space grid.
    ///
    /// Emits CSV with header `x,xi,w`, row-major in x then xi, over
    /// `[xmin, xmax]` in both coordinates with n points per axis.
    #[command(name = "wigner-grid")]
    WignerGrid {
        /// Density-matrix JSON file.
        state: PathBuf,
        /// Lower end of both coordinate ranges.
        #[arg(long, default_value_t = -4.0, allow_hyphen_values = true, value_parser = parse_finite)]
        xmin: f64,
        /// Upper end of both coordinate ranges.
        #[arg(long, default_value_t = 4.0, allow_hyphen_values = true, value_parser = parse_finite)]
        xmax: f64,
        /// Points per axis.
        #[arg(long, default_value_t = 101, value_parser = parse_axis_points)]
        n: usize,
    },

    /// Certify the sign of a state's Wigner function.
    ///
    /// Prints the positivity certificate; exits 0 for the strictly
    /// positive and nodal verdicts and 1 for the negative verdict.
    #[command(name = "positivity")]
    Positivity {
        /// Density-matrix JSON file.
        state: PathBuf,
        /// Scan resolution per axis (odd, 101..=4001).
        #[arg(long, default_value_t = 801, value_parser = parse_grid)]
        grid: usize,
        /// Override the certified search radius (default: derived bound).
        #[arg(long, value_parser = parse_radius)]
        radius: Option<f64>,
        /// Relative half-width of the nodal band around zero.
        #[arg(long, default_value_t = wigner_core::tol::EPS_ZERO, value_parser = parse_eps)]
        eps_zero: f64,
    },

    /// Map a state to the positive boundary along the segment from a
    /// reference state.
    ///
    /// Prints k0, t0 = 1/(1-k0), the minimizing phase-space witness, and
    /// the boundary state rho_plus. Wigner-positive inputs are fixed
    /// points (t0 = 1). The reference defaults to the vacuum and must be
    /// strictly Wigner-positive.
    #[command(name = "boundary")]
    Boundary {
        /// Density-matrix JSON file for the state to map.
        rho1: PathBuf,
        /// Density-matrix JSON file for the reference state.
        #[arg(long)]
        reference: Option<PathBuf>,
    },

    /// Classify every state on a segment between two states.
    ///
    /// Certifies `(1-t) rho0 + t rho1` at steps+1 uniform t values and
    /// emits CSV with header `t,label,crossing_t`. The start state must
    /// be strictly Wigner-positive.
    #[command(name = "segment")]
    Segment {
        /// Density-matrix JSON file for the start (t = 0).
        rho0: PathBuf,
        /// Density-matrix JSON file for the end (t = 1).
        rho1: PathBuf,
        /// Number of uniform steps (samples = steps + 1).
        #[arg(long, default_value_t = 200, value_parser = parse_steps)]
        steps: usize,
    },

    /// Sweep the two-level pure family and emit its boundary curve.
    ///
    /// For uniform p in [0, 1], writes CSV rows p,s,t0,p_plus,s_plus for
    /// the family spanned by the vacuum and level n.
    #[command(name = "sweep2d")]
    Sweep2d {
        /// Excited level of the family.
        #[arg(long, value_parser = parse_level)]
        n: usize,
        /// Number of p samples (rows).
        #[arg(long, default_value_t = 100, value_parser = parse_samples)]
        samples: usize,
    },

    /// Sweep a three-level cone section and emit crossing parameters.
    ///
    /// For uniform p in [0, 1] with q = 1 - p, writes CSV rows p,q,t0
    /// for the mixture (1-p-q)|0><0| + q u u* + p w w* over the cone
    /// spanned by a,b,c,d.
    #[command(name = "sweep3d")]
    Sweep3d {
        /// Cone parameters a,b,c,d (b and d nonzero).
        #[arg(long, value_parser = parse_cone)]
        cone: (f64, f64, f64, f64),
        /// Number of p samples (rows).
        #[arg(long, default_value_t = 100, value_parser = parse_samples)]
        samples: usize,
    },

    /// Write a Wigner-negative state as (1+s) rho_plus - s rho_0.
    ///
    /// rho_plus sits on the positive boundary and s = 1/t0 - 1 > 0.
    /// Wigner-positive input is rejected with exit code 1.
    #[command(name = "decompose")]
    Decompose {
        /// Density-matrix JSON file.
        state: PathBuf,
    },
}

fn parse_finite(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .parse()
        .map_err(|_| format!("expected a number, got {s:?}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("value must be finite, got {s}"))
    }
}

fn parse_axis_points(s: &str) -> Result<usize, String> {
    let v: usize = s
        .parse()
        .map_err(|_| format!("expected an integer, got {s:?}"))?;
    if (2..=4001).contains(&v) {
        Ok(v)
    } else {
        Err(format!("points per axis must be in [2, 4001], got {v}"))
    }
}

fn parse_grid(s: &str) -> Result<usize, String> {
    let v: usize = s
        .parse()
        .map_err(|_| format!("expected an integer, got {s:?}"))?;
    if !(101..=4001).contains(&v) {
        Err(format!("grid must be in [101, 4001], got {v}"))
    } else if v % 2 == 0 {
        Err(format!("grid must be odd, got {v}"))
    } else {
        Ok(v)
    }
}

fn parse_radius(s: &str) -> Result<f64, String> {
    let v = parse_finite(s)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(format!("radius must be positive, got {s}"))
    }
}

fn parse_eps(s: &str) -> Result<f64, String> {
    let v = parse_finite(s)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(format!("eps-zero must be positive, got {s}"))
    }
}

fn parse_steps(s: &str) -> Result<usize, String> {
    let v: usize = s
        .parse()
        .map_err(|_| format!("expected an integer, got {s:?}"))?;
    if (1..=9999).contains(&v) {
        Ok(v)
    } else {
        Err(format!("steps must be in [1, 9999], got {v}"))
    }
}

fn parse_samples(s: &str) -> Result<usize, String> {
    let v: usize = s
        .parse()
        .map_err(|_| format!("expected an integer, got {s:?}"))?;
    if (2..=10000).contains(&v) {
        Ok(v)
    } else {
        Err(format!("samples must be in [2, 10000], got {v}"))
    }
}

fn parse_level(s: &str) -> Result<usize, String> {
    let v: usize = s
        .parse()
        .map_err(|_| format!("expected an integer, got {s:?}"))?;
    if (1..=32).contains(&v) {
        Ok(v)
    } else {
        Err(format!("level must be in [1, 32], got {v}"))
    }
}

fn parse_cone(s: &str) -> Result<(f64, f64, f64, f64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!(
            "cone needs four comma-separated numbers a,b,c,d, got {s:?}"
        ));
    }
    let mut vals = [0.0f64; 4];
    for (v, p) in vals.iter_mut().zip(&parts) {
        *v = parse_finite(p.trim())?;
    }
    if vals[1] == 0.0 || vals[3] == 0.0 {
        return Err("cone parameters b and d must be nonzero".into());
    }
    Ok((vals[0], vals[1], vals[2], vals[3]))
}

/// Caps the global thread pool from `WIGNER_THREADS` (0 or unset = auto).
fn configure_threads() -> Result<(), String> {
    let raw = match std::env::var("WIGNER_THREADS") {
        Err(std::env::VarError::NotPresent) => return Ok(()),
        Err(std::env::VarError::NotUnicode(_)) => {
            return Err("WIGNER_THREADS is not valid unicode".into());
        }
        Ok(v) => v,
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| format!("WIGNER_THREADS must be a non-negative integer, got {raw:?}"))?;
    if threads == 0 {
        return Ok(());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| format!("could not configure the thread pool: {e}"))
}

/// Built-in defaults, one line per knob, printed by `--show-config`.
fn config_json() -> String {
    use wigner_core::io::format_f64;
    let mut out = String::from("{");
    out.push_str("\"grid\":801");
    out.push_str(",\"radius\":\"auto\"");
    out.push_str(&format!(
        ",\"eps_zero\":{}",
        format_f64(wigner_core::tol::EPS_ZERO)
    ));
    out.push_str(&format!(",\"xmin\":{}", format_f64(-4.0)));
    out.push_str(&format!(",\"xmax\":{}", format_f64(4.0)));
    out.push_str(",\"n\":101");
    out.push_str(",\"steps\":200");
    out.push_str(",\"samples\":100");
    out.push_str(",\"threads\":\"auto (override with WIGNER_THREADS; 0 = auto)\"");
    out.push_str("}\n");
    out
}

fn emit(output: &Option<PathBuf>, payload: &str) -> Result<(), String> {
    match output {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| format!("could not write {}: {e}", path.display())),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<CmdResult, CliError> {
    match command {
        Command::Validate { state } => commands::run_validate(&state),
        Command::WignerGrid {
            state,
            xmin,
            xmax,
            n,
        } => commands::run_wigner_grid(&state, xmin, xmax, n),
        Command::Positivity {
            state,
            grid,
            radius,
            eps_zero,
        } => commands::run_positivity(&state, grid, radius, eps_zero),
        Command::Boundary { rho1, reference } => {
            commands::run_boundary(&rho1, reference.as_deref())
        }
        Command::Segment { rho0, rho1, steps } => commands::run_segment(&rho0, &rho1, steps),
        Command::Sweep2d { n, samples } => commands::run_sweep2d(n, samples),
        Command::Sweep3d { cone, samples } => commands::run_sweep3d(cone, samples),
        Command::Decompose { state } => commands::run_decompose(&state),
    }
}

fn main() -> ExitCode {
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let cli = Cli::parse();
    if cli.show_config {
        return match emit(&cli.output, &config_json()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        };
    }
    let Some(command) = cli.command else {
        eprintln!("error: a subcommand is required (see --help)");
        return ExitCode::from(2);
    };
    match run(command) {
        Ok(result) => match emit(&cli.output, &result.payload) {
            Ok(()) => ExitCode::from(result.exit),
            Err(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        },
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
