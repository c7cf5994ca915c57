//! Implementations of the subcommands: file handling, library calls, and
//! the exit-code contract.

use std::fmt;
use std::path::Path;

use wigner_core::cmatrix::CMat;
use wigner_core::families::{boundary_curve_2d, cone_sweep_3d, ConeSpec3D};
use wigner_core::fock::{validate, DensityMatrix, HermitianUnitTrace};
use wigner_core::tol::Tolerances;
use wigner_core::geometry::{affine_generator_decomposition, boundary_state, classify_segment};
use wigner_core::io::{
    boundary_json, certificate_json, decomposition_json, grid_csv, parse_state_matrix,
    segment_csv, sweep2d_csv, sweep3d_csv, validation_json,
};
use wigner_core::positivity::{certify_polynomial, CertifyOptions, Verdict};
use wigner_core::wigner::{wigner_eval, wigner_polynomial, PhasePoint};
use wigner_core::Error;

/// Payload plus the process exit code it should be delivered with.
pub struct CmdResult {
    pub payload: String,
    pub exit: u8,
}

impl CmdResult {
    fn ok(payload: String) -> Self {
        CmdResult { payload, exit: 0 }
    }
}

/// A command failure carrying enough structure to pick the exit code:
/// unreadable or malformed input exits 2, a well-formed input that fails
/// the command's requirement exits 1.
#[derive(Debug)]
pub enum CliError {
    Io {
        path: std::path::PathBuf,
        source: std::io::Error,
    },
    Core(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 2,
            CliError::Core(err) => match err {
                Error::Dimension { .. }
                | Error::DimMismatch { .. }
                | Error::Domain(_)
                | Error::NotOrthonormal { .. } => 2,
                _ => 1,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, source } => {
                write!(f, "could not read {}: {source}", path.display())
            }
            CliError::Core(err) => err.fmt(f),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Core(err)
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_matrix(path: &Path) -> Result<CMat, CliError> {
    Ok(parse_state_matrix(&read_text(path)?)?)
}

fn read_density(path: &Path) -> Result<DensityMatrix, CliError> {
    let m = read_matrix(path)?;
    Ok(DensityMatrix::new(HermitianUnitTrace::new(m)?)?)
}

pub fn run_validate(path: &Path) -> Result<CmdResult, CliError> {
    let m = read_matrix(path)?;
    let report = validate(&m, &Tolerances::default())?;
    let exit = u8::from(!report.is_valid_state());
    Ok(CmdResult {
        payload: validation_json(&report),
        exit,
    })
}

pub fn run_wigner_grid(
    path: &Path,
    xmin: f64,
    xmax: f64,
    n: usize,
) -> Result<CmdResult, CliError> {
    if xmax <= xmin {
        return Err(CliError::Core(Error::Domain(format!(
            "xmax must exceed xmin, got [{xmin}, {xmax}]"
        ))));
    }
    let rho = read_density(path)?;
    let dx = (xmax - xmin) / (n - 1) as f64;
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        let x = xmin + dx * i as f64;
        for j in 0..n {
            let xi = xmin + dx * j as f64;
            let w = wigner_eval(&rho, PhasePoint::new(x, xi));
            rows.push((x, xi, w));
        }
    }
    Ok(CmdResult::ok(grid_csv(&rows)))
}

pub fn run_positivity(
    path: &Path,
    grid: usize,
    radius: Option<f64>,
    eps_zero: f64,
) -> Result<CmdResult, CliError> {
    let rho = read_density(path)?;
    let q = wigner_polynomial(&rho);
    let options = CertifyOptions {
        radius,
        grid: Some(grid),
        eps_zero,
    };
    let cert = certify_polynomial(&q, &options)?;
    let exit = u8::from(cert.verdict == Verdict::Negative);
    Ok(CmdResult {
        payload: certificate_json(&cert),
        exit,
    })
}

pub fn run_boundary(rho1: &Path, reference: Option<&Path>) -> Result<CmdResult, CliError> {
    let rho1 = read_density(rho1)?;
    let rho0 = reference.map(read_density).transpose()?;
    let result = boundary_state(&rho1, rho0.as_ref())?;
    Ok(CmdResult::ok(boundary_json(&result)))
}

pub fn run_segment(rho0: &Path, rho1: &Path, steps: usize) -> Result<CmdResult, CliError> {
    let rho0 = read_density(rho0)?;
    let rho1 = read_density(rho1)?;
    let t_grid: Vec<f64> = (0..=steps).map(|i| i as f64 / steps as f64).collect();
    let seg = classify_segment(&rho0, &rho1, &t_grid)?;
    Ok(CmdResult::ok(segment_csv(&seg)))
}

pub fn run_sweep2d(n: usize, samples: usize) -> Result<CmdResult, CliError> {
    let rows = boundary_curve_2d(n, samples)?;
    Ok(CmdResult::ok(sweep2d_csv(&rows)))
}

pub fn run_sweep3d(cone: (f64, f64, f64, f64), samples: usize) -> Result<CmdResult, CliError> {
    let (a, b, c, d) = cone;
    let cone = ConeSpec3D::new(a, b, c, d)?;
    let rows = cone_sweep_3d(&cone, samples)?;
    Ok(CmdResult::ok(sweep3d_csv(&rows)))
}

pub fn run_decompose(path: &Path) -> Result<CmdResult, CliError> {
    let rho = read_density(path)?;
    let (rho_plus, s) = affine_generator_decomposition(&rho, None)?;
    let t0 = 1.0 / (1.0 + s);
    // Reconstruction residual of (1 + s) rho_plus - s rho_0 against the
    // input, entrywise; rho_0 is the vacuum in the same truncation.
    let dim = rho_plus.dim();
    let vacuum = DensityMatrix::vacuum(dim);
    let mut residual = 0.0f64;
    for m in 0..dim {
        for n in 0..dim {
            let rebuilt = rho_plus.entry(m, n) * (1.0 + s) - vacuum.entry(m, n) * s;
            let dev = (rebuilt - rho.entry(m, n)).norm();
            residual = residual.max(dev);
        }
    }
    Ok(CmdResult::ok(decomposition_json(
        rho_plus.entries(),
        s,
        t0,
        residual,
    )))
}
