//! Interchange formats: density-matrix JSON, certificate / boundary /
//! decomposition / validation JSON, and the grid, segment, and sweep CSV
//! tables.
//!
//! Every floating-point number is written with 17 significant digits
//! (`{:.16e}`), which round-trips `f64` exactly and keeps all emitted text
//! byte-deterministic.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cmatrix::CMat;
use crate::error::{Error, Result};
use crate::families::{ConePoint3D, CurvePoint2D};
use crate::fock::ValidationReport;
use crate::geometry::{BoundaryResult, SegmentClassification};
use crate::positivity::PositivityCertificate;

/// Formats one float with 17 significant digits.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// serde_json formatter that renders every float with 17 significant
/// digits instead of the default shortest round-trip form.
struct Json17Formatter;

impl serde_json::ser::Formatter for Json17Formatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

fn to_json_17<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Json17Formatter);
    value
        .serialize(&mut ser)
        .expect("serialization of plain data cannot fail");
    out.push(b'\n');
    String::from_utf8(out).expect("JSON output is UTF-8")
}

/// Density-matrix interchange object: `dim`, plus row-major `re` and `im`
/// parts with entry `(m, n)` holding `<m|rho|n>`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateJson {
    pub dim: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl StateJson {
    pub fn from_matrix(m: &CMat) -> Self {
        let dim = m.dim();
        let re = (0..dim)
            .map(|i| (0..dim).map(|j| m[(i, j)].re).collect())
            .collect();
        let im = (0..dim)
            .map(|i| (0..dim).map(|j| m[(i, j)].im).collect())
            .collect();
        StateJson { dim, re, im }
    }

    pub fn to_matrix(&self) -> Result<CMat> {
        if self.dim == 0 {
            return Err(Error::Domain("state dimension must be positive".into()));
        }
        let check_shape = |name: &str, part: &Vec<Vec<f64>>| -> Result<()> {
            if part.len() != self.dim || part.iter().any(|row| row.len() != self.dim) {
                return Err(Error::Domain(format!(
                    "field '{name}' must be a {dim}x{dim} array",
                    dim = self.dim
                )));
            }
            Ok(())
        };
        check_shape("re", &self.re)?;
        check_shape("im", &self.im)?;
        let mut m = CMat::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] = Complex64::new(self.re[i][j], self.im[i][j]);
            }
        }
        Ok(m)
    }
}

/// Parses density-matrix JSON text. Any failure here is a format problem,
/// distinct from the physical validity of the parsed matrix.
pub fn parse_state_matrix(text: &str) -> Result<CMat> {
    let state: StateJson = serde_json::from_str(text)
        .map_err(|e| Error::Domain(format!("density-matrix JSON parse error: {e}")))?;
    state.to_matrix()
}

/// Renders a matrix as density-matrix JSON.
pub fn state_json(m: &CMat) -> String {
    to_json_17(&StateJson::from_matrix(m))
}

#[derive(Serialize)]
struct ValidationJson {
    valid: bool,
    hermitian: bool,
    unit_trace: bool,
    psd: bool,
    min_eigenvalue: f64,
    trace_deviation: f64,
}

/// Renders a validation report as JSON.
pub fn validation_json(report: &ValidationReport) -> String {
    to_json_17(&ValidationJson {
        valid: report.is_valid_state(),
        hermitian: report.hermitian,
        unit_trace: report.unit_trace,
        psd: report.psd,
        min_eigenvalue: report.min_eigenvalue,
        trace_deviation: report.trace_deviation,
    })
}

#[derive(Serialize)]
struct CertificateJson {
    verdict: &'static str,
    min_value: f64,
    argmin: [f64; 2],
    search_radius: f64,
    grid: u64,
    refinements: u64,
}

/// Renders a positivity certificate as JSON.
pub fn certificate_json(cert: &PositivityCertificate) -> String {
    to_json_17(&CertificateJson {
        verdict: cert.verdict.as_str(),
        min_value: cert.min_value,
        argmin: [cert.argmin.x, cert.argmin.xi],
        search_radius: cert.search_radius,
        grid: cert.grid_resolution as u64,
        refinements: cert.refinement_steps as u64,
    })
}

#[derive(Serialize)]
struct BoundaryJson {
    k0: f64,
    t0: f64,
    witness: [f64; 2],
    rho_plus: StateJson,
}

/// Renders a boundary construction result as JSON.
pub fn boundary_json(result: &BoundaryResult) -> String {
    to_json_17(&BoundaryJson {
        k0: result.k0,
        t0: result.t0,
        witness: [result.witness.x, result.witness.xi],
        rho_plus: StateJson::from_matrix(result.rho_plus.entries()),
    })
}

#[derive(Serialize)]
struct DecompositionJson {
    s: f64,
    t0: f64,
    rho_plus: StateJson,
    reconstruction_residual: f64,
}

/// Renders an affine generator decomposition (`(1+s) rho_plus - s rho_0`)
/// as JSON.
pub fn decomposition_json(rho_plus: &CMat, s: f64, t0: f64, residual: f64) -> String {
    to_json_17(&DecompositionJson {
        s,
        t0,
        rho_plus: StateJson::from_matrix(rho_plus),
        reconstruction_residual: residual,
    })
}

/// Grid CSV: header `x,xi,w`, one row per node.
pub fn grid_csv(rows: &[(f64, f64, f64)]) -> String {
    let mut out = String::from("x,xi,w\n");
    for &(x, xi, w) in rows {
        out.push_str(&format_f64(x));
        out.push(',');
        out.push_str(&format_f64(xi));
        out.push(',');
        out.push_str(&format_f64(w));
        out.push('\n');
    }
    out
}

/// Segment CSV: header `t,label,crossing_t`; the crossing column repeats
/// the single crossing parameter on every row.
pub fn segment_csv(seg: &SegmentClassification) -> String {
    let mut out = String::from("t,label,crossing_t\n");
    for (&t, label) in seg.t_values.iter().zip(seg.labels.iter()) {
        out.push_str(&format_f64(t));
        out.push(',');
        out.push_str(label.as_str());
        out.push(',');
        out.push_str(&format_f64(seg.crossing_t));
        out.push('\n');
    }
    out
}

/// Two-level sweep CSV: header `p,s,t0,p_plus,s_plus`.
pub fn sweep2d_csv(rows: &[CurvePoint2D]) -> String {
    let mut out = String::from("p,s,t0,p_plus,s_plus\n");
    for row in rows {
        for (i, v) in [row.p, row.s, row.t0, row.p_plus, row.s_plus]
            .into_iter()
            .enumerate()
        {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format_f64(v));
        }
        out.push('\n');
    }
    out
}

/// Cone sweep CSV: header `p,q,t0`.
pub fn sweep3d_csv(rows: &[ConePoint3D]) -> String {
    let mut out = String::from("p,q,t0\n");
    for row in rows {
        for (i, v) in [row.p, row.q, row.t0].into_iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format_f64(v));
        }
        out.push('\n');
    }
    out
}
