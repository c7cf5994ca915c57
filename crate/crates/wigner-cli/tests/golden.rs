//! Golden-file check for the level-4 two-level-family sweep.
//!
//! The stored CSV was produced by the brute-force oracle below — a dense
//! 3001x3001 grid scan plus finite-difference descent, sharing no code
//! with the library's certified minimizer — so the sweep command is
//! checked against an independent computation. Regenerate the fixture
//! with `cargo test -p wigner-cli --test golden -- --ignored`.

use std::path::Path;
use std::process::Command;

use rayon::prelude::*;
use wigner_core::families::{family_2d, TwoLevelFamily};
use wigner_core::io::format_f64;
use wigner_core::wigner::{wigner_polynomial, PhasePoint, WignerPolynomial};

const LEVEL: usize = 4;
const SAMPLES: usize = 21;
/// Scan disk for the oracle; safely past the negative-region bound
/// sqrt(4 (dim-1) + 3) ~ 4.36 for the dimension-5 states of the sweep.
const ORACLE_RADIUS: f64 = 8.0;

fn golden_path() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/sweep2d_n4_golden.csv")
}

/// Dense-grid global minimum of `q` over the oracle disk, polished by
/// projected steepest descent with backtracking.
fn oracle_min(q: &WignerPolynomial) -> f64 {
    const N: usize = 3001;
    let radius = ORACLE_RADIUS;
    let degree = q.degree();
    let step = 2.0 * radius / (N - 1) as f64;

    let (best, mut x, mut xi) = (0..N)
        .into_par_iter()
        .map(|row| {
            let px = -radius + row as f64 * step;
            // Collapse the x-dependence: Q(x, xi) = sum_k d_k xi^k.
            let mut collapsed = vec![0.0f64; degree + 1];
            for (k, d) in collapsed.iter_mut().enumerate() {
                let mut acc = 0.0;
                for j in (0..=degree).rev() {
                    acc = acc * px + q.coeff(j, k);
                }
                *d = acc;
            }
            let mut local = (f64::INFINITY, px, 0.0);
            for col in 0..N {
                let pxi = -radius + col as f64 * step;
                if px * px + pxi * pxi > radius * radius {
                    continue;
                }
                let mut value = 0.0;
                for k in (0..=degree).rev() {
                    value = value * pxi + collapsed[k];
                }
                if value < local.0 {
                    local = (value, px, pxi);
                }
            }
            local
        })
        .reduce(
            || (f64::INFINITY, 0.0, 0.0),
            |a, b| if a.0 <= b.0 { a } else { b },
        );

    let eval = |x: f64, xi: f64| q.eval(PhasePoint::new(x, xi));
    let mut value = best;
    for _ in 0..500 {
        let h = 1e-6 * (1.0 + x.hypot(xi));
        let gx = (eval(x + h, xi) - eval(x - h, xi)) / (2.0 * h);
        let gxi = (eval(x, xi + h) - eval(x, xi - h)) / (2.0 * h);
        let norm = gx.hypot(gxi);
        if norm < 1e-14 {
            break;
        }
        let mut t = 0.5;
        let mut advanced = false;
        for _ in 0..40 {
            let (mut nx, mut nxi) = (x - t * gx, xi - t * gxi);
            let r = nx.hypot(nxi);
            if r > radius {
                nx *= radius / r;
                nxi *= radius / r;
            }
            let nv = eval(nx, nxi);
            if nv < value {
                x = nx;
                xi = nxi;
                value = nv;
                advanced = true;
                break;
            }
            t *= 0.5;
        }
        if !advanced {
            break;
        }
    }
    value
}

/// One oracle sweep row at `p`: the crossing parameter comes from the
/// clamped minimum, the mapped coordinates from the definition of the
/// boundary map.
fn oracle_row(p: f64) -> (f64, f64, f64, f64, f64) {
    let spec = TwoLevelFamily::pure(LEVEL, p).expect("family parameters");
    let s = spec.s().re;
    let rho = family_2d(&spec).expect("family state");
    let q = wigner_polynomial(&rho);
    let k0 = oracle_min(&q).min(0.0);
    let t0 = 1.0 / (1.0 - k0);
    (p, s, t0, t0 * p, t0 * s)
}

#[test]
#[ignore = "writes the fixture; run once to regenerate"]
fn regenerate_golden_sweep2d_level4() {
    let mut out = String::from("p,s,t0,p_plus,s_plus\n");
    for i in 0..SAMPLES {
        let p = i as f64 / (SAMPLES - 1) as f64;
        let (p, s, t0, p_plus, s_plus) = oracle_row(p);
        for (idx, v) in [p, s, t0, p_plus, s_plus].into_iter().enumerate() {
            if idx > 0 {
                out.push(',');
            }
            out.push_str(&format_f64(v));
        }
        out.push('\n');
    }
    std::fs::write(golden_path(), out).expect("write golden fixture");
}

fn parse_csv(text: &str, expected_header: &str) -> Vec<Vec<f64>> {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(expected_header), "CSV header");
    lines
        .map(|line| {
            line.split(',')
                .map(|cell| cell.parse::<f64>().expect("numeric CSV cell"))
                .collect()
        })
        .collect()
}

#[test]
fn sweep2d_level4_matches_stored_golden() {
    let golden = std::fs::read_to_string(golden_path()).expect("golden fixture present");
    let expected = parse_csv(&golden, "p,s,t0,p_plus,s_plus");
    assert_eq!(expected.len(), SAMPLES);

    let output = Command::new(env!("CARGO_BIN_EXE_wigner"))
        .args([
            "sweep2d",
            "--n",
            &LEVEL.to_string(),
            "--samples",
            &SAMPLES.to_string(),
        ])
        .output()
        .expect("run sweep2d");
    assert!(output.status.success(), "sweep2d failed: {output:?}");
    let got = parse_csv(
        std::str::from_utf8(&output.stdout).expect("utf-8 CSV"),
        "p,s,t0,p_plus,s_plus",
    );
    assert_eq!(got.len(), SAMPLES, "row count");

    let mut max_dev = 0.0f64;
    for (row_got, row_want) in got.iter().zip(&expected) {
        assert_eq!(row_got.len(), 5);
        assert_eq!(row_want.len(), 5);
        for (a, b) in row_got.iter().zip(row_want) {
            max_dev = max_dev.max((a - b).abs());
        }
    }
    assert!(
        max_dev < 1e-6,
        "sweep deviates from the oracle golden file by {max_dev:.3e}"
    );
}
