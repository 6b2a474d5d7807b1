//! The working subcommands: theorem verification over one or many
//! polynomials, root-modulus bounds, hull export for a single slice, and
//! root listing.
//!
//! Output discipline: stdout carries the human-readable report (all
//! numbers in 12-significant-digit form, no wall-clock anywhere), JSON
//! and CSV files carry the machine-readable one. A failed check prints a
//! one-line JSON failure summary so scripted callers never have to scrape
//! the table.

use std::env;
use std::path::{Path, PathBuf};
use std::thread;

use qgl_core::bounds::{bound_snail, bound_snm, coefficient_bound_c};
use qgl_core::random::random_polynomial;
use qgl_core::roots::roots_quaternionic;
use qgl_core::snm::{snm_slice, verify_theorem};
use qgl_core::{ConvexRegion2D, QPolynomial, RootSetH, VerificationReport, VerifyConfig};
use serde::Serialize;

use crate::io::{self, sig12, CliError};
use crate::svg::{self, Layer};

pub const CSV_HEADER: &str = "kind,slice_x,slice_y,slice_z,a,b";

fn csv_row(kind: &str, slice: [f64; 3], a: f64, b: f64) -> String {
    format!(
        "{kind},{},{},{},{},{}",
        sig12(slice[0]),
        sig12(slice[1]),
        sig12(slice[2]),
        sig12(a),
        sig12(b)
    )
}

/// Worker cap for instance fan-out: `QGL_THREADS` wins, then available
/// parallelism, never more workers than jobs.
fn worker_count(jobs: usize) -> usize {
    let hardware = thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let cap = env::var("QGL_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(hardware);
    cap.min(jobs).max(1)
}

/// Verifies each polynomial, fanning out over worker threads but always
/// returning reports in input order.
fn verify_all(
    polys: &[QPolynomial],
    config: &VerifyConfig,
) -> Result<Vec<VerificationReport>, CliError> {
    let workers = worker_count(polys.len());
    if workers <= 1 {
        return polys
            .iter()
            .map(|p| verify_theorem(p, config).map_err(CliError::from))
            .collect();
    }
    let mut slots: Vec<Option<Result<VerificationReport, qgl_core::Error>>> =
        (0..polys.len()).map(|_| None).collect();
    thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let mut done = Vec::new();
                    let mut idx = w;
                    while idx < polys.len() {
                        done.push((idx, verify_theorem(&polys[idx], config)));
                        idx += workers;
                    }
                    done
                })
            })
            .collect();
        for handle in handles {
            for (idx, report) in handle.join().expect("verification worker panicked") {
                slots[idx] = Some(report);
            }
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.expect("all indices covered").map_err(CliError::from))
        .collect()
}

pub struct VerifyOpts {
    pub poly: Option<PathBuf>,
    pub random: usize,
    pub degree: Option<usize>,
    pub scale: f64,
    pub samples: usize,
    pub tol: Option<f64>,
    pub seed: u64,
    pub json: Option<PathBuf>,
    pub csv: Option<PathBuf>,
}

/// Spreads instance indices across seeds so nearby `--seed` values do not
/// share instances.
fn instance_seed(seed: u64, k: u64) -> u64 {
    seed.wrapping_add(k.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

#[derive(Serialize)]
struct VerifyRun<'a> {
    seed: u64,
    sphere_samples: usize,
    epsilon: Option<f64>,
    all_pass: bool,
    instances: &'a [VerificationReport],
}

pub fn verify(opts: &VerifyOpts) -> Result<bool, CliError> {
    let polys: Vec<QPolynomial> = match &opts.poly {
        Some(path) => vec![io::load_polynomial(path)?],
        None => (0..opts.random.max(1))
            .map(|k| {
                let degree = opts.degree.unwrap_or(2 + k % 5);
                random_polynomial(instance_seed(opts.seed, k as u64), degree, opts.scale)
            })
            .collect(),
    };
    let config = VerifyConfig {
        epsilon: opts.tol,
        sphere_samples: opts.samples,
        seed: opts.seed,
    };
    let reports = verify_all(&polys, &config)?;

    let mut failures = Vec::new();
    for (k, report) in reports.iter().enumerate() {
        let in_region = report.checks.iter().filter(|c| c.in_snm).count();
        let verdict = if report.pass { "PASS" } else { "FAIL" };
        println!(
            "instance {k}: degree {}, epsilon {}, derivative roots {} isolated + {} spheres, \
             checks {}/{} in region — {verdict}",
            report.degree,
            sig12(report.epsilon),
            report.derivative_roots.isolated.len(),
            report.derivative_roots.spheres.len(),
            in_region,
            report.checks.len(),
        );
        for check in report.checks.iter().filter(|c| !c.in_snm) {
            failures.push(serde_json::json!({
                "instance": k,
                "kind": check.kind,
                "point": check.point,
                "slice": check.slice,
                "snm_distance": check.snm_distance,
                "epsilon": report.epsilon,
            }));
        }
    }
    let all_pass = reports.iter().all(|r| r.pass);
    println!(
        "verify: {}/{} instances pass",
        reports.iter().filter(|r| r.pass).count(),
        reports.len()
    );

    if let Some(path) = &opts.json {
        let run = VerifyRun {
            seed: opts.seed,
            sphere_samples: opts.samples,
            epsilon: opts.tol,
            all_pass,
            instances: &reports,
        };
        let mut text = serde_json::to_string(&run).expect("reports serialize");
        text.push('\n');
        io::write_file(path, &text)?;
    }
    if let Some(path) = &opts.csv {
        let mut text = String::from(CSV_HEADER);
        text.push('\n');
        for report in &reports {
            for check in &report.checks {
                text.push_str(&csv_row(
                    check.kind,
                    check.slice.components(),
                    check.chart[0],
                    check.chart[1],
                ));
                text.push('\n');
            }
        }
        io::write_file(path, &text)?;
    }
    if !all_pass {
        println!("{}", serde_json::json!({ "failures": failures }));
    }
    Ok(all_pass)
}

pub fn bounds(poly: &Path, samples: usize) -> Result<bool, CliError> {
    let p = io::load_polynomial(poly)?;
    println!("samples: {samples}");
    println!("coefficient bound: {}", sig12(coefficient_bound_c(&p)));
    println!("snail bound: {}", sig12(bound_snail(&p, samples)));
    println!("snm bound: {}", sig12(bound_snm(&p, samples)));
    Ok(true)
}

fn print_region(name: &str, region: &ConvexRegion2D) {
    println!("{name}: {}, {} vertices", region.kind_name(), region.vertices().len());
    for v in region.vertices() {
        println!("  {} {}", sig12(v[0]), sig12(v[1]));
    }
}

/// Chart coordinates of the roots of a slice polynomial, for markers.
fn chart_roots(s: &qgl_core::SlicePolynomial) -> Vec<[f64; 2]> {
    qgl_core::roots::roots_in_slice(s)
        .map(|roots| roots.iter().map(|r| [r.a, r.b]).collect())
        .unwrap_or_default()
}

pub fn hull(
    poly: &Path,
    slice: &str,
    svg_out: Option<&Path>,
    csv_out: Option<&Path>,
) -> Result<bool, CliError> {
    let p = io::load_polynomial(poly)?;
    let i = io::parse_slice(slice)?;
    let s = snm_slice(&p, i)?;
    let [x, y, z] = i.components();
    println!("slice: {} {} {}", sig12(x), sig12(y), sig12(z));
    print_region("snail", &s.snail);
    print_region("cosnail", &s.cosnail);
    print_region("snm", &s.snm);

    if let Some(path) = csv_out {
        let mut text = String::from(CSV_HEADER);
        text.push('\n');
        let comps = i.components();
        for (kind, region) in [
            ("snail_vertex", &s.snail),
            ("cosnail_vertex", &s.cosnail),
            ("snm_vertex", &s.snm),
        ] {
            for v in region.vertices() {
                text.push_str(&csv_row(kind, comps, v[0], v[1]));
                text.push('\n');
            }
        }
        io::write_file(path, &text)?;
    }
    if let Some(path) = svg_out {
        let projection = p.project(i);
        let scene = svg::render(&[
            Layer::hull("snail", &s.snail),
            Layer::hull("cosnail", &s.cosnail),
            Layer::hull("snm", &s.snm),
            Layer::markers("plane_roots", chart_roots(&projection.p_i)),
            Layer::markers("complement_roots", chart_roots(&projection.q_i)),
        ]);
        io::write_file(path, &scene)?;
    }
    Ok(true)
}

fn print_root_set(set: &RootSetH) {
    println!("isolated roots: {}", set.isolated.len());
    for r in &set.isolated {
        let [w, x, y, z] = r.components();
        println!("  {} {} {} {}", sig12(w), sig12(x), sig12(y), sig12(z));
    }
    println!("root spheres: {}", set.spheres.len());
    for &(alpha, beta) in &set.spheres {
        println!("  center {} radius {}", sig12(alpha), sig12(beta));
    }
}

pub fn roots(poly: &Path, derivative: bool, csv_out: Option<&Path>) -> Result<bool, CliError> {
    let p = io::load_polynomial(poly)?;
    let target = if derivative { p.derivative() } else { p };
    println!(
        "degree: {}",
        target.degree().map_or("none".to_string(), |d| d.to_string())
    );
    let set = roots_quaternionic(&target)?;
    print_root_set(&set);

    if let Some(path) = csv_out {
        let mut text = String::from(CSV_HEADER);
        text.push('\n');
        for r in &set.isolated {
            // Real roots belong to every slice; record them on the zero
            // direction rather than inventing one.
            let (slice, chart) = match r.imaginary_unit() {
                Ok(i) => (i.components(), [r.re(), r.im().norm()]),
                Err(_) => ([0.0; 3], [r.re(), 0.0]),
            };
            text.push_str(&csv_row("isolated", slice, chart[0], chart[1]));
            text.push('\n');
        }
        for &(alpha, beta) in &set.spheres {
            text.push_str(&csv_row("sphere", [0.0; 3], alpha, beta));
            text.push('\n');
        }
        io::write_file(path, &text)?;
    }
    Ok(true)
}
