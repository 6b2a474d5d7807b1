//! Acceptance gate: nine end-to-end checks over the whole workspace, run
//! in order, one printed line per criterion. The process exits 0 only if
//! every criterion passes; each line carries the measured runtime, and
//! criteria with a wall-clock budget fail if they exceed it.
//!
//! Numbering is stable so CI logs can be grepped: criteria 1–4 replay the
//! frozen worked examples, 5–6 run the 1000-instance containment suite,
//! 7–8 cross-check the root finder and the common-root extraction against
//! independent constructions, and 9 checks byte-level determinism of the
//! CLI output.

use std::fs;
use std::process::{self, Command};
use std::time::{Duration, Instant};

use qgl_core::bounds::{bound_snail, bound_snm, coefficient_bound_c, coefficient_bound_c_slice};
use qgl_core::hull::convex_hull;
use qgl_core::random::random_polynomial;
use qgl_core::roots::{common_roots, roots_in_slice, roots_quaternionic};
use qgl_core::snm::{snm_slice, verify_theorem};
use qgl_core::sphere::fibonacci_sphere;
use qgl_core::{
    ConvexRegion2D, QPolynomial, Quaternion, RootSetH, SliceBasis, UnitImaginary,
    VerificationReport, VerifyConfig,
};

// Frozen tolerances, one per criterion family.
const C1_TOL: f64 = 1e-12;
const C2_ROOT_TOL: f64 = 1e-8;
const C3_POINT_TOL: f64 = 1e-7;
const C3_VERTEX_TOL: f64 = 1e-8;
const C4_SLACK: f64 = 1e-9;
const C4_EXACT: f64 = 1e-12;
const C7_MATCH: f64 = 1e-5;
const C8_MATCH: f64 = 1e-7;

const SUITE_SIZE: usize = 1000;
const SUITE_SCALE: f64 = 10.0;
const ORACLE_COUNT: usize = 200;
const PAIR_COUNT: usize = 200;

fn q(w: f64, x: f64, y: f64, z: f64) -> Quaternion {
    Quaternion::new(w, x, y, z)
}

/// Cubic with plane root set {1+2I, 3+4I, 5+6I} and complement root set
/// {3+4I, 5+6I, 7+8I} over I = (i+2j−2k)/3.
fn projection_cubic() -> (QPolynomial, UnitImaginary) {
    let p = QPolynomial::new(vec![
        q(85.0, 1102.0 / 3.0, -61.0 / 3.0, 580.0 / 3.0),
        q(-21.0, -346.0 / 3.0, 439.0 / 3.0, -22.0 / 3.0),
        q(-9.0, -2.0, -25.0, -8.0),
        q(1.0, 2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0),
    ]);
    let i = UnitImaginary::new(1.0 / 3.0, 2.0 / 3.0, -2.0 / 3.0).expect("unit direction");
    (p, i)
}

/// x³ − (i+j+k)x² + (i−j+k)x + 1, whose slice hulls at i intersect in a
/// single point.
fn strict_cubic() -> QPolynomial {
    QPolynomial::from_components(&[
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, -1.0, 1.0],
        [0.0, -1.0, -1.0, -1.0],
        [1.0, 0.0, 0.0, 0.0],
    ])
}

/// x³ + ix² + 3jx, whose plane-hull bound reaches √10 while the
/// intersection bound stays at or below 3.
fn separating_cubic() -> QPolynomial {
    QPolynomial::from_components(&[
        [0.0; 4],
        [0.0, 0.0, 3.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [1.0, 0.0, 0.0, 0.0],
    ])
}

// ---------------------------------------------------------------------
// criterion 1: decomposition h = (plane part) + J (complement part)
// ---------------------------------------------------------------------

fn criterion_1() -> Result<String, String> {
    let h = q(1.0, 11.0, -2.0, -1.0);
    let i = UnitImaginary::new(1.0 / 3.0, 2.0 / 3.0, -2.0 / 3.0).expect("unit direction");
    let j = UnitImaginary::new(2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0).expect("unit direction");

    let basis = SliceBasis::from_ij(i, j).map_err(|e| format!("basis rejected: {e:?}"))?;
    let (z1, z2) = basis.decompose(&h);
    let plane_err = (z1.a - 1.0).hypot(z1.b - 3.0);
    if plane_err > C1_TOL {
        return Err(format!("plane part off by {plane_err:e}"));
    }
    let comp_err = (z2.a - 6.0).hypot(z2.b + 9.0);
    if comp_err > C1_TOL {
        return Err(format!("complement part off by {comp_err:e}"));
    }

    // The complement value J·(6 − 9I) as a bare quaternion product.
    let jq = j.as_quaternion();
    let complement = jq * i.embed(6.0, -9.0);
    let value_err = (h - i.embed(1.0, 3.0) - complement).norm();
    if value_err > C1_TOL {
        return Err(format!("complement value off by {value_err:e}"));
    }

    // Canonical basis: the plane part is basis-independent, and the
    // complement factorization matches up to the sign/phase freedom of
    // the complement direction, so its magnitude and the recomposed
    // value are what must agree.
    let canonical = SliceBasis::canonical(i);
    let (c1, c2) = canonical.decompose(&h);
    let c_plane_err = (c1.a - 1.0).hypot(c1.b - 3.0);
    if c_plane_err > C1_TOL {
        return Err(format!("canonical plane part off by {c_plane_err:e}"));
    }
    let mag_err = (c2.norm() - 117.0_f64.sqrt()).abs();
    if mag_err > C1_TOL {
        return Err(format!("canonical complement magnitude off by {mag_err:e}"));
    }
    let recompose_err = (canonical.recompose(&c1, &c2) - h).norm();
    if recompose_err > C1_TOL {
        return Err(format!("canonical recomposition off by {recompose_err:e}"));
    }
    Ok("plane and complement parts exact to 1e-12".to_string())
}

// ---------------------------------------------------------------------
// criterion 2: projection root sets of the worked cubic
// ---------------------------------------------------------------------

fn nearest_err(roots: &[qgl_core::SliceComplex], want: [f64; 2]) -> f64 {
    roots
        .iter()
        .map(|r| (r.a - want[0]).hypot(r.b - want[1]))
        .fold(f64::INFINITY, f64::min)
}

fn criterion_2() -> Result<String, String> {
    let (p, i) = projection_cubic();
    let projection = p.project(i);
    let p_roots =
        roots_in_slice(&projection.p_i).map_err(|e| format!("plane solve failed: {e:?}"))?;
    let q_roots =
        roots_in_slice(&projection.q_i).map_err(|e| format!("complement solve failed: {e:?}"))?;

    if p_roots.len() != 3 || q_roots.len() != 3 {
        return Err(format!(
            "expected 3+3 roots, got {}+{}",
            p_roots.len(),
            q_roots.len()
        ));
    }
    for want in [[1.0, 2.0], [3.0, 4.0], [5.0, 6.0]] {
        let err = nearest_err(&p_roots, want);
        if err > C2_ROOT_TOL {
            return Err(format!("plane root near ({}, {}) off by {err:e}", want[0], want[1]));
        }
    }
    for want in [[3.0, 4.0], [5.0, 6.0], [7.0, 8.0]] {
        let err = nearest_err(&q_roots, want);
        if err > C2_ROOT_TOL {
            return Err(format!(
                "complement root near ({}, {}) off by {err:e}",
                want[0], want[1]
            ));
        }
    }

    let common = common_roots(&projection.p_i, &projection.q_i, C8_MATCH)
        .map_err(|e| format!("common-root extraction failed: {e:?}"))?;
    if common.len() != 2 {
        return Err(format!("expected 2 common roots, got {}", common.len()));
    }
    for want in [[3.0, 4.0], [5.0, 6.0]] {
        let err = nearest_err(&common, want);
        if err > C2_ROOT_TOL {
            return Err(format!(
                "common root near ({}, {}) off by {err:e}",
                want[0], want[1]
            ));
        }
    }
    Ok("both root sets and the common pair reproduced".to_string())
}

// ---------------------------------------------------------------------
// criterion 3: strict-inclusion witness at I = i
// ---------------------------------------------------------------------

fn criterion_3() -> Result<String, String> {
    let p = strict_cubic();
    let s = snm_slice(&p, UnitImaginary::I).map_err(|e| format!("hulls failed: {e:?}"))?;

    let pt = match &s.snm {
        ConvexRegion2D::Point(pt) => *pt,
        other => return Err(format!("intersection kind is {}, not point", other.kind_name())),
    };
    let origin_err = pt[0].hypot(pt[1]);
    if origin_err > C3_POINT_TOL {
        return Err(format!("intersection point off origin by {origin_err:e}"));
    }

    let vertices = match &s.snail {
        ConvexRegion2D::Polygon(v) if v.len() == 3 => v.clone(),
        other => {
            return Err(format!(
                "plane hull is {} with {} vertices, not a triangle",
                other.kind_name(),
                other.vertices().len()
            ))
        }
    };
    // Nondegenerate: twice the signed area of the three vertices.
    let area2 = ((vertices[1][0] - vertices[0][0]) * (vertices[2][1] - vertices[0][1])
        - (vertices[2][0] - vertices[0][0]) * (vertices[1][1] - vertices[0][1]))
        .abs();
    if area2 < 1e-3 {
        return Err(format!("triangle degenerate, area2 = {area2:e}"));
    }
    let at_i = vertices
        .iter()
        .map(|v| v[0].hypot(v[1] - 1.0))
        .fold(f64::INFINITY, f64::min);
    if at_i > C3_VERTEX_TOL {
        return Err(format!("no vertex within {at_i:e} of i"));
    }
    let others: Vec<&[f64; 2]> = vertices
        .iter()
        .filter(|v| v[0].hypot(v[1] - 1.0) > 1e-3)
        .collect();
    if others.len() != 2 {
        return Err("vertex split around i ambiguous".to_string());
    }
    let antipodal_err = (others[0][0] + others[1][0]).hypot(others[0][1] + others[1][1]);
    let unit_err = (others[0][0].hypot(others[0][1]) - 1.0)
        .abs()
        .max((others[1][0].hypot(others[1][1]) - 1.0).abs());
    if antipodal_err > C3_VERTEX_TOL || unit_err > C3_VERTEX_TOL {
        return Err(format!(
            "other vertices not antipodal unit points (antipodal {antipodal_err:e}, unit {unit_err:e})"
        ));
    }

    // Residual check: every triangle vertex is a root of the plane
    // projection, whose chart coefficients are (1, i, −i, 1) ascending.
    let chart = p.project(UnitImaginary::I).p_i;
    let residual = vertices
        .iter()
        .map(|v| chart.evaluate(num_complex::Complex64::new(v[0], v[1])).norm())
        .fold(0.0, f64::max);
    if residual > C3_VERTEX_TOL {
        return Err(format!("vertex residual {residual:e} in plane projection"));
    }
    Ok("intersection collapses to 0 inside a proper triangle".to_string())
}

// ---------------------------------------------------------------------
// criterion 4: bound separation for the witness cubic
// ---------------------------------------------------------------------

fn criterion_4() -> Result<String, String> {
    let p = separating_cubic();
    let snail = bound_snail(&p, 2000);
    if snail < 10.0_f64.sqrt() - C4_SLACK {
        return Err(format!("plane-hull bound {snail:.12} below √10"));
    }
    let snm = bound_snm(&p, 2000);
    if snm > 3.0 + C4_SLACK {
        return Err(format!("intersection bound {snm:.12} above 3"));
    }
    let c_i = coefficient_bound_c_slice(&p.project(UnitImaginary::I).p_i);
    let c_err = (c_i - 2.0_f64.sqrt()).abs();
    if c_err > C4_EXACT {
        return Err(format!("plane coefficient bound off √2 by {c_err:e}"));
    }
    Ok(format!("bounds {snail:.9} / {snm:.9} straddle the gap"))
}

// ---------------------------------------------------------------------
// criteria 5+6: 1000-instance containment suite and its classical layer
// ---------------------------------------------------------------------

type Suite = Vec<(QPolynomial, VerificationReport)>;

fn criterion_5() -> (Result<String, String>, Option<Suite>) {
    let mut suite = Vec::with_capacity(SUITE_SIZE);
    let mut checks = 0_usize;
    for k in 0..SUITE_SIZE {
        let degree = 2 + k % 5;
        let p = random_polynomial(k as u64, degree, SUITE_SCALE);
        let config = VerifyConfig {
            epsilon: None,
            sphere_samples: qgl_core::tol::DEFAULT_SPHERE_SAMPLES,
            seed: k as u64,
        };
        let report = match verify_theorem(&p, &config) {
            Ok(r) => r,
            Err(e) => {
                return (
                    Err(format!("instance {k} (degree {degree}) failed to verify: {e:?}")),
                    Some(suite),
                )
            }
        };
        if !report.pass {
            let worst = report
                .checks
                .iter()
                .filter(|c| !c.in_snm)
                .map(|c| c.snm_distance)
                .fold(0.0, f64::max);
            return (
                Err(format!(
                    "instance {k} (degree {degree}): root escapes region by {worst:e} \
                     (epsilon {:e})",
                    report.epsilon
                )),
                Some(suite),
            );
        }
        checks += report.checks.len();
        suite.push((p, report));
    }
    (
        Ok(format!("{SUITE_SIZE}/{SUITE_SIZE} instances, {checks} membership checks")),
        Some(suite),
    )
}

fn criterion_6(suite: Option<&Suite>) -> Result<String, String> {
    let suite = suite.ok_or("containment suite unavailable")?;
    if suite.len() != SUITE_SIZE {
        return Err(format!("suite holds {} of {SUITE_SIZE} instances", suite.len()));
    }
    let mut classical_checks = 0_usize;
    for (k, (p, report)) in suite.iter().enumerate() {
        for check in &report.checks {
            if !check.in_snail {
                return Err(format!(
                    "instance {k}: derivative root escapes the plane hull by {:e}",
                    check.snail_distance
                ));
            }
        }
        // Classical containment inside each checked slice: the chart
        // roots of the projection's derivative stay in the hull of the
        // projection's roots, at the instance's epsilon.
        let mut seen: Vec<UnitImaginary> = Vec::new();
        for check in &report.checks {
            if seen.iter().any(|s| s.same_slice(&check.slice)) {
                continue;
            }
            seen.push(check.slice);
            let projection = p.project(check.slice);
            if projection.p_i.degree().map_or(true, |d| d < 2) {
                continue;
            }
            let roots = roots_in_slice(&projection.p_i)
                .map_err(|e| format!("instance {k}: plane solve failed: {e:?}"))?;
            let pts: Vec<[f64; 2]> = roots.iter().map(|r| [r.a, r.b]).collect();
            let hull = convex_hull(&pts);
            let droots = roots_in_slice(&projection.p_i.derivative())
                .map_err(|e| format!("instance {k}: plane derivative solve failed: {e:?}"))?;
            for dr in droots {
                if !hull.contains([dr.a, dr.b], report.epsilon) {
                    return Err(format!(
                        "instance {k}: classical containment fails by {:e}",
                        hull.distance([dr.a, dr.b])
                    ));
                }
                classical_checks += 1;
            }
        }
    }
    Ok(format!(
        "plane-hull containment everywhere, {classical_checks} classical in-slice checks"
    ))
}

// ---------------------------------------------------------------------
// criterion 7: independent grid+Newton root oracle
// ---------------------------------------------------------------------

const GRID_HALF: usize = 20;
const GRID_N: usize = 2 * GRID_HALF + 1;

fn solve4(mut a: [[f64; 4]; 4], mut b: [f64; 4]) -> Option<[f64; 4]> {
    for col in 0..4 {
        let pivot = (col..4).max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))?;
        if a[pivot][col].abs() < 1e-280 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..4 {
            let m = a[row][col] / a[col][col];
            for k in col..4 {
                a[row][k] -= m * a[col][k];
            }
            b[row] -= m * b[col];
        }
    }
    let mut x = [0.0; 4];
    for row in (0..4).rev() {
        let mut acc = b[row];
        for k in row + 1..4 {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}

/// Damped Gauss–Newton on the four real components of P, seeded from a
/// grid point; returns the polished root if the residual collapses.
fn newton_polish(p: &QPolynomial, mut x: Quaternion) -> Option<Quaternion> {
    let residual = |h: &Quaternion| p.evaluate(h).norm();
    let gate = |h: &Quaternion| 1e-9 * (1.0 + p.evaluation_scale(h));
    let mut res = residual(&x);
    for _ in 0..80 {
        if res <= 0.01 * gate(&x) {
            break;
        }
        let fx = p.evaluate(&x).components();
        let h = 1e-7 * (1.0 + x.norm());
        let mut jac = [[0.0; 4]; 4];
        for d in 0..4 {
            let mut up = x.components();
            let mut dn = x.components();
            up[d] += h;
            dn[d] -= h;
            let fu = p.evaluate(&Quaternion::new(up[0], up[1], up[2], up[3])).components();
            let fd = p.evaluate(&Quaternion::new(dn[0], dn[1], dn[2], dn[3])).components();
            for row in 0..4 {
                jac[row][d] = (fu[row] - fd[row]) / (2.0 * h);
            }
        }
        let step = solve4(jac, fx)?;
        let mut scale = 1.0;
        let mut improved = false;
        for _ in 0..12 {
            let c = x.components();
            let cand = Quaternion::new(
                c[0] - scale * step[0],
                c[1] - scale * step[1],
                c[2] - scale * step[2],
                c[3] - scale * step[3],
            );
            let cand_res = residual(&cand);
            if cand_res < res {
                x = cand;
                res = cand_res;
                improved = true;
                break;
            }
            scale *= 0.5;
        }
        if !improved {
            break;
        }
    }
    (res <= gate(&x)).then_some(x)
}

/// Brute-force oracle: residual lattice over [−R,R]⁴ at step R/20 with
/// R the coefficient bound, Newton polish from every axis-local minimum.
fn oracle_roots(p: &QPolynomial, residuals: &mut Vec<f32>) -> Vec<Quaternion> {
    let r = coefficient_bound_c(p);
    let step = r / GRID_HALF as f64;
    let axis: Vec<f64> = (0..GRID_N).map(|s| -r + s as f64 * step).collect();
    residuals.clear();
    residuals.reserve(GRID_N.pow(4));
    let ball = (r + step) * (r + step);
    for &w in &axis {
        for &x in &axis {
            let wx = w * w + x * x;
            for &y in &axis {
                let wxy = wx + y * y;
                for &z in &axis {
                    // Roots are confined to the radius-R ball, so points
                    // well outside it need no evaluation.
                    if wxy + z * z > ball {
                        residuals.push(f32::INFINITY);
                    } else {
                        residuals.push(p.evaluate(&q(w, x, y, z)).norm() as f32);
                    }
                }
            }
        }
    }

    let stride = [GRID_N * GRID_N * GRID_N, GRID_N * GRID_N, GRID_N, 1];
    let mut starts: Vec<usize> = Vec::new();
    for idx in 0..residuals.len() {
        let center = residuals[idx];
        if !center.is_finite() {
            continue;
        }
        let coords = [
            idx / stride[0],
            idx / stride[1] % GRID_N,
            idx / stride[2] % GRID_N,
            idx % GRID_N,
        ];
        let mut is_min = true;
        for d in 0..4 {
            if coords[d] > 0 && residuals[idx - stride[d]] < center {
                is_min = false;
                break;
            }
            if coords[d] + 1 < GRID_N && residuals[idx + stride[d]] < center {
                is_min = false;
                break;
            }
        }
        if is_min {
            starts.push(idx);
        }
    }
    // Plateaus (root spheres) can produce thousands of ties; polish the
    // most promising starts.
    starts.sort_by(|&a, &b| residuals[a].total_cmp(&residuals[b]));
    starts.truncate(512);

    let mut found: Vec<Quaternion> = Vec::new();
    for idx in starts {
        let coords = [
            idx / stride[0],
            idx / stride[1] % GRID_N,
            idx / stride[2] % GRID_N,
            idx % GRID_N,
        ];
        let start = q(axis[coords[0]], axis[coords[1]], axis[coords[2]], axis[coords[3]]);
        if let Some(root) = newton_polish(p, start) {
            if found.iter().all(|f| (*f - root).norm() > 1e-8 * (1.0 + root.norm())) {
                found.push(root);
            }
        }
    }
    found
}

fn sphere_distance(alpha: f64, beta: f64, h: &Quaternion) -> f64 {
    (h.re() - alpha).hypot(h.im().norm() - beta)
}

fn criterion_7() -> Result<String, String> {
    let mut residuals: Vec<f32> = Vec::new();
    let mut oracle_total = 0_usize;
    for k in 0..ORACLE_COUNT {
        let degree = 1 + k % 4;
        let p = random_polynomial(5000 + k as u64, degree, 2.0);
        let reported =
            roots_quaternionic(&p).map_err(|e| format!("instance {k}: solve failed: {e:?}"))?;
        let oracle = oracle_roots(&p, &mut residuals);
        oracle_total += oracle.len();

        for o in &oracle {
            let d = reported.distance(o);
            if d > C7_MATCH {
                return Err(format!(
                    "instance {k} (degree {degree}): oracle root unmatched by {d:e}"
                ));
            }
        }
        for r in &reported.isolated {
            let d = oracle
                .iter()
                .map(|o| (*o - *r).norm())
                .fold(f64::INFINITY, f64::min);
            if d > C7_MATCH {
                return Err(format!(
                    "instance {k} (degree {degree}): reported root unmatched by {d:e}"
                ));
            }
        }
        for &(alpha, beta) in &reported.spheres {
            let d = oracle
                .iter()
                .map(|o| sphere_distance(alpha, beta, o))
                .fold(f64::INFINITY, f64::min);
            if d > C7_MATCH {
                return Err(format!(
                    "instance {k} (degree {degree}): reported sphere unmatched by {d:e}"
                ));
            }
        }
        if oracle.is_empty() && !reported.is_empty() {
            return Err(format!("instance {k}: oracle found nothing"));
        }
    }
    Ok(format!(
        "{ORACLE_COUNT} instances, {oracle_total} oracle roots matched both ways"
    ))
}

// ---------------------------------------------------------------------
// criterion 8: common chart roots vs roots lying in the slice
// ---------------------------------------------------------------------

/// Coefficient convolution with left-factor coefficients on the left;
/// every root of the right factor is a root of the product.
fn star(f: &QPolynomial, g: &QPolynomial) -> QPolynomial {
    if f.is_zero() || g.is_zero() {
        return QPolynomial::zero();
    }
    let (a, b) = (f.coeffs(), g.coeffs());
    let mut c = vec![Quaternion::ZERO; a.len() + b.len() - 1];
    for (s, &fa) in a.iter().enumerate() {
        for (t, &gb) in b.iter().enumerate() {
            c[s + t] = c[s + t] + fa * gb;
        }
    }
    QPolynomial::new(c)
}

/// Chart coordinates of every root of a polynomial lying in the plane of
/// `i`: isolated roots whose direction is ±i (or real), plus the two
/// points where each root sphere meets the plane.
fn slice_roots_of(i: UnitImaginary, roots: &RootSetH) -> Vec<[f64; 2]> {
    let iq = i.as_quaternion();
    let mut out = Vec::new();
    for r in &roots.isolated {
        let im = r.im();
        let b = im.dot(&iq);
        let off_plane = (im - iq.scale(b)).norm();
        if off_plane <= C8_MATCH * (1.0 + r.norm()) {
            out.push([r.re(), b]);
        }
    }
    for &(alpha, beta) in &roots.spheres {
        out.push([alpha, beta]);
        out.push([alpha, -beta]);
    }
    out
}

fn criterion_8() -> Result<String, String> {
    let directions = fibonacci_sphere(PAIR_COUNT);
    let mut planted_found = 0_usize;
    for k in 0..PAIR_COUNT {
        let i = directions[k];
        let p = if k % 2 == 0 {
            // Planted pair: a right factor (x − (a + I b)) guarantees a
            // root inside the plane of I.
            let g = random_polynomial(9000 + k as u64, 2, 2.0);
            let a = -2.0 + 4.0 * (k as f64 / (PAIR_COUNT - 1) as f64);
            let b = -2.0 + 4.0 * ((k * 37 % PAIR_COUNT) as f64 / (PAIR_COUNT - 1) as f64);
            let linear = QPolynomial::new(vec![-i.embed(a, b), Quaternion::ONE]);
            star(&g, &linear)
        } else {
            random_polynomial(9000 + k as u64, 3, 2.0)
        };

        let all_roots =
            roots_quaternionic(&p).map_err(|e| format!("pair {k}: solve failed: {e:?}"))?;
        let expected = slice_roots_of(i, &all_roots);
        if k % 2 == 0 && expected.is_empty() {
            return Err(format!("pair {k}: planted root not recovered in its plane"));
        }
        planted_found += usize::from(k % 2 == 0 && !expected.is_empty());

        let projection = p.project(i);
        let common = common_roots(&projection.p_i, &projection.q_i, C8_MATCH)
            .map_err(|e| format!("pair {k}: common-root extraction failed: {e:?}"))?;

        for want in &expected {
            let d = common
                .iter()
                .map(|c| (c.a - want[0]).hypot(c.b - want[1]))
                .fold(f64::INFINITY, f64::min);
            if d > C8_MATCH {
                return Err(format!(
                    "pair {k}: in-plane root ({}, {}) missed by {d:e}",
                    want[0], want[1]
                ));
            }
        }
        for c in &common {
            let d = expected
                .iter()
                .map(|w| (c.a - w[0]).hypot(c.b - w[1]))
                .fold(f64::INFINITY, f64::min);
            if d > C8_MATCH {
                return Err(format!(
                    "pair {k}: spurious common root ({}, {}) off by {d:e}",
                    c.a, c.b
                ));
            }
        }
    }
    Ok(format!(
        "{PAIR_COUNT} pairs agree, {planted_found} planted roots recovered"
    ))
}

// ---------------------------------------------------------------------
// criterion 9: byte-identical CLI output
// ---------------------------------------------------------------------

fn criterion_9() -> Result<String, String> {
    let dir = tempfile::tempdir().map_err(|e| format!("tempdir failed: {e}"))?;
    let run = |tag: &str, threads: &str| -> Result<(Vec<u8>, Vec<u8>, Vec<u8>), String> {
        let json = dir.path().join(format!("{tag}.json"));
        let csv = dir.path().join(format!("{tag}.csv"));
        let out = Command::new(env!("CARGO_BIN_EXE_qgl"))
            .args([
                "verify",
                "--seed",
                "42",
                "--json",
                json.to_str().unwrap(),
                "--csv",
                csv.to_str().unwrap(),
            ])
            .env("QGL_THREADS", threads)
            .output()
            .map_err(|e| format!("binary launch failed: {e}"))?;
        if !out.status.success() {
            return Err(format!(
                "verify run exited {:?}: {}",
                out.status.code(),
                String::from_utf8_lossy(&out.stderr)
            ));
        }
        let json_bytes = fs::read(&json).map_err(|e| format!("read json: {e}"))?;
        let csv_bytes = fs::read(&csv).map_err(|e| format!("read csv: {e}"))?;
        Ok((out.stdout, json_bytes, csv_bytes))
    };
    // Different worker caps must not change a single byte.
    let first = run("a", "1")?;
    let second = run("b", "4")?;
    if first.0 != second.0 {
        return Err("stdout differs between runs".to_string());
    }
    if first.1 != second.1 {
        return Err("JSON output differs between runs".to_string());
    }
    if first.2 != second.2 {
        return Err("CSV output differs between runs".to_string());
    }
    Ok(format!(
        "stdout, {}-byte JSON, and {}-byte CSV identical across runs",
        first.1.len(),
        first.2.len()
    ))
}

// ---------------------------------------------------------------------

struct Tally {
    failed: usize,
}

fn record(
    tally: &mut Tally,
    idx: usize,
    label: &str,
    limit: Option<Duration>,
    elapsed: Duration,
    result: Result<String, String>,
) {
    let time = if elapsed.as_secs_f64() >= 1.0 {
        format!("{:.2} s", elapsed.as_secs_f64())
    } else {
        format!("{:.2} ms", elapsed.as_secs_f64() * 1e3)
    };
    let over_budget = limit.is_some_and(|l| elapsed > l);
    match (result, over_budget) {
        (Ok(detail), false) => {
            println!("criterion {idx} ({label}): PASS in {time} [{detail}]");
        }
        (Ok(detail), true) => {
            tally.failed += 1;
            println!(
                "criterion {idx} ({label}): FAIL in {time} — over time budget {:.0?} [{detail}]",
                limit.unwrap()
            );
        }
        (Err(why), over) => {
            tally.failed += 1;
            let budget = if over {
                format!(" — over time budget {:.0?}", limit.unwrap())
            } else {
                String::new()
            };
            println!("criterion {idx} ({label}): FAIL in {time} — {why}{budget}");
        }
    }
}

fn main() {
    let mut tally = Tally { failed: 0 };

    let t = Instant::now();
    let r = criterion_1();
    record(
        &mut tally,
        1,
        "decomposition splits into plane and complement parts",
        Some(Duration::from_millis(1)),
        t.elapsed(),
        r,
    );

    let t = Instant::now();
    let r = criterion_2();
    record(
        &mut tally,
        2,
        "projection root sets of the worked cubic",
        Some(Duration::from_millis(10)),
        t.elapsed(),
        r,
    );

    let t = Instant::now();
    let r = criterion_3();
    record(
        &mut tally,
        3,
        "hull intersection collapses to a point",
        Some(Duration::from_millis(10)),
        t.elapsed(),
        r,
    );

    let t = Instant::now();
    let r = criterion_4();
    record(
        &mut tally,
        4,
        "plane-hull and intersection bounds separate",
        Some(Duration::from_secs(2)),
        t.elapsed(),
        r,
    );

    let t = Instant::now();
    let (r, suite) = criterion_5();
    record(
        &mut tally,
        5,
        "derivative roots stay in the intersection region",
        Some(Duration::from_secs(300)),
        t.elapsed(),
        r,
    );

    let t = Instant::now();
    let r = criterion_6(suite.as_ref());
    record(
        &mut tally,
        6,
        "plane-hull and classical in-slice containment",
        None,
        t.elapsed(),
        r,
    );

    let t = Instant::now();
    let r = criterion_7();
    record(
        &mut tally,
        7,
        "root finder matches the grid+Newton oracle",
        None,
        t.elapsed(),
        r,
    );

    let t = Instant::now();
    let r = criterion_8();
    record(
        &mut tally,
        8,
        "common chart roots equal the in-plane root set",
        None,
        t.elapsed(),
        r,
    );

    let t = Instant::now();
    let r = criterion_9();
    record(
        &mut tally,
        9,
        "repeat runs emit byte-identical output",
        None,
        t.elapsed(),
        r,
    );

    if tally.failed == 0 {
        println!("acceptance: 9/9 criteria pass");
        process::exit(0);
    }
    println!("acceptance: {} of 9 criteria FAILED", tally.failed);
    process::exit(1);
}
