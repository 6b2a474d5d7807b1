//! Built-in worked examples with frozen expected values.
//!
//! Each case recomputes a known decomposition, projection, hull, or bound
//! and prints the computed value next to the expected one with a pass/fail
//! verdict. Plain equalities use tolerance 1e-9; values that pass through
//! the root solver use 1e-7.

use std::path::Path;

use num_complex::Complex64;
use qgl_core::bounds::{bound_snail, bound_snm, coefficient_bound_c_slice};
use qgl_core::roots::{common_roots, roots_in_slice};
use qgl_core::snm::snm_slice;
use qgl_core::{
    ConvexRegion2D, QPolynomial, Quaternion, SliceBasis, SliceComplex, UnitImaginary,
};

use crate::io::{self, sig12, CliError};
use crate::svg::{self, Layer};

const TOL_EXACT: f64 = 1e-9;
const TOL_ROOT: f64 = 1e-7;

struct Check {
    label: &'static str,
    computed: String,
    expected: String,
    error: f64,
    tol: f64,
}

impl Check {
    fn pass(&self) -> bool {
        self.error <= self.tol
    }

    fn value(label: &'static str, got: f64, want: f64, tol: f64) -> Check {
        Check {
            label,
            computed: sig12(got),
            expected: sig12(want),
            error: (got - want).abs(),
            tol,
        }
    }

    fn point(label: &'static str, got: [f64; 2], want: [f64; 2], tol: f64) -> Check {
        Check {
            label,
            computed: format!("({}, {})", sig12(got[0]), sig12(got[1])),
            expected: format!("({}, {})", sig12(want[0]), sig12(want[1])),
            error: (got[0] - want[0]).hypot(got[1] - want[1]),
            tol,
        }
    }

    /// One-sided: `got` must reach at least `floor - slack`.
    fn floor(label: &'static str, got: f64, floor: f64, slack: f64) -> Check {
        Check {
            label,
            computed: sig12(got),
            expected: format!(">= {}", sig12(floor)),
            error: (floor - got).max(0.0),
            tol: slack,
        }
    }

    /// One-sided: `got` must stay at or below `cap + slack`.
    fn cap(label: &'static str, got: f64, cap: f64, slack: f64) -> Check {
        Check {
            label,
            computed: sig12(got),
            expected: format!("<= {}", sig12(cap)),
            error: (got - cap).max(0.0),
            tol: slack,
        }
    }

    fn flag(label: &'static str, ok: bool, computed: String, expected: &str) -> Check {
        Check {
            label,
            computed,
            expected: expected.to_string(),
            error: if ok { 0.0 } else { 1.0 },
            tol: 0.0,
        }
    }
}

/// Distance from an expected chart point to the nearest computed root.
fn nearest(roots: &[SliceComplex], want: [f64; 2]) -> ([f64; 2], f64) {
    let mut best = ([f64::NAN, f64::NAN], f64::INFINITY);
    for r in roots {
        let d = (r.a - want[0]).hypot(r.b - want[1]);
        if d < best.1 {
            best = ([r.a, r.b], d);
        }
    }
    best
}

fn root_checks(
    roots: &[SliceComplex],
    wanted: &[(&'static str, [f64; 2])],
    count_label: &'static str,
    out: &mut Vec<Check>,
) {
    out.push(Check::value(
        count_label,
        roots.len() as f64,
        wanted.len() as f64,
        0.0,
    ));
    for &(label, want) in wanted {
        let (got, err) = nearest(roots, want);
        out.push(Check {
            label,
            computed: format!("({}, {})", sig12(got[0]), sig12(got[1])),
            expected: format!("({}, {})", sig12(want[0]), sig12(want[1])),
            error: err,
            tol: TOL_ROOT,
        });
    }
}

/// h = 1 + 11i − 2j − k splits over I = (i+2j−2k)/3 into a plane part
/// 1 + 3I and a complement part J(6 − 9I) for J = (2i+j+2k)/3.
fn decomposition_case() -> Result<(Vec<Check>, Vec<String>), CliError> {
    let h = Quaternion::new(1.0, 11.0, -2.0, -1.0);
    let i = UnitImaginary::new(1.0 / 3.0, 2.0 / 3.0, -2.0 / 3.0).expect("unit direction");
    let j = UnitImaginary::new(2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0).expect("unit direction");
    let basis = SliceBasis::from_ij(i, j)?;
    let (z1, z2) = basis.decompose(&h);

    let mut checks = vec![
        Check::point("plane part", [z1.a, z1.b], [1.0, 3.0], TOL_EXACT),
        Check::point("complement part", [z2.a, z2.b], [6.0, -9.0], TOL_EXACT),
        Check::value(
            "recomposition",
            (basis.recompose(&z1, &z2) - h).norm(),
            0.0,
            TOL_EXACT,
        ),
    ];

    // The same split through the canonical basis: the plane part and the
    // complement magnitude are basis-independent.
    let canonical = SliceBasis::canonical(i);
    let (c1, c2) = canonical.decompose(&h);
    checks.push(Check::point(
        "canonical plane part",
        [c1.a, c1.b],
        [1.0, 3.0],
        TOL_EXACT,
    ));
    checks.push(Check::value(
        "canonical complement magnitude",
        c2.norm(),
        117.0_f64.sqrt(),
        TOL_EXACT,
    ));
    checks.push(Check::value(
        "canonical recomposition",
        (canonical.recompose(&c1, &c2) - h).norm(),
        0.0,
        TOL_EXACT,
    ));

    let scene = svg::render(&[
        Layer::markers("plane_part", vec![[z1.a, z1.b]]),
        Layer::markers("complement_part", vec![[z2.a, z2.b]]),
    ]);
    Ok((checks, vec![scene]))
}

/// The cubic whose projections onto I = (i+2j−2k)/3 have root sets
/// {1+2I, 3+4I, 5+6I} (plane) and {3+4I, 5+6I, 7+8I} (complement), with
/// common roots {3+4I, 5+6I}.
fn projection_fixture() -> (QPolynomial, UnitImaginary) {
    let p = QPolynomial::new(vec![
        Quaternion::new(85.0, 1102.0 / 3.0, -61.0 / 3.0, 580.0 / 3.0),
        Quaternion::new(-21.0, -346.0 / 3.0, 439.0 / 3.0, -22.0 / 3.0),
        Quaternion::new(-9.0, -2.0, -25.0, -8.0),
        Quaternion::new(1.0, 2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0),
    ]);
    let i = UnitImaginary::new(1.0 / 3.0, 2.0 / 3.0, -2.0 / 3.0).expect("unit direction");
    (p, i)
}

fn projection_case() -> Result<(Vec<Check>, Vec<String>), CliError> {
    let (p, i) = projection_fixture();
    let projection = p.project(i);
    let p_roots = roots_in_slice(&projection.p_i)?;
    let q_roots = roots_in_slice(&projection.q_i)?;
    let common = common_roots(&projection.p_i, &projection.q_i, TOL_ROOT)?;

    let mut checks = Vec::new();
    root_checks(
        &p_roots,
        &[
            ("plane root 1+2I", [1.0, 2.0]),
            ("plane root 3+4I", [3.0, 4.0]),
            ("plane root 5+6I", [5.0, 6.0]),
        ],
        "plane root count",
        &mut checks,
    );
    root_checks(
        &q_roots,
        &[
            ("complement root 3+4I", [3.0, 4.0]),
            ("complement root 5+6I", [5.0, 6.0]),
            ("complement root 7+8I", [7.0, 8.0]),
        ],
        "complement root count",
        &mut checks,
    );
    root_checks(
        &common,
        &[
            ("common root 3+4I", [3.0, 4.0]),
            ("common root 5+6I", [5.0, 6.0]),
        ],
        "common root count",
        &mut checks,
    );

    let s = snm_slice(&p, i)?;
    let scene = svg::render(&[
        Layer::hull("snail", &s.snail),
        Layer::hull("cosnail", &s.cosnail),
        Layer::hull("snm", &s.snm),
        Layer::markers("plane_roots", p_roots.iter().map(|r| [r.a, r.b]).collect()),
        Layer::markers("complement_roots", q_roots.iter().map(|r| [r.a, r.b]).collect()),
    ]);
    Ok((checks, vec![scene]))
}

/// x³ − (i+j+k)x² + (i−j+k)x + 1: at I = i the plane hull is a proper
/// triangle, the complement hull a segment, and their intersection the
/// single point 0.
fn strict_inclusion_fixture() -> QPolynomial {
    QPolynomial::from_components(&[
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, -1.0, 1.0],
        [0.0, -1.0, -1.0, -1.0],
        [1.0, 0.0, 0.0, 0.0],
    ])
}

fn strict_inclusion_case() -> Result<(Vec<Check>, Vec<String>), CliError> {
    let p = strict_inclusion_fixture();
    let s = snm_slice(&p, UnitImaginary::I)?;

    let mut checks = vec![Check::flag(
        "intersection kind",
        matches!(s.snm, ConvexRegion2D::Point(_)),
        s.snm.kind_name().to_string(),
        "point",
    )];
    if let ConvexRegion2D::Point(pt) = &s.snm {
        checks.push(Check::value(
            "intersection collapses to 0",
            pt[0].hypot(pt[1]),
            0.0,
            TOL_ROOT,
        ));
    }

    let vertices = s.snail.vertices();
    checks.push(Check::flag(
        "plane hull kind",
        matches!(s.snail, ConvexRegion2D::Polygon(_)) && vertices.len() == 3,
        format!("{}, {} vertices", s.snail.kind_name(), vertices.len()),
        "polygon, 3 vertices",
    ));
    if vertices.len() == 3 {
        // One vertex at i; the other two are antipodal unit chart points.
        let near_i = vertices
            .iter()
            .map(|v| v[0].hypot(v[1] - 1.0))
            .fold(f64::INFINITY, f64::min);
        checks.push(Check::value("vertex at i", near_i, 0.0, TOL_ROOT));
        let others: Vec<&[f64; 2]> = vertices
            .iter()
            .filter(|v| v[0].hypot(v[1] - 1.0) > TOL_ROOT.sqrt())
            .collect();
        let antipodal = if others.len() == 2 {
            let sum = (others[0][0] + others[1][0]).hypot(others[0][1] + others[1][1]);
            let off_unit = (others[0][0].hypot(others[0][1]) - 1.0)
                .abs()
                .max((others[1][0].hypot(others[1][1]) - 1.0).abs());
            sum.max(off_unit)
        } else {
            f64::INFINITY
        };
        checks.push(Check::value(
            "remaining vertices antipodal on unit circle",
            antipodal,
            0.0,
            TOL_ROOT,
        ));
        // Residual check: the vertices are roots of the plane projection
        // x³ − ix² + ix + 1 (ascending coefficients 1, i, −i, 1).
        let chart = [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(1.0, 0.0),
        ];
        let residual = vertices
            .iter()
            .map(|v| {
                let z = Complex64::new(v[0], v[1]);
                let mut acc = Complex64::new(0.0, 0.0);
                for c in chart.iter().rev() {
                    acc = acc * z + *c;
                }
                acc.norm()
            })
            .fold(0.0, f64::max);
        checks.push(Check::value(
            "vertex residuals in plane projection",
            residual,
            0.0,
            TOL_ROOT,
        ));
    }

    let projection = p.project(UnitImaginary::I);
    let p_roots = roots_in_slice(&projection.p_i)?;
    let q_roots = roots_in_slice(&projection.q_i)?;
    let scene = svg::render(&[
        Layer::hull("snail", &s.snail),
        Layer::hull("cosnail", &s.cosnail),
        Layer::hull("snm", &s.snm),
        Layer::markers("plane_roots", p_roots.iter().map(|r| [r.a, r.b]).collect()),
        Layer::markers("complement_roots", q_roots.iter().map(|r| [r.a, r.b]).collect()),
    ]);
    Ok((checks, vec![scene]))
}

/// x³ + ix² + 3jx: the plane-hull radius bound reaches √10 (witness
/// I = j) while the intersection bound stays at or below 3, and the
/// plane projection at i has coefficient bound exactly √2.
fn bounds_fixture() -> QPolynomial {
    QPolynomial::from_components(&[
        [0.0; 4],
        [0.0, 0.0, 3.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [1.0, 0.0, 0.0, 0.0],
    ])
}

fn bounds_case() -> Result<(Vec<Check>, Vec<String>), CliError> {
    let p = bounds_fixture();
    let samples = qgl_core::tol::DEFAULT_SPHERE_SAMPLES;
    let checks = vec![
        Check::floor(
            "plane-hull bound reaches witness",
            bound_snail(&p, samples),
            10.0_f64.sqrt(),
            TOL_EXACT,
        ),
        Check::cap(
            "intersection bound stays capped",
            bound_snm(&p, samples),
            3.0,
            TOL_EXACT,
        ),
        Check::value(
            "coefficient bound of plane projection at i",
            coefficient_bound_c_slice(&p.project(UnitImaginary::I).p_i),
            2.0_f64.sqrt(),
            TOL_EXACT,
        ),
    ];
    // Scene at the witness slice j, where the two hulls separate most.
    let s = snm_slice(&p, UnitImaginary::J)?;
    let scene = svg::render(&[
        Layer::hull("snail", &s.snail),
        Layer::hull("cosnail", &s.cosnail),
        Layer::hull("snm", &s.snm),
    ]);
    Ok((checks, vec![scene]))
}

pub fn run(case: &str, svg_out: Option<&Path>) -> Result<bool, CliError> {
    let (checks, scenes) = match case {
        "example-2-4" => decomposition_case()?,
        "section-3-projection" => projection_case()?,
        "strict-inclusion" => strict_inclusion_case()?,
        "bounds-5-4" => bounds_case()?,
        other => {
            return Err(CliError::UnknownCase { name: other.to_string() });
        }
    };

    println!("demo {case}");
    let mut failures = Vec::new();
    for c in &checks {
        let verdict = if c.pass() { "PASS" } else { "FAIL" };
        println!(
            "  [{verdict}] {}: computed {} | expected {} | error {} (tol {})",
            c.label,
            c.computed,
            c.expected,
            sig12(c.error),
            sig12(c.tol)
        );
        if !c.pass() {
            failures.push(serde_json::json!({
                "case": case,
                "label": c.label,
                "computed": c.computed,
                "expected": c.expected,
                "error": c.error,
                "tol": c.tol,
            }));
        }
    }
    let all = failures.is_empty();
    println!("demo {case}: {}", if all { "PASS" } else { "FAIL" });
    if let Some(path) = svg_out {
        if let Some(scene) = scenes.first() {
            io::write_file(path, scene)?;
        }
    }
    if !all {
        println!("{}", serde_json::json!({ "failures": failures }));
    }
    Ok(all)
}
