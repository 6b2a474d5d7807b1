//! Per-slice root hulls (snail, cosnail, their intersection) and the
//! derivative-root containment check built on them.
//!
//! For each imaginary unit `I`, the snail is the convex hull of the roots
//! of `P_I` in the slice chart, the cosnail is the hull of the roots of
//! the complementary projection, and their intersection is the slice's
//! contribution to the containment region. Every root of `P′` must land
//! in the region of its own slice; that check, with residuals and hull
//! distances recorded per point, is [`verify_theorem`].

use serde::Serialize;

use crate::error::Error;
use crate::hull::{self, ConvexRegion2D};
use crate::qpoly::{QPolynomial, SlicePolynomial};
use crate::quaternion::{Quaternion, UnitImaginary};
use crate::roots::{self, RootSetH};
use crate::sphere;
use crate::tol;

/// The three hulls attached to one slice: snail `conv(R(P_I))`, cosnail
/// `conv(R(P_I⊥))`, and their intersection in the shared chart.
#[derive(Debug, Clone, Serialize)]
pub struct SnmSlice {
    pub slice: UnitImaginary,
    pub snail: ConvexRegion2D,
    pub cosnail: ConvexRegion2D,
    pub snm: ConvexRegion2D,
}

/// Hull of a slice polynomial's roots. The zero polynomial vanishes
/// everywhere, so its hull is the whole plane; a nonzero constant never
/// vanishes, so its hull is empty.
fn root_hull(s: &SlicePolynomial) -> Result<ConvexRegion2D, Error> {
    if s.is_zero() {
        return Ok(ConvexRegion2D::WholePlane);
    }
    if s.degree() == Some(0) {
        return Ok(ConvexRegion2D::Empty);
    }
    let pts: Vec<[f64; 2]> = roots::roots_in_slice(s)?
        .iter()
        .map(|r| [r.a, r.b])
        .collect();
    Ok(hull::convex_hull(&pts))
}

/// Builds the snail, cosnail, and intersection hulls for one slice.
pub fn snm_slice(p: &QPolynomial, i: UnitImaginary) -> Result<SnmSlice, Error> {
    let proj = p.project(i);
    let snail = root_hull(&proj.p_i)?;
    let cosnail = root_hull(&proj.q_i)?;
    let snm = hull::intersect(&snail, &cosnail);
    Ok(SnmSlice { slice: i, snail, cosnail, snm })
}

/// Chart coordinates of `h` in the slice of `i`. Exact when `h` lies in
/// the slice; otherwise the imaginary part is projected onto `i`.
fn chart(h: &Quaternion, i: UnitImaginary) -> [f64; 2] {
    [h.w, h.im().dot(&i.as_quaternion())]
}

/// Whether `h` lies within `eps` of the intersection region of its
/// slice. A non-real `h` belongs to exactly one slice (up to sign), so
/// only that slice is consulted; a real `h` lies in every slice and is
/// accepted if any of `sphere_samples` lattice slices contains it.
pub fn membership_snm(
    p: &QPolynomial,
    h: &Quaternion,
    eps: f64,
    sphere_samples: usize,
) -> Result<bool, Error> {
    match h.imaginary_unit() {
        Ok(i) => Ok(snm_slice(p, i)?.snm.contains(chart(h, i), eps)),
        Err(_) => {
            for i in sphere::fibonacci_sphere(sphere_samples.max(1)) {
                if snm_slice(p, i)?.snm.contains([h.w, 0.0], eps) {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

/// Parameters for [`verify_theorem`]. `epsilon: None` selects the
/// default slack `1e-6 · (1 + max derivative-root norm)`, matched to the
/// accuracy of hull vertices computed from floating-point roots. The
/// seed is carried into the report so randomized callers can echo their
/// instance generation; the verification itself is deterministic.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct VerifyConfig {
    pub epsilon: Option<f64>,
    pub sphere_samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            epsilon: None,
            sphere_samples: tol::DEFAULT_SPHERE_SAMPLES,
            seed: 0,
        }
    }
}

/// One membership test: a derivative root (or a probe point on a
/// derivative root-sphere) against the hulls of its slice.
#[derive(Debug, Clone, Serialize)]
pub struct MembershipCheck {
    /// `"isolated"` for point roots, `"sphere_probe"` for sphere samples.
    pub kind: &'static str,
    pub point: Quaternion,
    pub slice: UnitImaginary,
    pub chart: [f64; 2],
    pub snail_distance: f64,
    pub cosnail_distance: f64,
    pub snm_distance: f64,
    /// `‖P′(point)‖`, the evidence that the point is a derivative root.
    pub residual: f64,
    pub in_snail: bool,
    pub in_snm: bool,
}

/// Outcome of checking every derivative root of one polynomial.
/// `pass` means every check landed inside its slice's intersection
/// region; the weaker snail containment is recorded alongside.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub polynomial: QPolynomial,
    pub degree: usize,
    pub epsilon: f64,
    pub sphere_samples: usize,
    pub seed: u64,
    pub derivative_roots: RootSetH,
    pub checks: Vec<MembershipCheck>,
    pub pass: bool,
}

fn build_check(
    kind: &'static str,
    p: &QPolynomial,
    dp: &QPolynomial,
    h: Quaternion,
    i: UnitImaginary,
    epsilon: f64,
) -> Result<MembershipCheck, Error> {
    let s = snm_slice(p, i)?;
    let pt = chart(&h, i);
    Ok(MembershipCheck {
        kind,
        point: h,
        slice: i,
        chart: pt,
        snail_distance: s.snail.distance(pt),
        cosnail_distance: s.cosnail.distance(pt),
        snm_distance: s.snm.distance(pt),
        residual: dp.evaluate(&h).norm(),
        in_snail: s.snail.contains(pt, epsilon),
        in_snm: s.snm.contains(pt, epsilon),
    })
}

fn check_point(
    kind: &'static str,
    p: &QPolynomial,
    dp: &QPolynomial,
    h: Quaternion,
    epsilon: f64,
    samples: usize,
) -> Result<MembershipCheck, Error> {
    match h.imaginary_unit() {
        Ok(i) => build_check(kind, p, dp, h, i, epsilon),
        Err(_) => {
            // A real point lies in every slice: accept the first lattice
            // slice that contains it, else report the closest one.
            let mut best: Option<MembershipCheck> = None;
            for i in sphere::fibonacci_sphere(samples.max(1)) {
                let c = build_check(kind, p, dp, h, i, epsilon)?;
                if c.in_snm {
                    return Ok(c);
                }
                if best
                    .as_ref()
                    .map_or(true, |b| c.snm_distance < b.snm_distance)
                {
                    best = Some(c);
                }
            }
            Ok(best.expect("sample set is nonempty"))
        }
    }
}

/// Checks that every root of `P′` lies in the intersection region of its
/// slice: isolated roots directly, root spheres through equally spaced
/// probe directions on the i–j great circle. Checks are emitted in
/// canonical root order, so reports are byte-reproducible.
pub fn verify_theorem(
    p: &QPolynomial,
    config: &VerifyConfig,
) -> Result<VerificationReport, Error> {
    let degree = p.degree().unwrap_or(0);
    if degree < 2 {
        return Err(Error::DegreeTooSmall { required: 2 });
    }
    let dp = p.derivative();
    let droots = roots::roots_quaternionic(&dp)?;
    let max_norm = droots
        .isolated
        .iter()
        .map(|h| h.norm())
        .chain(droots.spheres.iter().map(|&(a, b)| a.hypot(b)))
        .fold(0.0, f64::max);
    let epsilon = config
        .epsilon
        .unwrap_or(tol::MEMBERSHIP_EPS * (1.0 + max_norm));

    let mut checks = Vec::new();
    for h in &droots.isolated {
        checks.push(check_point("isolated", p, &dp, *h, epsilon, config.sphere_samples)?);
    }
    for &(a, b) in &droots.spheres {
        for probe in sphere::great_circle_probes(tol::SPHERE_PROBES) {
            let h = probe.embed(a, b);
            checks.push(check_point("sphere_probe", p, &dp, h, epsilon, config.sphere_samples)?);
        }
    }
    let pass = checks.iter().all(|c| c.in_snm);
    Ok(VerificationReport {
        polynomial: p.clone(),
        degree,
        epsilon,
        sphere_samples: config.sphere_samples,
        seed: config.seed,
        derivative_roots: droots,
        checks,
        pass,
    })
}
