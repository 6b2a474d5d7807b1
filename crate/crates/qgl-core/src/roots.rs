//! Quaternionic root sets: slice roots, the companion polynomial, and
//! sphere resolution.
//!
//! The zero set of a one-sided polynomial is a finite union of isolated
//! points and whole 2-spheres `{α + βI}` (x²+1 vanishes on the entire
//! imaginary unit sphere). The companion polynomial `P ⋆ P̄` has real
//! coefficients and its complex roots, folded to the upper half-plane,
//! enumerate the candidate spheres; evaluating `P(α+βI) = A + B·I` on a
//! candidate decides whether the whole sphere vanishes or only the single
//! point `α + β·(−B⁻¹A)`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Error;
use crate::qpoly::{QPolynomial, SlicePolynomial};
use crate::quaternion::{Quaternion, SliceComplex, UnitImaginary};
use crate::solver;
use crate::tol;

/// The zero set of a quaternionic polynomial: isolated points plus whole
/// root spheres `(α, β)` standing for `{α + βI : I ∈ 𝒮}`.
///
/// Both lists are deduplicated and canonically sorted; no isolated entry
/// lies on a listed sphere.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct RootSetH {
    pub isolated: Vec<Quaternion>,
    pub spheres: Vec<(f64, f64)>,
}

impl RootSetH {
    pub fn is_empty(&self) -> bool {
        self.isolated.is_empty() && self.spheres.is_empty()
    }

    /// Distance from `h` to the nearest recorded root (point or sphere).
    pub fn distance(&self, h: &Quaternion) -> f64 {
        let to_points = self
            .isolated
            .iter()
            .map(|g| (*g - *h).norm())
            .fold(f64::INFINITY, f64::min);
        let im = h.im().norm();
        let to_spheres = self
            .spheres
            .iter()
            .map(|&(a, b)| ((h.w - a).powi(2) + (im - b).powi(2)).sqrt())
            .fold(f64::INFINITY, f64::min);
        to_points.min(to_spheres)
    }

    pub fn contains_point(&self, h: &Quaternion, eps: f64) -> bool {
        self.distance(h) <= eps
    }
}

/// All roots of a slice polynomial in its own chart.
///
/// The zero polynomial vanishes identically and is rejected; the caller
/// decides what "all of the plane" means for it.
pub fn roots_in_slice(s: &SlicePolynomial) -> Result<Vec<SliceComplex>, Error> {
    let roots = solver::complex_roots(s.coeffs())?;
    Ok(roots
        .into_iter()
        .map(|z| SliceComplex::from_complex(z, s.slice()))
        .collect())
}

/// Coefficients of the companion polynomial `P ⋆ P̄` (star product with
/// central variable): `fₛ = Σₜ aₜ·conj(a_{s−t})`. The sum pairs each term
/// with its conjugate, so the result is real; floating-point dust in the
/// imaginary components is discarded.
pub fn companion_polynomial(p: &QPolynomial) -> Vec<f64> {
    let n = match p.degree() {
        Some(n) => n,
        None => return Vec::new(),
    };
    (0..=2 * n)
        .map(|s| {
            let mut acc = Quaternion::ZERO;
            for t in s.saturating_sub(n)..=s.min(n) {
                acc = acc + p.coeff(t) * p.coeff(s - t).conj();
            }
            acc.w
        })
        .collect()
}

/// What a candidate root sphere `(α, β)` turned out to be.
#[derive(Debug, Clone, PartialEq)]
pub enum SphereResolution {
    /// `P` vanishes on the whole sphere `{α + βI}`.
    Spherical,
    /// `P` vanishes at exactly this point of the sphere.
    Isolated(Quaternion),
    /// No zero on the sphere.
    NoRoot,
}

/// Decides a candidate sphere by writing `P(α + βI) = A + B·I` with `A`,
/// `B` independent of `I`: both negligible means the whole sphere
/// vanishes; otherwise the only possible zero is at `I* = −B⁻¹A`, which
/// must come out a unit imaginary.
pub fn sphere_resolve(p: &QPolynomial, alpha: f64, beta: f64) -> SphereResolution {
    let z = Complex64::new(alpha, beta);
    let mut power = Complex64::new(1.0, 0.0);
    let mut a = Quaternion::ZERO;
    let mut b = Quaternion::ZERO;
    for coeff in p.coeffs() {
        a = a + *coeff * power.re;
        b = b + *coeff * power.im;
        power *= z;
    }
    let here = Quaternion::new(alpha, beta, 0.0, 0.0);
    let scale = tol::SPHERE_CLASSIFY * (1.0 + p.evaluation_scale(&here));
    if a.norm() <= scale && b.norm() <= scale {
        return SphereResolution::Spherical;
    }
    if b.norm() <= scale {
        return SphereResolution::NoRoot;
    }
    let i_star = -(b.inverse().expect("checked above tolerance") * a);
    if i_star.w.abs() > tol::SPHERE_CLASSIFY * (1.0 + i_star.norm())
        || (i_star.norm() - 1.0).abs() > tol::SPHERE_CLASSIFY
    {
        return SphereResolution::NoRoot;
    }
    let dir = UnitImaginary::new(i_star.x, i_star.y, i_star.z)
        .expect("norm within tolerance of one");
    SphereResolution::Isolated(dir.embed(alpha, beta))
}

/// Folds companion roots to the closed upper half-plane and groups them
/// into candidate spheres `(α, |β|)` by greedy clustering at the sphere
/// grouping tolerance. Each cluster reports its mean, which cancels the
/// symmetric splitting of multiple roots under floating point.
fn candidate_spheres(roots: &[Complex64]) -> Vec<(f64, f64)> {
    let mut folded: Vec<(f64, f64)> = roots.iter().map(|z| (z.re, z.im.abs())).collect();
    folded.sort_by(|x, y| x.partial_cmp(y).unwrap());
    // Running sums (Σa, Σb, count) per cluster; each point joins the first
    // cluster whose mean it sits next to. Checking every cluster (not just
    // the previous one) matters: points of two spheres sharing a real part
    // interleave under lexicographic order.
    let mut clusters: Vec<(f64, f64, f64)> = Vec::new();
    for (a, b) in folded {
        let found = clusters.iter_mut().find(|(sa, sb, n)| {
            let (ca, cb) = (*sa / *n, *sb / *n);
            (a - ca).abs() + (b - cb).abs() <= tol::SPHERE_GROUP * (1.0 + ca.hypot(cb))
        });
        match found {
            Some((sa, sb, n)) => {
                *sa += a;
                *sb += b;
                *n += 1.0;
            }
            None => clusters.push((a, b, 1.0)),
        }
    }
    clusters.into_iter().map(|(sa, sb, n)| (sa / n, sb / n)).collect()
}

/// Full quaternionic root set via the companion polynomial.
///
/// Candidates with negligible imaginary part are real candidates and are
/// accepted by a direct residual check; the rest go through
/// [`sphere_resolve`]. Results are deduplicated (isolated points lying on
/// a reported sphere are dropped as subsumed) and canonically sorted.
/// Clusters of companion-root multiplicity three and higher can split
/// beyond the grouping tolerance in floating point; such polynomials
/// (e.g. a spherical root colliding with an isolated one) are outside
/// this function's accuracy envelope.
pub fn roots_quaternionic(p: &QPolynomial) -> Result<RootSetH, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(RootSetH::default());
    }
    let f: Vec<Complex64> = companion_polynomial(p)
        .into_iter()
        .map(|c| Complex64::new(c, 0.0))
        .collect();
    let froots = solver::complex_roots(&f)?;

    let mut isolated: Vec<Quaternion> = Vec::new();
    let mut spheres: Vec<(f64, f64)> = Vec::new();
    for (alpha, beta) in candidate_spheres(&froots) {
        if beta <= tol::SPHERE_GROUP * (1.0 + alpha.hypot(beta)) {
            let h = Quaternion::from_real(alpha);
            if p.evaluate(&h).norm() <= tol::QROOT_RESIDUAL * (1.0 + p.evaluation_scale(&h)) {
                isolated.push(h);
            }
        } else {
            match sphere_resolve(p, alpha, beta) {
                SphereResolution::Spherical => spheres.push((alpha, beta)),
                SphereResolution::Isolated(h) => isolated.push(h),
                SphereResolution::NoRoot => {}
            }
        }
    }

    spheres.sort_by(|x, y| x.partial_cmp(y).unwrap());
    isolated.sort_by(|x, y| x.components().partial_cmp(&y.components()).unwrap());
    let mut deduped: Vec<Quaternion> = Vec::new();
    for h in isolated {
        let eps = tol::SPHERE_GROUP * (1.0 + h.norm());
        let on_sphere = spheres
            .iter()
            .any(|&(a, b)| (h.w - a).abs() + (h.im().norm() - b).abs() <= eps);
        let duplicate = deduped.iter().any(|g| (*g - h).norm() <= eps);
        if !on_sphere && !duplicate {
            deduped.push(h);
        }
    }

    Ok(RootSetH { isolated: deduped, spheres })
}

/// Roots shared by the two projections of a polynomial in one slice:
/// roots of the first input matched pairwise (within `eps`) to roots of
/// the second. A zero input vanishes everywhere, so the other input's
/// full root set is the intersection; both zero means the whole plane,
/// reported as the [`Error::WholePlane`] sentinel.
pub fn common_roots(
    p_i: &SlicePolynomial,
    q_i: &SlicePolynomial,
    eps: f64,
) -> Result<Vec<SliceComplex>, Error> {
    match (p_i.is_zero(), q_i.is_zero()) {
        (true, true) => Err(Error::WholePlane),
        (true, false) => roots_in_slice(q_i),
        (false, true) => roots_in_slice(p_i),
        (false, false) => {
            let pr = roots_in_slice(p_i)?;
            let qr = roots_in_slice(q_i)?;
            let mut unused: Vec<Complex64> = qr.iter().map(|r| r.to_complex()).collect();
            let mut out = Vec::new();
            for r in pr {
                let rz = r.to_complex();
                let nearest = unused
                    .iter()
                    .enumerate()
                    .map(|(idx, q)| (idx, (*q - rz).norm()))
                    .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap());
                if let Some((idx, d)) = nearest {
                    if d <= eps {
                        out.push(r);
                        unused.swap_remove(idx);
                    }
                }
            }
            Ok(out)
        }
    }
}
