//! Simultaneous-iteration complex root finder (Aberth–Ehrlich).
//!
//! Finds all roots of a complex-coefficient polynomial at once: every
//! approximation takes a Newton step corrected by the repulsion of the
//! other approximations, which keeps them from collapsing onto the same
//! root. Degrees one and two use closed forms. Exact-enough zeros at the
//! origin are factored out before iterating.

use num_complex::Complex64;

use crate::error::Error;
use crate::tol;

/// All roots (with multiplicity) of `Σ cₜ zᵗ`, ascending coefficients.
///
/// A constant polynomial has no roots and yields an empty list; the zero
/// polynomial is rejected. Results are sorted by real part, then
/// imaginary part, so equal inputs produce identical output orderings.
pub fn complex_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>, Error> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    let scale = c.iter().map(|a| a.norm()).fold(0.0, f64::max);
    if scale == 0.0 || c.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let cutoff = tol::COEFF_STRIP * scale;
    while c.last().is_some_and(|a| a.norm() <= cutoff) {
        c.pop();
    }
    if c.len() <= 1 {
        return Ok(Vec::new());
    }

    // Factor out roots at the origin while the constant term is negligible.
    let mut roots = Vec::with_capacity(c.len() - 1);
    while c.len() > 1 && c[0].norm() <= cutoff {
        roots.push(Complex64::ZERO);
        c.remove(0);
    }

    match c.len() {
        1 => {}
        2 => roots.push(-c[0] / c[1]),
        3 => roots.extend(quadratic_roots(c[0], c[1], c[2])),
        _ => roots.extend(aberth(&c)?),
    }

    roots.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
    Ok(roots)
}

/// Magnitude bound `Σ |cₜ| max(1,|z|)ᵗ` used to scale residual tests at a
/// point. The round-off floor of Horner evaluation is a small multiple of
/// machine epsilon times this quantity.
pub fn residual_scale(coeffs: &[Complex64], z: Complex64) -> f64 {
    let m = z.norm().max(1.0);
    let mut power = 1.0;
    let mut sum = 0.0;
    for a in coeffs {
        sum += a.norm() * power;
        power *= m;
    }
    sum
}

/// Roots of `c2 z² + c1 z + c0`, computed in the cancellation-safe form:
/// the larger root comes from `-(b + s)/2a` with the sign of `s = ±√disc`
/// chosen to avoid subtracting nearly equal values, the other from the
/// root product.
fn quadratic_roots(c0: Complex64, c1: Complex64, c2: Complex64) -> [Complex64; 2] {
    let disc = c1 * c1 - 4.0 * c2 * c0;
    let mut s = disc.sqrt();
    if (c1.conj() * s).re < 0.0 {
        s = -s;
    }
    let q = -0.5 * (c1 + s);
    if q.norm() == 0.0 {
        // c1 = 0 and disc = 0: a double root at the origin of the shifted
        // equation; both roots coincide.
        let r = (-c0 / c2).sqrt();
        return [-r, r];
    }
    [q / c2, c0 / q]
}

fn eval_with_derivative(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::ZERO;
    let mut dp = Complex64::ZERO;
    for a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn eval_with_two_derivatives(c: &[Complex64], z: Complex64) -> (Complex64, Complex64, Complex64) {
    let mut p = Complex64::ZERO;
    let mut dp = Complex64::ZERO;
    let mut ddp = Complex64::ZERO;
    for a in c.iter().rev() {
        ddp = ddp * z + 2.0 * dp;
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp, ddp)
}

/// A few Newton steps on `u = p/p′`, whose zeros are the zeros of `p` with
/// multiplicity one. This sharpens multiple roots — which plain residual
/// acceptance can only locate to about the square root of machine
/// precision — down to the evaluation noise floor.
fn polish(c: &[Complex64], start: Complex64) -> Complex64 {
    let mut z = start;
    for _ in 0..4 {
        let (p, dp, ddp) = eval_with_two_derivatives(c, z);
        let denom = dp * dp - p * ddp;
        if denom.norm() == 0.0 {
            break;
        }
        let step = p * dp / denom;
        if !step.is_finite() || step.norm() > 0.1 * (1.0 + z.norm()) {
            break;
        }
        z -= step;
        if step.norm() <= 1e-16 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

/// Aberth–Ehrlich iteration for degree ≥ 3 with nonzero constant term.
fn aberth(c: &[Complex64]) -> Result<Vec<Complex64>, Error> {
    let n = c.len() - 1;
    let lead = c[n].norm();
    // Coefficient-norm root bound; every root lies inside this circle, so
    // it is a sound spread for initial guesses.
    let radius = (c.iter().map(|a| a.norm_sqr()).sum::<f64>()).sqrt() / lead;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.5;
            Complex64::from_polar(radius, angle)
        })
        .collect();
    let mut done = vec![false; n];

    for _ in 0..tol::MAX_SOLVER_ITERATIONS {
        let mut moved = 0.0f64;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (p, dp) = eval_with_derivative(c, z[k]);
            if p.norm() <= 1e-2 * tol::ROOT_RESIDUAL * residual_scale(c, z[k]) {
                done[k] = true;
                continue;
            }
            let newton = if dp.norm() == 0.0 {
                // Stationary point of the polynomial: nudge off it.
                Complex64::new(1e-8 * (1.0 + z[k].norm()), 0.0)
            } else {
                p / dp
            };
            let repulsion: Complex64 = (0..n)
                .filter(|&m| m != k)
                .map(|m| {
                    let d = z[k] - z[m];
                    if d.norm() == 0.0 {
                        Complex64::new(1e12, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() <= 1e-12 { newton } else { newton / denom };
            z[k] -= step;
            moved = moved.max(step.norm() / (1.0 + z[k].norm()));
        }
        if done.iter().all(|&d| d) || moved <= 1e-16 {
            break;
        }
    }

    for zk in z.iter_mut() {
        *zk = polish(c, *zk);
        let (p, _) = eval_with_derivative(c, *zk);
        if p.norm() > tol::ROOT_RESIDUAL * residual_scale(c, *zk) {
            return Err(Error::NonConvergence {
                iterations: tol::MAX_SOLVER_ITERATIONS,
            });
        }
    }
    Ok(z)
}
