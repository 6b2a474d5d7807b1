//! Root-norm bounds from coefficient norms.
//!
//! `coefficient_bound_c` is the classical Carmichael–Mason-style bound
//! `‖aₙ‖⁻¹·√(Σₜ‖aₜ‖²)`: every root of the polynomial has modulus at most
//! this value, and constants (no roots to bound) get `+∞`. Taking the
//! bound of both slice projections and combining over all slices yields
//! two global bounds on where derivative roots can live: the larger one
//! from the snail hulls alone, the smaller one from their intersections.

use crate::qpoly::{QPolynomial, SlicePolynomial};
use crate::quaternion::{SliceBasis, UnitImaginary};
use crate::sphere;
use crate::tol;

fn bound_from_norms(norms: &[f64]) -> f64 {
    if norms.len() < 2 {
        return f64::INFINITY;
    }
    let sum_sq: f64 = norms.iter().map(|n| n * n).sum();
    sum_sq.sqrt() / norms[norms.len() - 1]
}

/// Coefficient-norm root bound `C`: `+∞` for constants (including the
/// zero polynomial), else `‖aₙ‖⁻¹·√(Σₜ‖aₜ‖²)`. Finite values are always
/// ≥ 1 because the leading term contributes `‖aₙ‖²` to the sum.
pub fn coefficient_bound_c(p: &QPolynomial) -> f64 {
    let norms: Vec<f64> = p.coeffs().iter().map(|a| a.norm()).collect();
    bound_from_norms(&norms)
}

/// [`coefficient_bound_c`] for a slice polynomial. A unit prefactor does
/// not change coefficient norms, so the chart coefficients carry the
/// whole computation.
pub fn coefficient_bound_c_slice(s: &SlicePolynomial) -> f64 {
    let norms: Vec<f64> = s.coeffs().iter().map(|c| c.norm()).collect();
    bound_from_norms(&norms)
}

/// Estimates `sup` of a function on the sphere of imaginary units from
/// below: scan a Fibonacci lattice of the given size, then refine the
/// best sample by compass ascent in the tangent plane with a shrinking
/// step. Every reported value is a true function value, so the estimate
/// never exceeds the supremum.
fn supremum_on_sphere(objective: impl Fn(UnitImaginary) -> f64, samples: usize) -> f64 {
    let mut best_dir = UnitImaginary::I;
    let mut best = f64::NEG_INFINITY;
    for dir in sphere::fibonacci_sphere(samples.max(1)) {
        let v = objective(dir);
        if v > best {
            best = v;
            best_dir = dir;
        }
    }
    if !best.is_finite() {
        return best;
    }
    let mut delta = 0.15;
    for _ in 0..tol::REFINE_STEPS {
        // Walk greedily at this scale until no tangent move improves.
        for _ in 0..64 {
            let basis = SliceBasis::canonical(best_dir);
            let mut moved = false;
            for tangent in [basis.j().as_quaternion(), basis.k().as_quaternion()] {
                for sign in [1.0, -1.0] {
                    let q = best_dir.as_quaternion() + tangent * (sign * delta);
                    let Ok(cand) = UnitImaginary::new(q.x, q.y, q.z) else {
                        continue;
                    };
                    let v = objective(cand);
                    if v > best {
                        best = v;
                        best_dir = cand;
                        moved = true;
                    }
                }
            }
            if !moved {
                break;
            }
        }
        delta *= 0.7;
    }
    best
}

/// Lower estimate of `sup_I C(P_I)`: the radius of a ball containing
/// every snail hull. Constants and the zero polynomial give `+∞`.
pub fn bound_snail(p: &QPolynomial, samples: usize) -> f64 {
    supremum_on_sphere(|i| coefficient_bound_c_slice(&p.project(i).p_i), samples)
}

/// Lower estimate of `sup_I min(C(P_I), C(P_I⊥))`: the radius of a ball
/// containing every snail-intersection set, and hence every derivative
/// root. A vanishing projection contributes `+∞`, so the min falls back
/// to the surviving side.
pub fn bound_snm(p: &QPolynomial, samples: usize) -> f64 {
    supremum_on_sphere(
        |i| {
            let proj = p.project(i);
            coefficient_bound_c_slice(&proj.p_i).min(coefficient_bound_c_slice(&proj.q_i))
        },
        samples,
    )
}
