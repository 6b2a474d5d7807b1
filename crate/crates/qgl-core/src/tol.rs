//! Numeric tolerance knobs, collected in one place.
//!
//! Everything here is a documented policy constant rather than a magic
//! number buried in an algorithm. Tolerances written as "relative" are
//! multiplied by a context scale (1 + data magnitude) at the use site.

/// A quaternion counts as zero when its norm is at or below this times
/// (1 + context scale). Floating-point projections of exact data leave
/// ~1e-16 dust; this absorbs it.
pub const ZERO: f64 = 1e-12;

/// Relative threshold for stripping leading near-zero polynomial
/// coefficients before computing the degree.
pub const COEFF_STRIP: f64 = 1e-12;

/// When the probe vector j is this close to the slice plane, the basis
/// construction falls back to probing with k.
pub const PROBE_FALLBACK: f64 = 1e-8;

/// Residual acceptance for slice-polynomial roots, relative to the
/// coefficient scale at the root.
pub const ROOT_RESIDUAL: f64 = 1e-9;

/// Iteration cap for the simultaneous-iteration root solver.
pub const MAX_SOLVER_ITERATIONS: u32 = 200;

/// Residual acceptance for quaternionic roots recovered through the
/// companion polynomial, relative to the evaluation scale at the root.
/// One order looser than the slice solver's own acceptance: folding,
/// grouping, and sphere resolution each lose a little accuracy.
pub const QROOT_RESIDUAL: f64 = 1e-8;

/// Two companion-polynomial roots belong to the same candidate sphere when
/// |re - re'| + ||im| - |im'|| is at or below this times (1 + |z|).
pub const SPHERE_GROUP: f64 = 1e-7;

/// Relative tolerance used when classifying a candidate sphere: the A and B
/// coefficients of P(a + bI) = A + B I count as zero below this times the
/// evaluation scale, and the derived direction must be unit imaginary to
/// within this tolerance.
pub const SPHERE_CLASSIFY: f64 = 1e-6;

/// Default base epsilon for hull membership; effective epsilon is this
/// times (1 + max root norm).
pub const MEMBERSHIP_EPS: f64 = 1e-6;

/// Collinearity threshold for hull degeneracy classification, relative to
/// the bounding-box diagonal.
pub const COLLINEAR: f64 = 1e-12;

/// Default number of Fibonacci-lattice sample directions on the imaginary
/// unit sphere.
pub const DEFAULT_SPHERE_SAMPLES: usize = 2000;

/// Local-search steps used when refining a sampled supremum over the
/// imaginary unit sphere.
pub const REFINE_STEPS: usize = 50;

/// Number of probe directions used when a whole root sphere must be checked
/// for membership, spaced on the great circle through i and j.
pub const SPHERE_PROBES: usize = 8;
