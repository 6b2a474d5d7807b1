//! Seeded random instances for property suites and stress runs.
//!
//! Everything routes through a counter-based generator seeded from a
//! 64-bit integer, so identical seeds give identical instances on every
//! platform and run.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::qpoly::QPolynomial;
use crate::quaternion::{Quaternion, UnitImaginary};

/// Uniform sample from the closed quaternion ball of the given radius,
/// by rejection from the enclosing cube.
pub fn random_quaternion_in_ball(rng: &mut impl Rng, radius: f64) -> Quaternion {
    loop {
        let q = Quaternion::new(
            rng.random_range(-radius..=radius),
            rng.random_range(-radius..=radius),
            rng.random_range(-radius..=radius),
            rng.random_range(-radius..=radius),
        );
        if q.norm() <= radius {
            return q;
        }
    }
}

/// Uniform random direction on the imaginary unit sphere.
pub fn random_unit_imaginary(rng: &mut impl Rng) -> UnitImaginary {
    loop {
        let x = rng.random_range(-1.0f64..=1.0);
        let y = rng.random_range(-1.0f64..=1.0);
        let z = rng.random_range(-1.0f64..=1.0);
        let n = (x * x + y * y + z * z).sqrt();
        if n <= 1.0 {
            if let Ok(u) = UnitImaginary::new(x, y, z) {
                return u;
            }
        }
    }
}

/// Random polynomial of exactly the requested degree: coefficients drawn
/// independently and uniformly from the ball of radius `coeff_scale`, the
/// leading coefficient redrawn until its norm is at least
/// `0.1 · coeff_scale` so the degree cannot collapse. Deterministic per
/// seed.
pub fn random_polynomial(seed: u64, degree: usize, coeff_scale: f64) -> QPolynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs: Vec<Quaternion> = (0..=degree)
        .map(|_| random_quaternion_in_ball(&mut rng, coeff_scale))
        .collect();
    while coeffs[degree].norm() < 0.1 * coeff_scale {
        coeffs[degree] = random_quaternion_in_ball(&mut rng, coeff_scale);
    }
    QPolynomial::new(coeffs)
}
