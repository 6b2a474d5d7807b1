//! Deterministic sample sets on the imaginary unit sphere.

use crate::quaternion::UnitImaginary;

/// Golden-angle (Fibonacci) lattice of `n` near-uniform directions.
///
/// Deterministic for fixed `n`: repeated calls return identical points,
/// so sampled suprema and sampled membership checks reproduce exactly.
pub fn fibonacci_sphere(n: usize) -> Vec<UnitImaginary> {
    let golden_angle = std::f64::consts::PI * (3.0 - 5.0f64.sqrt());
    (0..n)
        .map(|k| {
            let z = 1.0 - 2.0 * (k as f64 + 0.5) / n as f64;
            let r = (1.0 - z * z).sqrt();
            let theta = golden_angle * k as f64;
            UnitImaginary::new(r * theta.cos(), r * theta.sin(), z)
                .expect("lattice points are unit vectors")
        })
        .collect()
}

/// `count` equally spaced directions on the great circle through i and j:
/// `cos(2πm/count)·i + sin(2πm/count)·j`. Used to probe every slice a
/// root sphere passes through.
pub fn great_circle_probes(count: usize) -> Vec<UnitImaginary> {
    (0..count)
        .map(|m| {
            let angle = 2.0 * std::f64::consts::PI * m as f64 / count as f64;
            UnitImaginary::new(angle.cos(), angle.sin(), 0.0)
                .expect("circle points are unit vectors")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_is_deterministic_and_unit() {
        let a = fibonacci_sphere(500);
        let b = fibonacci_sphere(500);
        assert_eq!(a.len(), 500);
        for (p, q) in a.iter().zip(&b) {
            assert_eq!(p.components(), q.components());
            let [x, y, z] = p.components();
            assert!(((x * x + y * y + z * z) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn lattice_covers_all_octants() {
        let pts = fibonacci_sphere(2000);
        let mut seen = [false; 8];
        for p in &pts {
            let [x, y, z] = p.components();
            let idx = (x > 0.0) as usize | ((y > 0.0) as usize) << 1 | ((z > 0.0) as usize) << 2;
            seen[idx] = true;
        }
        assert!(seen.iter().all(|&s| s), "octant coverage {seen:?}");
    }

    #[test]
    fn lattice_covering_radius_is_small() {
        // Every direction should have a lattice point nearby; for n = 2000
        // the covering radius is well under 0.1 in chordal distance.
        let pts = fibonacci_sphere(2000);
        let targets: [[f64; 3]; 5] = [
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.0, 0.0, 1.0],
            [-0.577, 0.577, -0.577],
            [0.2, -0.3, 0.933],
        ];
        for t in targets {
            let n = (t[0] * t[0] + t[1] * t[1] + t[2] * t[2]).sqrt();
            let best = pts
                .iter()
                .map(|p| {
                    let [x, y, z] = p.components();
                    ((x - t[0] / n).powi(2) + (y - t[1] / n).powi(2) + (z - t[2] / n).powi(2))
                        .sqrt()
                })
                .fold(f64::INFINITY, f64::min);
            assert!(best < 0.1, "no sample near {t:?}: nearest {best}");
        }
    }

    #[test]
    fn probes_lie_on_the_ij_circle() {
        let probes = great_circle_probes(8);
        assert_eq!(probes.len(), 8);
        assert_eq!(probes[0], UnitImaginary::I);
        let to_j = probes[2].as_quaternion() - UnitImaginary::J.as_quaternion();
        assert!(to_j.norm() < 1e-15, "{:?}", probes[2]);
        for p in &probes {
            assert_eq!(p.components()[2], 0.0);
        }
    }
}
