//! One-sided polynomials over the quaternions and their slice projections.
//!
//! Coefficients sit on the left of the variable powers: `P(h) = Σ aₜ hᵗ`.
//! Because coefficients do not commute past `h`, evaluation accumulates
//! powers on the right. Projecting each coefficient orthogonally onto a
//! slice plane splits `P = P_I + J·Q_I` with `P_I`, `Q_I` genuinely
//! complex polynomials in the slice chart.

use std::fmt;

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::quaternion::{Quaternion, SliceBasis, SliceComplex, UnitImaginary};
use crate::tol;

/// A polynomial `Σ aₜ hᵗ` with quaternion coefficients on the left.
///
/// Coefficients are stored in ascending degree and stripped of high-order
/// entries that are negligible relative to the largest coefficient. The
/// zero polynomial is representable (empty coefficient list) and reports
/// degree `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct QPolynomial {
    coeffs: Vec<Quaternion>,
}

impl QPolynomial {
    /// Builds a polynomial from ascending coefficients, stripping leading
    /// (high-order) coefficients with norm at most `1e-12` times the
    /// largest coefficient norm. An empty or all-negligible list yields
    /// the zero polynomial.
    pub fn new(mut coeffs: Vec<Quaternion>) -> QPolynomial {
        let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let cutoff = tol::COEFF_STRIP * scale;
        while coeffs.last().is_some_and(|c| c.norm() <= cutoff) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn zero() -> QPolynomial {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Quaternion) -> QPolynomial {
        QPolynomial::new(vec![c])
    }

    /// Convenience constructor from `[w, x, y, z]` component rows in
    /// ascending degree.
    pub fn from_components(rows: &[[f64; 4]]) -> QPolynomial {
        QPolynomial::new(
            rows.iter()
                .map(|&[w, x, y, z]| Quaternion::new(w, x, y, z))
                .collect(),
        )
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `hᵗ`; zero beyond the degree.
    pub fn coeff(&self, t: usize) -> Quaternion {
        self.coeffs.get(t).copied().unwrap_or(Quaternion::ZERO)
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<Quaternion> {
        self.coeffs.last().copied()
    }

    /// Largest coefficient norm; 0 for the zero polynomial. Used to scale
    /// residual and stripping tolerances.
    pub fn coefficient_scale(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Evaluates `Σ aₜ hᵗ` by Horner recursion `acc ← acc·h + aₜ` from the
    /// top coefficient down, which keeps every coefficient to the left of
    /// the accumulated powers.
    pub fn evaluate(&self, h: &Quaternion) -> Quaternion {
        let mut acc = Quaternion::ZERO;
        for a in self.coeffs.iter().rev() {
            acc = acc * *h + *a;
        }
        acc
    }

    /// Upper bound `Σ ‖aₜ‖ max(1,‖h‖)ᵗ` on the evaluation magnitude,
    /// used to scale residual tolerances at a point.
    pub fn evaluation_scale(&self, h: &Quaternion) -> f64 {
        let m = h.norm().max(1.0);
        let mut power = 1.0;
        let mut sum = 0.0;
        for a in &self.coeffs {
            sum += a.norm() * power;
            power *= m;
        }
        sum
    }

    /// Derivative `Σ t·aₜ hᵗ⁻¹`; constants differentiate to zero.
    pub fn derivative(&self) -> QPolynomial {
        if self.coeffs.len() <= 1 {
            return QPolynomial::zero();
        }
        QPolynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(t, a)| *a * (t + 1) as f64)
                .collect(),
        )
    }

    /// Coefficient-wise quaternion conjugate.
    pub fn conj(&self) -> QPolynomial {
        QPolynomial::new(self.coeffs.iter().map(Quaternion::conj).collect())
    }

    /// Splits `P = P_I + J·Q_I` along the slice of `I` by decomposing each
    /// coefficient in the canonical basis of the slice. `P_I` carries the
    /// in-plane parts, `Q_I` the complement parts (so that the complement
    /// polynomial is `J·Q_I`).
    pub fn project(&self, slice: UnitImaginary) -> SliceProjection {
        let basis = SliceBasis::canonical(slice);
        self.project_with(basis)
    }

    /// Same split with an explicitly chosen slice basis.
    pub fn project_with(&self, basis: SliceBasis) -> SliceProjection {
        let mut plane = Vec::with_capacity(self.coeffs.len());
        let mut complement = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (z1, z2) = basis.decompose(a);
            plane.push(z1.to_complex());
            complement.push(z2.to_complex());
        }
        // Zero/degree decisions for a projection are relative to the
        // source polynomial: a chart that is pure rounding dust of the
        // decomposition is the zero projection, not a tiny polynomial.
        let cutoff = tol::COEFF_STRIP * self.coefficient_scale();
        for chart in [&mut plane, &mut complement] {
            while chart.last().is_some_and(|c| c.norm() <= cutoff) {
                chart.pop();
            }
        }
        SliceProjection {
            p_i: SlicePolynomial::new(plane, basis.i(), None),
            q_i: SlicePolynomial::new(complement, basis.i(), Some(basis.j())),
            basis,
        }
    }
}

impl fmt::Display for QPolynomial {
    /// Descending-degree text form, e.g. `(1+0i+0j+0k)x^2 + (0+1i+0j+0k)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (pos, (t, a)) in self.coeffs.iter().enumerate().rev().enumerate() {
            if pos > 0 {
                write!(f, " + ")?;
            }
            write!(f, "(")?;
            fmt::Display::fmt(a, f)?;
            write!(f, ")")?;
            match t {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{t}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for QPolynomial {
    /// Serializes as `{"coeffs": [[w,x,y,z], ...]}` in ascending degree.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("QPolynomial", 1)?;
        s.serialize_field("coeffs", &self.coeffs)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            coeffs: Vec<Quaternion>,
        }
        Ok(QPolynomial::new(Raw::deserialize(deserializer)?.coeffs))
    }
}

/// The result of projecting a polynomial onto a slice: the in-plane part
/// `P_I`, the complement factor `Q_I` (the full complement is `J·Q_I`),
/// and the basis whose `J` ties them together.
#[derive(Debug, Clone)]
pub struct SliceProjection {
    pub p_i: SlicePolynomial,
    pub q_i: SlicePolynomial,
    pub basis: SliceBasis,
}

impl SliceProjection {
    /// The orthogonal unit `J` with `P = P_I + J·Q_I`.
    pub fn j(&self) -> UnitImaginary {
        self.basis.j()
    }
}

/// A polynomial with coefficients in a single slice plane, stored in chart
/// coordinates (`a + I b ↦ a + i b`). An optional prefactor `J` marks the
/// complement polynomials `J·Q_I`; it scales nothing (|J·q| = |q|) but is
/// needed to reconstruct quaternion values.
#[derive(Debug, Clone, PartialEq)]
pub struct SlicePolynomial {
    coeffs: Vec<Complex64>,
    slice: UnitImaginary,
    prefactor: Option<UnitImaginary>,
}

impl SlicePolynomial {
    /// Builds from ascending chart coefficients, stripping negligible
    /// high-order entries exactly like [`QPolynomial::new`].
    pub fn new(
        mut coeffs: Vec<Complex64>,
        slice: UnitImaginary,
        prefactor: Option<UnitImaginary>,
    ) -> SlicePolynomial {
        let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let cutoff = tol::COEFF_STRIP * scale;
        while coeffs.last().is_some_and(|c| c.norm() <= cutoff) {
            coeffs.pop();
        }
        SlicePolynomial { coeffs, slice, prefactor }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn slice(&self) -> UnitImaginary {
        self.slice
    }

    pub fn prefactor(&self) -> Option<UnitImaginary> {
        self.prefactor
    }

    /// Chart coefficient of `xᵗ`; zero beyond the degree.
    pub fn coeff(&self, t: usize) -> Complex64 {
        self.coeffs.get(t).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `xᵗ` as a point of the slice plane.
    pub fn coeff_in_slice(&self, t: usize) -> SliceComplex {
        SliceComplex::from_complex(self.coeff(t), self.slice)
    }

    pub fn coefficient_scale(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Chart-coordinate evaluation (ignores the prefactor).
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Quaternion value at the slice point `z`, including the prefactor:
    /// `J·Q_I(z)` when `J` is present, `P_I(z)` otherwise.
    pub fn evaluate_embedded(&self, z: Complex64) -> Quaternion {
        let v = SliceComplex::from_complex(self.evaluate(z), self.slice).to_quaternion();
        match self.prefactor {
            Some(j) => j.as_quaternion() * v,
            None => v,
        }
    }

    /// Derivative in the chart; keeps slice and prefactor.
    pub fn derivative(&self) -> SlicePolynomial {
        if self.coeffs.len() <= 1 {
            return SlicePolynomial::new(Vec::new(), self.slice, self.prefactor);
        }
        SlicePolynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(t, c)| c * (t + 1) as f64)
                .collect(),
            self.slice,
            self.prefactor,
        )
    }

    /// Re-embeds into a quaternion polynomial (applying the prefactor).
    pub fn to_qpolynomial(&self) -> QPolynomial {
        QPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let q = SliceComplex::from_complex(*c, self.slice).to_quaternion();
                    match self.prefactor {
                        Some(j) => j.as_quaternion() * q,
                        None => q,
                    }
                })
                .collect(),
        )
    }
}

impl fmt::Display for SlicePolynomial {
    /// Descending-degree text form with `I` for the slice unit, e.g.
    /// `x^3 + (-9-12I)x^2 + (-21+64I)x + (85-20I)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let write_num = |f: &mut fmt::Formatter<'_>, v: f64| match f.precision() {
            Some(p) => write!(f, "{v:.p$}"),
            None => write!(f, "{v}"),
        };
        if let Some(j) = self.prefactor {
            write!(f, "[J={}]·(", j.as_quaternion())?;
        }
        for (pos, (t, c)) in self.coeffs.iter().enumerate().rev().enumerate() {
            if pos > 0 {
                write!(f, " + ")?;
            }
            write!(f, "(")?;
            write_num(f, c.re)?;
            write!(f, "{}", if c.im.is_sign_negative() { "-" } else { "+" })?;
            write_num(f, c.im.abs())?;
            write!(f, "I)")?;
            match t {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{t}")?,
            }
        }
        if self.prefactor.is_some() {
            write!(f, ")")?;
        }
        Ok(())
    }
}
