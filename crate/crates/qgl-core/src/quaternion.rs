//! Quaternion arithmetic, the imaginary unit sphere, slice planes, and the
//! orthogonal decomposition of a quaternion along a slice.
//!
//! A slice is the plane spanned by 1 and a unit imaginary direction `I`;
//! it is a subalgebra isomorphic and isometric to the complex numbers.
//! Every quaternion splits uniquely as `z1 + J*z2` with `z1`, `z2` in the
//! slice and `J` a unit imaginary orthogonal to it.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeTuple;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::tol;

/// A quaternion `w + x i + y j + z k` with double-precision components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    pub const fn from_real(w: f64) -> Self {
        Quaternion::new(w, 0.0, 0.0, 0.0)
    }

    /// Real part.
    pub fn re(&self) -> f64 {
        self.w
    }

    /// Imaginary part, as a quaternion with zero real component.
    pub fn im(&self) -> Quaternion {
        Quaternion::new(0.0, self.x, self.y, self.z)
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Squared Euclidean norm; equals `conj(h) * h` as a real number.
    pub fn norm_sq(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Componentwise scalar product of two quaternions.
    pub fn dot(&self, other: &Quaternion) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Multiplicative inverse `conj(h) / norm_sq(h)`.
    ///
    /// Fails with [`Error::ZeroDivision`] when the norm is at or below the
    /// zero tolerance.
    pub fn inverse(&self) -> Result<Quaternion, Error> {
        let n = self.norm_sq();
        if n.sqrt() <= tol::ZERO {
            return Err(Error::ZeroDivision);
        }
        Ok(self.conj() / n)
    }

    pub fn scale(&self, s: f64) -> Quaternion {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    /// True when the norm is at or below `ZERO * (1 + scale)` for the given
    /// context scale.
    pub fn is_zero_within(&self, scale: f64) -> bool {
        self.norm() <= tol::ZERO * (1.0 + scale)
    }

    /// True when the imaginary part is negligible relative to the
    /// quaternion's own magnitude.
    pub fn is_real(&self) -> bool {
        self.im().norm() <= tol::ZERO * (1.0 + self.norm())
    }

    /// The unit imaginary direction `Im(h)/|Im(h)|` of a non-real
    /// quaternion. A real input has no unique slice, so it is rejected and
    /// the caller must iterate over candidate slices explicitly.
    pub fn imaginary_unit(&self) -> Result<UnitImaginary, Error> {
        if self.is_real() {
            return Err(Error::RealInput);
        }
        UnitImaginary::new(self.x, self.y, self.z)
    }

    pub fn components(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product; noncommutative.
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * rhs.w - self.x * rhs.x - self.y * rhs.y - self.z * rhs.z,
            self.w * rhs.x + self.x * rhs.w + self.y * rhs.z - self.z * rhs.y,
            self.w * rhs.y - self.x * rhs.z + self.y * rhs.w + self.z * rhs.x,
            self.w * rhs.z + self.x * rhs.y - self.y * rhs.x + self.z * rhs.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: f64) -> Quaternion {
        self.scale(rhs)
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    fn div(self, rhs: f64) -> Quaternion {
        self.scale(1.0 / rhs)
    }
}

impl fmt::Display for Quaternion {
    /// Text form `w+xi+yj+zk`, honoring an explicit precision if given.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let write_num = |f: &mut fmt::Formatter<'_>, v: f64| match f.precision() {
            Some(p) => write!(f, "{v:.p$}"),
            None => write!(f, "{v}"),
        };
        write_num(f, self.w)?;
        for (v, unit) in [(self.x, "i"), (self.y, "j"), (self.z, "k")] {
            write!(f, "{}", if v.is_sign_negative() { "-" } else { "+" })?;
            write_num(f, v.abs())?;
            write!(f, "{unit}")?;
        }
        Ok(())
    }
}

impl Serialize for Quaternion {
    /// Serializes as the array `[w, x, y, z]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(4)?;
        t.serialize_element(&self.w)?;
        t.serialize_element(&self.x)?;
        t.serialize_element(&self.y)?;
        t.serialize_element(&self.z)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for Quaternion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [w, x, y, z] = <[f64; 4]>::deserialize(deserializer)?;
        Ok(Quaternion::new(w, x, y, z))
    }
}

/// A point of the imaginary unit sphere: zero real part, unit norm.
///
/// Construction normalizes, so the invariants hold exactly up to rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitImaginary {
    x: f64,
    y: f64,
    z: f64,
}

impl UnitImaginary {
    pub const I: UnitImaginary = UnitImaginary { x: 1.0, y: 0.0, z: 0.0 };
    pub const J: UnitImaginary = UnitImaginary { x: 0.0, y: 1.0, z: 0.0 };
    pub const K: UnitImaginary = UnitImaginary { x: 0.0, y: 0.0, z: 1.0 };

    /// Normalizes `(x, y, z)`; fails if the vector is too close to zero.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self, Error> {
        let n = (x * x + y * y + z * z).sqrt();
        if n <= tol::ZERO {
            return Err(Error::InvalidDirection);
        }
        Ok(UnitImaginary { x: x / n, y: y / n, z: z / n })
    }

    /// Accepts a quaternion that is already imaginary and of unit norm, up
    /// to the zero tolerance, and renormalizes it.
    pub fn try_from_quaternion(q: Quaternion) -> Result<Self, Error> {
        if q.w.abs() > tol::ZERO * (1.0 + q.norm()) {
            return Err(Error::InvalidDirection);
        }
        Self::new(q.x, q.y, q.z)
    }

    pub fn as_quaternion(&self) -> Quaternion {
        Quaternion::new(0.0, self.x, self.y, self.z)
    }

    pub fn components(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(&self, other: &UnitImaginary) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// The point `a + b I` of this direction's slice, as a quaternion.
    pub fn embed(&self, a: f64, b: f64) -> Quaternion {
        Quaternion::new(a, b * self.x, b * self.y, b * self.z)
    }

    /// True when `other` spans the same slice plane (equal up to sign).
    pub fn same_slice(&self, other: &UnitImaginary) -> bool {
        let d = self.dot(other).abs();
        (d - 1.0).abs() <= 1e-9
    }
}

impl Neg for UnitImaginary {
    type Output = UnitImaginary;
    fn neg(self) -> UnitImaginary {
        UnitImaginary { x: -self.x, y: -self.y, z: -self.z }
    }
}

impl fmt::Display for UnitImaginary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_quaternion().fmt(f)
    }
}

impl Serialize for UnitImaginary {
    /// Serializes as the array `[x, y, z]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(3)?;
        t.serialize_element(&self.x)?;
        t.serialize_element(&self.y)?;
        t.serialize_element(&self.z)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for UnitImaginary {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = UnitImaginary;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array [x, y, z] with nonzero norm")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let x: f64 = seq.next_element()?.ok_or_else(|| serde::de::Error::invalid_length(0, &self))?;
                let y: f64 = seq.next_element()?.ok_or_else(|| serde::de::Error::invalid_length(1, &self))?;
                let z: f64 = seq.next_element()?.ok_or_else(|| serde::de::Error::invalid_length(2, &self))?;
                UnitImaginary::new(x, y, z).map_err(serde::de::Error::custom)
            }
        }
        deserializer.deserialize_tuple(3, V)
    }
}

/// A point `a + I b` of the slice spanned by 1 and `I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SliceComplex {
    pub a: f64,
    pub b: f64,
    pub slice: UnitImaginary,
}

impl SliceComplex {
    pub fn new(a: f64, b: f64, slice: UnitImaginary) -> Self {
        SliceComplex { a, b, slice }
    }

    pub fn to_quaternion(&self) -> Quaternion {
        self.slice.embed(self.a, self.b)
    }

    /// Chart coordinates under the isometric isomorphism `a + I b -> a + i b`.
    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.a, self.b)
    }

    pub fn from_complex(z: Complex64, slice: UnitImaginary) -> Self {
        SliceComplex::new(z.re, z.im, slice)
    }

    pub fn norm(&self) -> f64 {
        (self.a * self.a + self.b * self.b).sqrt()
    }
}

impl fmt::Display for SliceComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "{:.p$}{}{:.p$}I", self.a, if self.b.is_sign_negative() { "-" } else { "+" }, self.b.abs()),
            None => write!(f, "{}{}{}I", self.a, if self.b.is_sign_negative() { "-" } else { "+" }, self.b.abs()),
        }
    }
}

/// An orthonormal frame `{1, I, J, K}` adapted to the slice of `I`:
/// `J` is orthogonal to the slice plane and `K = I * J`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SliceBasis {
    i: UnitImaginary,
    j: UnitImaginary,
    k: UnitImaginary,
}

impl SliceBasis {
    /// Deterministic basis for the slice of `I`.
    ///
    /// `J` is the Gram-Schmidt normalization of the probe vector j against
    /// `{1, I}`, falling back to probing with k when j is too close to the
    /// slice plane. `J` is not unique; this choice is just reproducible.
    pub fn canonical(slice: UnitImaginary) -> SliceBasis {
        let i = slice.as_quaternion();
        let mut residual = Quaternion::J - i * Quaternion::J.dot(&i);
        if residual.norm() < tol::PROBE_FALLBACK {
            residual = Quaternion::K - i * Quaternion::K.dot(&i);
        }
        // A nearly parallel probe leaves the normalized residual
        // orthogonal to I only to (rounding / residual norm); a second
        // projection pass restores orthogonality at working precision.
        let coarse = UnitImaginary::try_from_quaternion(residual)
            .expect("probe residual is imaginary and bounded away from zero")
            .as_quaternion();
        let refined = coarse - i * coarse.dot(&i);
        let j = UnitImaginary::try_from_quaternion(refined)
            .expect("re-orthogonalized probe is imaginary and near unit");
        let k = UnitImaginary::try_from_quaternion(i * j.as_quaternion())
            .expect("product of orthogonal unit imaginaries is unit imaginary");
        SliceBasis { i: slice, j, k }
    }

    /// Builds a basis from an explicit `J`, validating that it is orthogonal
    /// to the slice plane. `K` is set to `I * J`.
    pub fn from_ij(slice: UnitImaginary, j: UnitImaginary) -> Result<SliceBasis, Error> {
        if slice.dot(&j).abs() > 1e-9 {
            return Err(Error::InvalidDirection);
        }
        let kq = slice.as_quaternion() * j.as_quaternion();
        let k = UnitImaginary::new(kq.x, kq.y, kq.z)?;
        Ok(SliceBasis { i: slice, j, k })
    }

    pub fn i(&self) -> UnitImaginary {
        self.i
    }

    pub fn j(&self) -> UnitImaginary {
        self.j
    }

    pub fn k(&self) -> UnitImaginary {
        self.k
    }

    /// Splits `h = z1 + J z2` with `z1`, `z2` in the slice plane: `z1` is
    /// the orthogonal projection of `h` onto the plane and `J z2` the
    /// projection onto its orthogonal complement.
    pub fn decompose(&self, h: &Quaternion) -> (SliceComplex, SliceComplex) {
        let iq = self.i.as_quaternion();
        let jq = self.j.as_quaternion();
        let kq = self.k.as_quaternion();
        let z1 = SliceComplex::new(h.w, h.dot(&iq), self.i);
        // J(c + dI) = cJ + d(JI) = cJ - dK, so c = (J,h) and d = -(K,h).
        let z2 = SliceComplex::new(h.dot(&jq), -h.dot(&kq), self.i);
        (z1, z2)
    }

    /// Inverse of [`decompose`](Self::decompose): `z1 + J z2`.
    pub fn recompose(&self, z1: &SliceComplex, z2: &SliceComplex) -> Quaternion {
        z1.to_quaternion() + self.j.as_quaternion() * z2.to_quaternion()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn approx(p: Quaternion, q: Quaternion, tol: f64) -> bool {
        (p - q).norm() <= tol
    }

    /// The worked decomposition data: h, I, and an explicit J.
    fn worked_decomposition() -> (Quaternion, UnitImaginary, UnitImaginary) {
        let h = Quaternion::new(1.0, 11.0, -2.0, -1.0);
        let i = UnitImaginary::new(1.0 / 3.0, 2.0 / 3.0, -2.0 / 3.0).unwrap();
        let j = UnitImaginary::new(2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0).unwrap();
        (h, i, j)
    }

    #[test]
    fn defining_relations() {
        assert_eq!(Quaternion::I * Quaternion::J, Quaternion::K);
        assert_eq!(Quaternion::J * Quaternion::K, Quaternion::I);
        assert_eq!(Quaternion::K * Quaternion::I, Quaternion::J);
        assert_eq!(Quaternion::I * Quaternion::I, -Quaternion::ONE);
        assert_eq!(
            Quaternion::I * Quaternion::J * Quaternion::K,
            -Quaternion::ONE
        );
    }

    #[test]
    fn conjugation_of_i_and_j() {
        let g = Quaternion::new(1.0, 1.0, 1.0, 0.0);
        let g_inv = g.inverse().unwrap();
        assert!(approx(
            g_inv,
            Quaternion::new(1.0, -1.0, -1.0, 0.0) / 3.0,
            1e-15
        ));
        let i_conj = g * Quaternion::I * g_inv;
        assert!(approx(
            i_conj,
            Quaternion::new(0.0, 1.0 / 3.0, 2.0 / 3.0, -2.0 / 3.0),
            1e-15
        ));
        let j_conj = g * Quaternion::J * g_inv;
        assert!(approx(
            j_conj,
            Quaternion::new(0.0, 2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0),
            1e-15
        ));
    }

    #[test]
    fn inverse_basics() {
        assert_eq!(Quaternion::ONE.inverse().unwrap(), Quaternion::ONE);
        let two_k = Quaternion::new(0.0, 0.0, 0.0, 2.0);
        assert!(approx(
            two_k.inverse().unwrap(),
            Quaternion::new(0.0, 0.0, 0.0, -0.5),
            1e-15
        ));
        assert_eq!(Quaternion::ZERO.inverse(), Err(Error::ZeroDivision));
    }

    #[test]
    fn scalar_product_values() {
        let (h, _, j) = worked_decomposition();
        assert!((j.as_quaternion().dot(&h) - 6.0).abs() < 1e-12);
        assert_eq!(Quaternion::ONE.dot(&Quaternion::I), 0.0);
        let p = Quaternion::I + Quaternion::J;
        let q = Quaternion::I - Quaternion::J;
        assert_eq!(p.dot(&q), 0.0);
    }

    #[test]
    fn imaginary_unit_of_nonreal() {
        let (h, _, _) = worked_decomposition();
        let u = h.imaginary_unit().unwrap();
        let n = (11.0f64 * 11.0 + 4.0 + 1.0).sqrt();
        let expected = [11.0 / n, -2.0 / n, -1.0 / n];
        for (got, want) in u.components().iter().zip(expected) {
            assert!((got - want).abs() < 1e-15);
        }
        assert_eq!(Quaternion::K.imaginary_unit().unwrap(), UnitImaginary::K);
        assert_eq!(
            Quaternion::from_real(5.0).imaginary_unit(),
            Err(Error::RealInput)
        );
    }

    #[test]
    fn canonical_basis_for_i_is_jk() {
        let b = SliceBasis::canonical(UnitImaginary::I);
        assert_eq!(b.j(), UnitImaginary::J);
        assert_eq!(b.k(), UnitImaginary::K);
    }

    #[test]
    fn canonical_basis_falls_back_near_j() {
        let b = SliceBasis::canonical(UnitImaginary::J);
        assert_eq!(b.j(), UnitImaginary::K);
        assert_eq!(b.k(), UnitImaginary::I);
    }

    #[test]
    fn canonical_basis_is_orthonormal_for_worked_slice() {
        let (_, i, _) = worked_decomposition();
        let b = SliceBasis::canonical(i);
        assert!(b.i().dot(&b.j()).abs() < 1e-12);
        assert!(b.i().dot(&b.k()).abs() < 1e-12);
        assert!(b.j().dot(&b.k()).abs() < 1e-12);
        let k = b.i().as_quaternion() * b.j().as_quaternion();
        assert!(approx(k, b.k().as_quaternion(), 1e-12));
    }

    #[test]
    fn decompose_worked_example() {
        let (h, i, j) = worked_decomposition();
        let basis = SliceBasis::from_ij(i, j).unwrap();
        let (z1, z2) = basis.decompose(&h);
        assert!((z1.a - 1.0).abs() < 1e-12 && (z1.b - 3.0).abs() < 1e-12);
        assert!((z2.a - 6.0).abs() < 1e-12 && (z2.b + 9.0).abs() < 1e-12);
        assert!(approx(basis.recompose(&z1, &z2), h, 1e-12));
    }

    #[test]
    fn decompose_fixes_slice_points() {
        let (_, i, _) = worked_decomposition();
        let h = i.embed(4.0, -2.5);
        let basis = SliceBasis::canonical(i);
        let (z1, z2) = basis.decompose(&h);
        assert!((z1.a - 4.0).abs() < 1e-12 && (z1.b + 2.5).abs() < 1e-12);
        assert!(z2.norm() < 1e-12);
    }

    #[test]
    fn flipping_j_flips_z2() {
        let (h, i, j) = worked_decomposition();
        let plus = SliceBasis::from_ij(i, j).unwrap();
        let minus = SliceBasis::from_ij(i, -j).unwrap();
        let (_, z2p) = plus.decompose(&h);
        let (_, z2m) = minus.decompose(&h);
        assert!((z2p.a + z2m.a).abs() < 1e-12);
        assert!((z2p.b + z2m.b).abs() < 1e-12);
    }

    #[test]
    fn slice_complex_round_trip() {
        let (_, i, _) = worked_decomposition();
        let z = SliceComplex::new(-3.25, 7.5, i);
        let q = z.to_quaternion();
        assert!((q.w - z.a).abs() < 1e-15);
        assert!((q.norm() - z.norm()).abs() < 1e-15);
        let back = SliceComplex::new(q.w, q.dot(&i.as_quaternion()), i);
        assert!((back.a - z.a).abs() < 1e-15 && (back.b - z.b).abs() < 1e-15);
    }

    #[test]
    fn display_text_form() {
        let h = Quaternion::new(1.0, 11.0, -2.0, -1.0);
        assert_eq!(h.to_string(), "1+11i-2j-1k");
    }

    fn quat_strategy() -> impl Strategy<Value = Quaternion> {
        (-10.0f64..10.0, -10.0f64..10.0, -10.0f64..10.0, -10.0f64..10.0)
            .prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
    }

    fn unit_imaginary_strategy() -> impl Strategy<Value = UnitImaginary> {
        (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0)
            .prop_filter_map("nonzero direction", |(x, y, z)| {
                UnitImaginary::new(x, y, z).ok()
            })
    }

    proptest! {
        #[test]
        fn product_norm_and_conjugate(p in quat_strategy(), q in quat_strategy()) {
            let pq = p * q;
            let scale = p.norm() * q.norm();
            prop_assert!((pq.norm() - scale).abs() <= 1e-12 * (1.0 + scale));
            let lhs = pq.conj();
            let rhs = q.conj() * p.conj();
            prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + scale));
        }

        #[test]
        fn multiplication_associates_and_distributes(
            p in quat_strategy(), q in quat_strategy(), r in quat_strategy()
        ) {
            let scale = 1.0 + p.norm() * q.norm() * r.norm();
            prop_assert!(((p * q) * r - p * (q * r)).norm() <= 1e-12 * scale);
            let scale2 = 1.0 + p.norm() * (q.norm() + r.norm());
            prop_assert!((p * (q + r) - (p * q + p * r)).norm() <= 1e-12 * scale2);
        }

        #[test]
        fn decompose_recompose_identity(h in quat_strategy(), i in unit_imaginary_strategy()) {
            let basis = SliceBasis::canonical(i);
            let (z1, z2) = basis.decompose(&h);
            let back = basis.recompose(&z1, &z2);
            prop_assert!((back - h).norm() <= 1e-12 * (1.0 + h.norm()));
        }

        #[test]
        fn canonical_basis_invariants(i in unit_imaginary_strategy()) {
            let b = SliceBasis::canonical(i);
            let (iq, jq, kq) = (b.i().as_quaternion(), b.j().as_quaternion(), b.k().as_quaternion());
            prop_assert!(iq.dot(&jq).abs() <= 1e-12);
            prop_assert!(iq.dot(&kq).abs() <= 1e-12);
            prop_assert!(jq.dot(&kq).abs() <= 1e-12);
            prop_assert!((iq * jq - kq).norm() <= 1e-12);
            prop_assert!((jq * iq + iq * jq).norm() <= 1e-12);
        }

        #[test]
        fn conjugation_preserves_scalar_product(
            p in quat_strategy(), q in quat_strategy(), g in quat_strategy()
        ) {
            prop_assume!(g.norm() > 1e-3);
            let g_inv = g.inverse().unwrap();
            let p2 = g * p * g_inv;
            let q2 = g * q * g_inv;
            let scale = 1.0 + p.norm() * q.norm();
            prop_assert!((p2.dot(&q2) - p.dot(&q)).abs() <= 1e-10 * scale);
        }
    }
}
