//! Quaternionic polynomial root geometry.
//!
//! One-sided polynomials over the quaternions vanish on isolated points
//! and whole 2-spheres. Restricting to a complex slice `ℝ + ℝI` splits a
//! polynomial into two complex charts; the convex hulls of their root
//! sets — the snail and cosnail of the slice — intersect in a region that
//! provably contains every root of the derivative, slice by slice. This
//! crate provides the algebra ([`quaternion`], [`qpoly`]), the root
//! finders ([`solver`], [`roots`]), the planar geometry ([`hull`]), the
//! per-slice containment sets and theorem checker ([`snm`]), and
//! coefficient-norm root bounds ([`bounds`]).

pub mod bounds;
pub mod error;
pub mod hull;
pub mod qpoly;
pub mod quaternion;
pub mod random;
pub mod roots;
pub mod snm;
pub mod solver;
pub mod sphere;
pub mod tol;

pub use error::Error;
pub use hull::ConvexRegion2D;
pub use qpoly::{QPolynomial, SliceProjection, SlicePolynomial};
pub use quaternion::{Quaternion, SliceBasis, SliceComplex, UnitImaginary};
pub use roots::{RootSetH, SphereResolution};
pub use snm::{MembershipCheck, SnmSlice, VerificationReport, VerifyConfig};
