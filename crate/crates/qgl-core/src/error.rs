//! Error type shared across the crate.

use std::fmt;

/// Errors produced by quaternion arithmetic, projections, and root finding.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Attempted to invert a quaternion with norm below the zero tolerance.
    ZeroDivision,
    /// A slice direction was requested for a quaternion with no imaginary
    /// part. Real points belong to every slice; callers must iterate
    /// explicitly instead of relying on an arbitrary choice.
    RealInput,
    /// A unit imaginary direction could not be built from the given data
    /// (zero vector, non-imaginary quaternion, or a basis candidate that is
    /// not orthogonal to the slice plane).
    InvalidDirection,
    /// Root finding was asked for the roots of the zero polynomial, whose
    /// root set is the whole plane.
    ZeroPolynomial,
    /// The simultaneous-iteration solver hit its iteration cap without all
    /// roots meeting the residual tolerance.
    NonConvergence { iterations: u32 },
    /// Both projections are the zero polynomial, so their common root set is
    /// the whole slice plane rather than a finite set.
    WholePlane,
    /// The operation needs a polynomial of at least the stated degree.
    DegreeTooSmall { required: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDivision => write!(f, "division by a zero quaternion"),
            Error::RealInput => write!(f, "quaternion has no imaginary part; no unique slice"),
            Error::InvalidDirection => write!(f, "cannot build a unit imaginary direction"),
            Error::ZeroPolynomial => write!(f, "zero polynomial: every point is a root"),
            Error::NonConvergence { iterations } => {
                write!(f, "root solver failed to converge after {iterations} iterations")
            }
            Error::WholePlane => {
                write!(f, "both projections vanish identically: the whole plane is a root set")
            }
            Error::DegreeTooSmall { required } => {
                write!(f, "polynomial degree must be at least {required}")
            }
        }
    }
}

impl std::error::Error for Error {}
