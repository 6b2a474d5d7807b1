//! Input parsing, error reporting, and shared numeric formatting.
//!
//! Polynomials travel as JSON objects `{"coeffs": [[w,x,y,z], ...]}` with
//! coefficients in ascending degree. Every error carries enough structure
//! to be reported as machine-readable JSON on stderr.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use qgl_core::{QPolynomial, UnitImaginary};
use serde::Deserialize;

/// Everything that can go wrong before or during a command.
#[derive(Debug)]
pub enum CliError {
    /// A file could not be read or written.
    Io { path: PathBuf, message: String },
    /// The polynomial JSON did not parse; position is 1-based.
    Parse { line: usize, column: usize, message: String },
    /// The polynomial JSON parsed but listed no coefficients.
    EmptyCoeffs,
    /// `demo` was asked for a case that does not exist.
    UnknownCase { name: String },
    /// `--slice` was not three comma-separated reals with positive norm.
    BadSlice { given: String, message: String },
    /// The computation itself refused the input (degree too small, zero
    /// polynomial, solver breakdown, ...).
    Compute(qgl_core::Error),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::EmptyCoeffs => "empty_coeffs",
            CliError::UnknownCase { .. } => "unknown_case",
            CliError::BadSlice { .. } => "bad_slice",
            CliError::Compute(_) => "compute",
        }
    }

    /// One-line machine-readable form, printed on exit code 2.
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "error": { "kind": self.kind(), "detail": self.to_string() }
        })
        .to_string()
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, message } => {
                write!(f, "cannot access {}: {}", path.display(), message)
            }
            CliError::Parse { line, column, message } => {
                write!(f, "bad polynomial JSON at line {line}, column {column}: {message}")
            }
            CliError::EmptyCoeffs => write!(f, "polynomial JSON lists no coefficients"),
            CliError::UnknownCase { name } => write!(
                f,
                "unknown demo case {name:?}; expected one of example-2-4, \
                 section-3-projection, strict-inclusion, bounds-5-4"
            ),
            CliError::BadSlice { given, message } => {
                write!(f, "bad slice {given:?}: {message} (expected \"x,y,z\")")
            }
            CliError::Compute(e) => write!(f, "computation failed: {e}"),
        }
    }
}

impl From<qgl_core::Error> for CliError {
    fn from(e: qgl_core::Error) -> Self {
        CliError::Compute(e)
    }
}

/// Parses `{"coeffs": [[w,x,y,z], ...]}`, ascending degree. An explicit
/// empty list is rejected rather than read as the zero polynomial.
pub fn parse_polynomial(text: &str) -> Result<QPolynomial, CliError> {
    #[derive(Deserialize)]
    struct Raw {
        coeffs: Vec<[f64; 4]>,
    }
    let raw: Raw = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if raw.coeffs.is_empty() {
        return Err(CliError::EmptyCoeffs);
    }
    Ok(QPolynomial::from_components(&raw.coeffs))
}

pub fn load_polynomial(path: &Path) -> Result<QPolynomial, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse_polynomial(&text)
}

/// Parses `"x,y,z"` into a unit imaginary direction (normalizing).
pub fn parse_slice(text: &str) -> Result<UnitImaginary, CliError> {
    let bad = |message: &str| CliError::BadSlice {
        given: text.to_string(),
        message: message.to_string(),
    };
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(bad("expected exactly three components"));
    }
    let mut xyz = [0.0_f64; 3];
    for (slot, part) in xyz.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|e| bad(&e.to_string()))?;
    }
    UnitImaginary::new(xyz[0], xyz[1], xyz[2])
        .map_err(|_| bad("direction has zero norm"))
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

/// Fixed-width scientific form with 12 significant digits. Used for every
/// number the harness prints, so runs can be diffed byte for byte.
pub fn sig12(x: f64) -> String {
    format!("{:.11e}", x)
}
