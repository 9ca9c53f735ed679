use std::path::PathBuf;

use num_complex::Complex64;
use thiserror::Error;

/// Errors raised while constructing or evaluating a surface of the family.
#[derive(Debug, Error)]
pub enum ScherkError {
    /// Parameters violate the admissibility conditions, or the pair lies outside the region R.
    #[error("outside region R: {0}")]
    Domain(String),
    /// A construction collapsed (coincident vertices, vanishing determinant, ...).
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    /// Evaluation requested at a pole of a fractional-linear map.
    #[error("pole at z = {0}")]
    Pole(Complex64),
    /// The zero locator exhausted its evaluation budget.
    #[error("zero locator did not converge: {0}")]
    Convergence(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl ScherkError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        ScherkError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, ScherkError>;
