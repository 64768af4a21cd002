use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole at s = {re}{im:+}i")]
    Pole { re: f64, im: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("rank error: {0}")]
    Rank(String),

    #[error("numerical degeneracy: {0}")]
    Degeneracy(String),

    #[error("no root: {0}")]
    NoRoot(String),

    #[error("inconsistent result: {0}")]
    Inconsistent(String),

    #[error("zero or pole too close to the boundary of {0}")]
    BoundaryProximity(String),

    #[error("subdivision depth exhausted; unresolved rectangle {0}")]
    DepthExhausted(String),

    #[error("Newton iteration did not converge from {0}")]
    NonConvergence(String),

    #[error("symmetry violation: {0}")]
    SymmetryViolation(String),

    #[error("near singularity: {0}")]
    NearSingularity(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("ordering error at line {line}: {message}")]
    Ordering { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn pole(s: num_complex::Complex64) -> Self {
        Error::Pole { re: s.re, im: s.im }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn pole(s: num_complex::Complex64) -> Error {
    Error::pole(s)
}
