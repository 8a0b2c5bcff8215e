use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("matrix is not Hermitian (max |A - A†| = {max_deviation:e})")]
    NotHermitian { max_deviation: f64 },
    #[error("Bloch vector lies outside the unit ball (|s| = {norm})")]
    BlochOutOfBall { norm: f64 },
    #[error("density matrix is not positive semi-definite (eigenvalue {eigenvalue:e})")]
    NotPositive { eigenvalue: f64 },
    #[error("expected unit trace, got {re} + {im}i")]
    BadTrace { re: f64, im: f64 },
    #[error("not a valid density matrix: {0}")]
    BadDensity(String),
    #[error("label {0} is not supported by this operation")]
    UnsupportedLabel(String),
    #[error("unknown gate {0:?}")]
    UnknownGate(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("file not found: {}", .0.display())]
    FileNotFound(std::path::PathBuf),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
