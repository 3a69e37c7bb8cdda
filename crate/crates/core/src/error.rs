use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate abscissa {0} in interpolation points")]
    DuplicateAbscissa(i64),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("ground set of size {0} exceeds the supported maximum of {max}", max = crate::matroid::MAX_GROUND_SET)]
    GroundSetTooLarge(usize),

    #[error("invalid basis system: {0}")]
    InvalidBasisSystem(String),

    #[error("{0} is not a hyperplane of the matroid")]
    NotHyperplane(String),

    #[error("set {0} contains a basis and cannot be relaxed")]
    ContainsBasis(String),

    #[error("relaxing {0} does not produce a matroid basis system")]
    NotRelaxable(String),

    #[error("matroid is not paving")]
    NotPaving,

    #[error("Steiner parameters S({t},{k},{n}) fail divisibility: C({n},{t}) / C({k},{t}) is not an integer")]
    NonIntegralBlockCount { t: usize, k: usize, n: usize },

    #[error("invalid binary string: {0}")]
    InvalidBinaryString(String),

    #[error("inconsistent volumes: {0}")]
    InconsistentVolumes(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("malformed input: {0}")]
    Parse(String),
}
