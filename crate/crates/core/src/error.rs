use thiserror::Error;

/// Errors raised by the algebra kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("set mixes degrees {0} and {1}")]
    MixedDegrees(u32, u32),

    #[error("{a} is not Borel-greater than or equal to {b}")]
    NotBorelComparable { a: String, b: String },

    #[error("{what} budget of {limit} exceeded")]
    BudgetExceeded { what: &'static str, limit: usize },

    #[error("Hilbert polynomial did not stabilize after {retries} retries")]
    Unstabilized { retries: usize },

    #[error("Hilbert function is not the Hilbert function of an ideal (degree {degree})")]
    InadmissibleHilbertFunction { degree: u32 },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("binomial system needs rho_m(rho) > 0; flip to (A, C+rho, -rho) first")]
    OrientationRequired,

    #[error("ideal is not homogeneous")]
    NotHomogeneous,

    #[error("generic draws disagree after {draws} draws: {candidates:?}")]
    CertificateMismatch { draws: usize, candidates: Vec<String> },

    #[error("no weight vector found within {budget} iterations")]
    WeightNotFound { budget: usize },

    #[error("invalid binomial system: {0}")]
    InvalidSystem(String),

    #[error("unknown relation '{0}'")]
    UnknownRelation(String),

    #[error("parse error at {line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
