use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {0} is outside 1..=64")]
    InvalidDegree(usize),
    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid problem: {0}")]
    InvalidProblem(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("index {index} out of range for a tuple of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("move not applicable: {0}")]
    NotApplicable(String),
    /// A mathematical invariant failed. Never expected; indicates a bug or a
    /// counterexample.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
