use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes identically after substitution")]
    SingularSubstitution,
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("index {0} is outside the index set")]
    InvalidIndex(String),
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("invalid pair: {0}")]
    InvalidPair(String),
    #[error("input polynomial is not invariant")]
    NotInvariantInput,
    #[error("singular setup check failed: {0}")]
    InvalidSingularSetup(String),
    #[error("evaluation matrix is rank deficient: {0}")]
    WindowRankError(String),
    #[error("action leaves the window: {0}")]
    WindowLeakage(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("point is not regular")]
    RegularityError,
    #[error("states are not adjacent: {0}")]
    InvalidMove(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable: {0}")]
    NameError(String),
    #[error("invalid job specification: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
