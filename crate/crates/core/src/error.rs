use thiserror::Error;

/// Every failure the library reports. Mathematical "no" answers are not
/// errors; they are carried in result values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different contexts")]
    ContextMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("capability missing: {0}")]
    CapabilityMissing(String),
    #[error("a finite search domain is required on this ring")]
    DomainRequired,
    #[error("conjugation by zero")]
    ZeroConjugator,
    #[error("undefined at a root of the transforming polynomial")]
    UndefinedAtRoot,
    #[error("elements are not P-independent")]
    NotPIndependent,
    #[error("polynomial does not split: {0}")]
    NotSplit(String),
    #[error("set is not full")]
    NotFull,
    #[error("set meets the zero set of the transforming polynomial")]
    DisjointnessViolated,
    #[error("the metro equation needs c != 0")]
    ZeroC,
    #[error("a lies in the conjugacy class of b")]
    AInClass,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("symbol `{0}` does not belong to this ring")]
    WrongRing(String),
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("search space exhausted without a decision: {0}")]
    Incomplete(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
