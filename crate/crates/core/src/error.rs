use thiserror::Error;

/// Errors raised by the exact-arithmetic layers and the enumerators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix must be square with n >= 1")]
    NotSquare,

    #[error("kernel has dimension {0}, expected 1")]
    KernelDimension(usize),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("variable `{0}` appears with exponent >= 2")]
    NotSquareFree(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not dominated")]
    NotDominated,

    #[error("variable {0} does not occur in any term")]
    VariableUnused(usize),

    #[error("dominant coefficient is not positive")]
    NegativeLeading,

    #[error("leading coefficient must be >= 1")]
    BadLeadingCoefficient,

    #[error("bad input: {0}")]
    BadInput(String),

    #[error("vector is not an arithmetical structure: {0}")]
    NotAStructure(String),

    #[error("matrix is not a quasi non-singular M-matrix")]
    NotQuasiNonSingular,

    #[error("box has {points} points, cap is {cap}")]
    BoxTooLarge { points: String, cap: u64 },

    #[error("bad size: {0}")]
    BadSize(String),

    #[error("edge ({0}, {0}) is a loop")]
    LoopEdge(usize),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
