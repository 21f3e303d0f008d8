use alloc::string::String;

/// Errors produced by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("group order {0} exceeds the supported maximum of 64")]
    GroupTooLarge(usize),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("unknown catalog group `{0}`")]
    UnknownCatalog(String),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("element {0} is not in the subgroup")]
    NotInSubgroup(usize),
    #[error("empty grading tuple")]
    EmptyTuple,
    #[error("invalid edge {index}: {reason}")]
    InvalidEdge { index: usize, reason: String },
    #[error("basis size {size} exceeds cap {cap}")]
    BasisCap { size: usize, cap: usize },
    #[error("search space exceeded cap of {0} states")]
    SearchCap(usize),
    #[error("work estimate {work} exceeds cap {cap}")]
    WorkCap { work: u128, cap: u128 },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("grading group is not of the form Z2 x G")]
    MissingZ2Factor,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = core::result::Result<T, Error>;
