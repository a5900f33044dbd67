use thiserror::Error;

/// Errors produced by model loading, the solvers and the certificate builders.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("not commutative: {a} + {b} = {ab} but {b} + {a} = {ba}")]
    NotCommutative { a: usize, b: usize, ab: usize, ba: usize },
    #[error("not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("0 is not neutral: 0 + {0} != {0}")]
    NotNeutral(usize),
    #[error("order is not antisymmetric: {a} <= {b} <= {a}")]
    NotAntisymmetric { a: usize, b: usize },
    #[error("order incompatible with addition: {a} <= {b}, {c} <= {d} but {a}+{c} is not <= {b}+{d}")]
    OrderIncompatible { a: usize, b: usize, c: usize, d: usize },
    #[error("0 is not below {0}")]
    NotPositive(usize),
    #[error("top element {top} is not absorbing/maximal at {x}")]
    BadTop { top: usize, x: usize },
    #[error("element {0} is out of range")]
    OutOfRange(String),
    #[error("no stable infinite multiple for {0}")]
    NoStableMultiple(String),
    #[error("search space too large: {what} exceeds budget {budget}")]
    SearchSpaceTooLarge { what: String, budget: u64 },
    #[error("query depends on values beyond the truncation cap {cap}")]
    BeyondCap { cap: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("mixed reports: {0}")]
    MixedReports(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("term-count guard exceeded: {terms} > {budget}")]
    TermGuard { terms: usize, budget: usize },
    #[error("multiplicity overflow: {0}")]
    MultiplicityOverflow(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("model has no top element")]
    NoTop,
}

pub type Result<T> = std::result::Result<T, Error>;
