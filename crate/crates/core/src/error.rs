use thiserror::Error;

/// Errors raised by the combinatorial and linear-algebra layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("inversion set is not biclosed: {0}")]
    NotBiclosed(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid arc: {0}")]
    InvalidArc(String),
    #[error("arcs are identical")]
    IdenticalArcs,
    #[error("diagram is not noncrossing: {0}")]
    NotNoncrossing(String),
    #[error("arcs must share exactly one endpoint (they share {0})")]
    SharedEndpoints(usize),
    #[error("mutation precondition failed: {0}")]
    WrongColor(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("path is not composable: {0}")]
    NotComposable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("rank n = {n} exceeds the cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
