use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input violated a precondition (wrong sizes, values out of range, ...).
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A long cycle does not label a minimal circuit of the requested graph.
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    /// The bound data does not describe a bounded polytope.
    #[error("unbounded polytope: {0}")]
    Unbounded(String),
    /// The requested method does not apply to this input.
    #[error("method not applicable: {0}")]
    MethodDomain(String),
    /// A collection of (multi)sets is not closed under the sorting operation.
    #[error("not sort-closed: {0}")]
    NotSortClosed(String),
    /// A matroid constructor produced no bases.
    #[error("matroid has no bases")]
    EmptyMatroid,
}

pub type Result<T> = std::result::Result<T, Error>;
