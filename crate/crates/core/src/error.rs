//! Crate-wide error type.

use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division of an exact scalar by zero.
    #[error("division by zero")]
    DivisionByZero,

    /// Two cyclotomic elements live in fields of different order.
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),

    /// An element without an inverse was inverted.
    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    /// Series operations on incompatible windows or variable sets.
    #[error("incompatible series: {0}")]
    IncompatibleSeries(String),

    /// A vector or state was used in a quadratic space it does not belong to.
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),

    /// An unknown named object (generator, realization, weight, kind).
    #[error("unknown name: {0}")]
    UnknownName(String),

    /// A generator name not declared in the ambient space.
    #[error("unknown generator {0}")]
    UnknownGenerator(String),

    /// A coefficient would require an odd power of the square root of p.
    #[error("non-rational coefficient: {0}")]
    NonRational(String),

    /// Text that does not follow the expression grammar.
    #[error("parse error at line {line}, column {column} near '{token}': {message}")]
    Parse {
        line: usize,
        column: usize,
        token: String,
        message: String,
    },

    /// A state that is not an eigenvector of the requested grading operator.
    #[error("state is not homogeneous: {0}")]
    NonHomogeneous(String),

    /// A graded component that is not finite-dimensional.
    #[error("infinite graded component: {0}")]
    InfiniteComponent(String),

    /// A vertex operator coefficient whose z-power offset is not integral.
    #[error("non-integral power: {0}")]
    NonIntegralPower(String),

    /// An input outside the domain of the operation.
    #[error("outside domain: {0}")]
    Domain(String),

    /// A precondition of the operation failed.
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
