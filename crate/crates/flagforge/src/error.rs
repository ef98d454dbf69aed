//! Central error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong while building or checking a flag code.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// The requested characteristic is not a prime number.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A size cap was exceeded (field order, codeword enumeration, ...).
    #[error("{0}")]
    TooLarge(String),

    /// Attempted to invert zero in a field.
    #[error("division by zero in the field")]
    DivisionByZero,

    /// Two objects live over different fields.
    #[error("operands belong to different fields")]
    FieldMismatch,

    /// Matrix shapes do not line up for the requested operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A subspace was requested from a matrix with zero row space.
    #[error("the zero matrix spans no nonzero subspace")]
    ZeroMatrix,

    /// Two subspaces live in ambient spaces of different dimension.
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    /// Two vectors that should have equal length do not.
    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    /// Two flags that should share a type do not.
    #[error("flag types differ")]
    TypeMismatch,

    /// Parameters fail a precondition (with the reason spelled out).
    #[error("invalid parameters: {0}")]
    BadParams(String),

    /// A requested type set leaves the range supported by the construction.
    #[error("unsupported type set: {0}")]
    BadTypeSet(String),

    /// A full flag was requested from a singular matrix.
    #[error("matrix is not invertible")]
    NotInvertible,

    /// Designed rank distance out of range.
    #[error("designed distance {delta} out of range 1..={m}")]
    InvalidDelta { delta: usize, m: usize },

    /// Truncation length out of range.
    #[error("truncation length {t} out of range 1..={m}")]
    InvalidT { t: usize, m: usize },

    /// A dimension was requested that the flag type does not contain.
    #[error("dimension {0} is not a tick of the flag type")]
    BadTick(usize),

    /// An operation needs at least two flags.
    #[error("need at least two flags, got {0}")]
    TooSmall(usize),

    /// Subspaces that should share a dimension do not.
    #[error("subspace dimensions are not uniform")]
    DimMismatch,

    /// The distance-based and projection-based optimality checks disagree;
    /// this indicates a bug, not bad input.
    #[error("distance-based and projection-based verdicts disagree")]
    CharacterizationMismatch,

    /// A serialized document failed validation.
    #[error("format error: {0}")]
    Format(String),

    /// An internal invariant was violated; this indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
