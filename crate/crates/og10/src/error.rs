use thiserror::Error;

use crate::singularity::Family;

/// Errors shared across the library modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The singularity index is outside the family's range (A needs index >= 1,
    /// D needs index >= 4).
    #[error("invalid singularity type {family}{index}: {family} requires index >= {min}")]
    InvalidSingularityIndex { family: Family, index: u32, min: u32 },

    /// The delta table covers only A1..A5, D4, D5; anything else is rejected
    /// instead of extrapolated.
    #[error("unsupported singularity type {0}: the delta table covers only A1..A5, D4 and D5")]
    UnsupportedSingularity(String),

    /// A plane curve class needs a positive degree.
    #[error("plane curve degree must be >= 1, got {0}")]
    InvalidCurveDegree(u32),

    /// A connected etale double cover of an irreducible curve forces the
    /// normalization genus to be at least 1.
    #[error("no connected etale double cover exists: normalization genus must be >= 1")]
    NoEtaleDoubleCover,

    /// Subset enumeration was asked for more nodes than the configured cap.
    #[error("{nodes} nodes exceed the brute-force enumeration cap of {cap}")]
    EnumerationCapExceeded { nodes: u32, cap: u32 },

    /// A fibration model contains two strata with the same label.
    #[error("duplicate stratum label {0:?}")]
    DuplicateStratumLabel(String),

    /// A stratum whose base count was recorded as unused turned out to matter.
    #[error("stratum {0:?} has an unused base count but nonzero fiber Euler characteristic")]
    UnusedBaseWithNonzeroFiber(String),

    /// A Betti vector failed a structural check (length, duality, ...).
    #[error("malformed Betti vector: {0}")]
    MalformedBettiVector(String),

    /// An operation specific to one half-dimension was applied to another.
    #[error("operation requires half-dimension n = {expected}, got n = {actual}")]
    WrongHalfDimension { expected: u32, actual: u32 },

    /// An arithmetic identity that must hold by construction failed. This
    /// signals data corruption (e.g. a mistranscribed coefficient), not user
    /// error.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
