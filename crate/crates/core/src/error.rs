use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("expected {expected} components, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("levels {0:?} are not dominant")]
    NotDominant(alloc::vec::Vec<i64>),

    #[error("unsupported dimension {0}; expected 4, 8 or 16")]
    UnsupportedDimension(u32),

    #[error("unsupported case: {0}")]
    Unsupported(&'static str),

    #[error("representation of dimension {dim} exceeds the guard {guard}")]
    GuardExceeded { dim: u64, guard: u64 },

    #[error("torus map does not send the weight lattice into the K-weight lattice: {0}")]
    NonIntegralRestriction(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}
