use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system {family}{rank}")]
    InvalidRank { family: char, rank: usize },

    #[error("unknown family '{0}'")]
    UnknownFamily(String),

    #[error("simple index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("vector {0:?} is not a root")]
    NotARoot(Vec<i64>),

    #[error("arguments come from different root systems")]
    Mismatch,

    #[error("input vectors are linearly dependent")]
    DependentSet,

    #[error("enumeration cap {cap} exceeded (reached {reached} elements)")]
    CapExceeded { cap: usize, reached: usize },

    #[error("invalid (I, J, K) datum: {0}")]
    InvalidDatum(String),

    #[error("element does not lie in the parabolic subgroup W_{0}")]
    NotInParabolic(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid link pattern: {0}")]
    InvalidPattern(String),

    #[error("roots are not pairwise orthogonal: {0}")]
    NotOrthogonal(String),

    #[error("root combination matches no known case: {0}")]
    UnreachableCase(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
