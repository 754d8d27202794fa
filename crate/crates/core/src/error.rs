use thiserror::Error;

/// Errors raised by the library.
///
/// Variants split into two kinds. Input errors ([`Error::is_internal`] is
/// false) report bad user input. Internal errors report a failed
/// consistency check against a known theorem or formula; they indicate a
/// bug rather than a user mistake.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group order exceeds the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },
    #[error("subgroup count exceeds the cap of {cap}")]
    SubgroupCapExceeded { cap: usize },
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup class index {index} out of range (the group has {count} classes)")]
    ClassOutOfRange { index: usize, count: usize },
    #[error("element belongs to a different Burnside ring")]
    RingMismatch,
    #[error("mark vector is not in the image of the mark homomorphism")]
    NonIntegralElement,
    #[error("element is not a unit of the Burnside ring")]
    NotAUnit,
    #[error("subgroup is not of index two")]
    NotIndexTwo,
    #[error("this computation requires a group of even order")]
    OddOrderInput,
    #[error("this computation requires a group of odd order")]
    EvenOrderInput,
    #[error("complex has a cell with nontrivial isotropy")]
    NotFree,
    #[error("coefficient system and complex are over different groups")]
    CoefficientMismatch,
    #[error("invalid G-CW complex: {0}")]
    InvalidComplex(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unit count {found} disagrees with Matsuda's 2^{expected_dim}")]
    MatsudaMismatch { expected_dim: usize, found: usize },
    #[error("closed-form mismatch: {0}")]
    FormulaMismatch(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that signal a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::MatsudaMismatch { .. } | Error::FormulaMismatch(_) | Error::Internal(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
