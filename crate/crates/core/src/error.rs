use thiserror::Error;

use crate::chu::Violation;

/// Errors shared by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("the zero vector cannot be used as a state")]
    ZeroState,

    #[error("scalar must be nonzero")]
    ZeroScalar,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix rows must all have the same length")]
    RaggedMatrix,

    #[error("empty vector or matrix is not allowed here")]
    Empty,

    #[error("value sets do not match")]
    ValueSetMismatch,

    #[error("value {value} is not a member of value set {value_set}")]
    ValueOutOfRange { value: String, value_set: String },

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("duplicate id {0:?}")]
    DuplicateId(String),

    #[error("unknown id {0:?}")]
    UnknownId(String),

    #[error("map is not total: missing entry for {0:?}")]
    MissingMapEntry(String),

    #[error("index {index} out of range for {what} of length {len}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },

    #[error("the pair is not a Chu morphism: first violation at ({}, {})", .0.point, .0.attribute)]
    MorphismCondition(Box<Violation>),

    #[error("morphisms are not composable: target of the first differs from source of the second")]
    NotComposable,

    #[error("morphisms must share source and target")]
    MismatchedEndpoints,

    #[error("sample is not ray-closed: missing the ray of state {0}")]
    NotRayClosed(String),

    #[error("sample does not contain the required state {0}")]
    MissingState(String),

    #[error("sample does not contain the required attribute subspace {0}")]
    MissingAttribute(String),

    #[error("map is not semiunitary")]
    NotSemiunitary,

    #[error("map must classify as neither unitary nor antiunitary")]
    NotNeither,

    #[error("search space too large for brute force: {size} candidate pairs")]
    SearchSpaceTooLarge { size: u128 },

    #[error("morphism count overflows u64")]
    CountOverflow,

    #[error("no orthogonal state pair with non-orthogonal images in the sample")]
    NoOrthogonalityWitness,

    #[error("parse error: {0}")]
    Parse(String),
}
