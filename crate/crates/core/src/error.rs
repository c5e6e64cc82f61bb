use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {point} lies outside 1..={total}")]
    PointOutOfRange { point: usize, total: usize },
    #[error("point {point} appears in more than one block")]
    OverlappingBlocks { point: usize },
    #[error("point {point} is not covered by any block")]
    MissingPoint { point: usize },
    #[error("block {index} is empty")]
    EmptyBlock { index: usize },
    #[error("partition has a block of odd size: {block:?}")]
    OddBlock { block: Vec<usize> },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("position {position} is not an adjacent pair of {perm}")]
    NotAdjacent { position: usize, perm: String },
    #[error("the identity permutation is not a valid input here")]
    IdentityInput,
    #[error("level {level} exceeds the guard {max}")]
    LevelTooLarge { level: usize, max: usize },
    #[error("resource budget exceeded: {required} required, budget {budget}")]
    Budget { required: usize, budget: usize },
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("starred letter on a real model")]
    StarOnRealModel,
    #[error("letter index {index} outside 1..={dimension}")]
    LetterOutOfRange { index: usize, dimension: usize },
    #[error("vector does not have unit norm")]
    NormViolation,
    #[error("support {got:?} is not a set of {expected} valid indices")]
    SupportMismatch { expected: usize, got: Vec<usize> },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("leg count mismatch: {lower} lower legs vs {upper} upper legs")]
    LegMismatch { lower: usize, upper: usize },
    #[error("presentations are incompatible: {0}")]
    Incompatible(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
