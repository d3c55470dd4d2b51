use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("odd number of negative entries in {0}; not an element of D_n")]
    OddSignCount(String),
    #[error("malformed signed permutation {0}")]
    MalformedPermutation(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("rank {rank} outside the supported range (max {max})")]
    RankOutOfRange { rank: usize, max: usize },
    #[error("simple root {0} does not exist in rank {1}")]
    InvalidRoot(String, usize),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("shape {0:?} is not tileable by dominoes")]
    UntileableShape(Vec<usize>),
    #[error("tableaux have different shapes: {0:?} vs {1:?}")]
    ShapeMismatch(Vec<usize>, Vec<usize>),
    #[error("tableau pair is not in the image of the type D correspondence")]
    NotInImage,
    #[error("cycles of mixed colorings")]
    MixedColorings,
    #[error("label set {0:?} is not a cycle of the tableau")]
    NotACycle(Vec<u8>),
    #[error("move set does not belong to this tableau pair")]
    StaleMoveSet,
    #[error("operator {0} is not defined on this pair")]
    DomainViolation(String),
    #[error("operator {0} would change the right tableau")]
    RightTableauNotPreserved(String),
    #[error("left cells do not lie in a common double cell")]
    NoCommonDoubleCell,
    #[error("expected exactly one element of special shape in the cell intersection, found {0}")]
    NoSpecialElement(usize),
    #[error("shape {0:?} is very even")]
    VeryEvenShape(Vec<usize>),
    #[error("shape {0:?} is not reachable through extended open cycles")]
    UnreachableShape(Vec<usize>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
