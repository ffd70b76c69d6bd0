use thiserror::Error;

use crate::limits::Kind;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground-set size must be at least 1")]
    EmptyGroundSet,
    #[error("element {element} is outside 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("block {index} is empty")]
    EmptyBlock { index: usize },
    #[error("block {index} repeats element {element}")]
    RepeatedElement { index: usize, element: usize },
    #[error("not a partition: {reason}")]
    NotAPartition { reason: String },
    #[error("blocks do not cover the ground set: {missing} is missing")]
    NotACover { missing: usize },
    #[error("crossing blocks witnessed by {i} < {k} < {p} < {q}")]
    Crossing {
        i: usize,
        k: usize,
        p: usize,
        q: usize,
    },
    #[error("bad link between blocks {first:?} and {second:?}: {reason}")]
    BadLink {
        first: Vec<usize>,
        second: Vec<usize>,
        reason: String,
    },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("{kind} size {n} exceeds the configured cap {cap}")]
    LimitExceeded { kind: Kind, n: usize, cap: usize },
    #[error("block {block:?} straddles the restriction set")]
    BlockStraddlesSet { block: Vec<usize> },
    #[error("ground set of size {n} is odd")]
    OddGroundSet { n: usize },
    #[error("linked partition is not connected")]
    NotConnected,
    #[error("linked partition is not in the NCL_S class: {reason}")]
    NotNclS { reason: String },
    #[error("first moment is zero; t-coefficients are undefined")]
    ZeroFirstMoment,
    #[error("t_0 is zero")]
    ZeroT0,
    #[error("sequence of order {have} is too short; order {need} is required")]
    OrderTooLow { need: usize, have: usize },
    #[error("letter {letter} has zero expectation")]
    LetterNotInDomain { letter: String },
    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("color-1 children must precede color-0 children")]
    ColorOrder,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
