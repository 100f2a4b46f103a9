use thiserror::Error;

/// Errors raised by the root-system, Weyl-group and curve-neighborhood routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid simple type {letter}{rank}")]
    InvalidType { letter: char, rank: usize },

    #[error("not a finite-type Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vector {0:?} is not a root of this system")]
    NotARoot(Vec<i64>),

    #[error("operands belong to different root systems")]
    SystemMismatch,

    #[error("node {node} is out of range for rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("parabolic subset is not maximal")]
    NotMaximal,

    #[error("parabolic containment violated: S_P must be a subset of S_Q")]
    ContainmentViolated,

    #[error("element has a right descent in the parabolic subset")]
    NotMinimalRepresentative,

    #[error("node {0} lies in the parabolic subset")]
    NodeInParabolic(usize),

    #[error("root {0:?} lies in R_P+, its curve class is zero")]
    DegenerateClass(Vec<i64>),

    #[error("no unique Bruhat-maximal element among {candidates} candidates")]
    NoUniqueMaximum { candidates: usize },

    #[error("simple root {0} is short; the long-root description does not apply")]
    ShortRoot(usize),

    #[error("weight is not dominant")]
    NonDominant,

    #[error("weight is not integral")]
    NonIntegral,

    #[error("weight does not vanish on the parabolic subset")]
    WeightNotInPicard,

    #[error("zero weight: the coadjoint orbit is a point")]
    ZeroOrbit,

    #[error("Gromov-Witten certificate failed at node {node}: c1 = {c1}, dim = {dim_gamma}")]
    Uncertified { node: usize, c1: i64, dim_gamma: usize },

    #[error("group of order {order} exceeds the enumeration limit {limit}")]
    EnumerationTooLarge { order: u128, limit: u128 },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
