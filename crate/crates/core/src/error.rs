use thiserror::Error;

use crate::subset::Subset;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("element index {index} out of range for a ground set of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("subset {subset} is not contained in a ground set of size {size}")]
    SubsetOutOfRange { subset: Subset, size: usize },

    #[error("enumeration needs {required} items, cap is {cap}")]
    CapExceeded { required: u128, cap: u64 },

    #[error("ground set of size {size} exceeds the limit of {limit} for {what}")]
    TooLarge { size: usize, limit: usize, what: &'static str },

    #[error("invalid torsion invariants {0:?}: factors must be >= 2 and form a divisibility chain")]
    InvalidTorsion(Vec<u64>),

    #[error("rank table violates {axiom}: {detail}")]
    RankAxiom { axiom: &'static str, detail: String },

    #[error("invalid multiplicity table: {0}")]
    Multiplicity(String),

    #[error("{subset} is not a basis")]
    NotABasis { subset: Subset },

    #[error("[{lower}, {upper}] is not a valid interval")]
    NotAnInterval { lower: Subset, upper: Subset },

    #[error("multiplicities must be integral for {0}")]
    NonIntegral(&'static str),

    #[error("molecule precondition violated: {0}")]
    NotAMolecule(String),

    #[error("target group must be finite")]
    InfiniteTarget,

    #[error("ambient group has torsion; {0} needs a free group")]
    TorsionAmbient(&'static str),

    #[error("generators are linearly dependent; semi-open representation is not unique")]
    DependentGenerators,

    #[error("q must be a positive integer, got {0}")]
    NonPositiveModulus(i64),

    #[error("division by zero in evaluation: {0}")]
    DivisionByZero(&'static str),

    #[error("graph has a loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("{0}")]
    Invalid(String),
}
