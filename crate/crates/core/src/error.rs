use thiserror::Error;

use crate::report::Report;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {operand}: expected {expected}, found {found}")]
    DimensionMismatch {
        operand: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("malformed structure: {0}")]
    Malformed(String),
    #[error("algebra and coalgebra carry different twisting maps")]
    AlphaMismatch,
    #[error("wrong number of maps: tensor has rank {rank}, got {given}")]
    MapCount { rank: usize, given: usize },

    #[error("generator-based morphism checks are only defined for untwisted (alpha = Id) structures")]
    GeneratorsNeedUntwisted,
    #[error("generator index {0} out of range")]
    GeneratorOutOfRange(usize),
    #[error("map is not a structure morphism")]
    NotAMorphism(Box<Report>),
    #[error("structure kinds differ: {0}")]
    KindMismatch(String),

    #[error("twisting by a morphism requires alpha = Id on the input")]
    AlphaNotIdentity,
    #[error("r is not fixed by the tensor square of the twisting map")]
    NotAlphaInvariant,
    #[error("r is not fixed by the tensor square of the morphism")]
    NotFixedByMorphism,
    #[error("A(r) is not A-invariant: bracket with basis vector {witness} is nonzero")]
    NotAInvariant { witness: usize },
    #[error("structure carries no r")]
    MissingR,
    #[error("comultiplication is not [-,r]_* (first differing basis vector {witness})")]
    NotCoboundary { witness: usize },
    #[error("balanceator is not symmetric: B({0},{1}) != B({1},{0})")]
    AsymmetricBalanceator(usize, usize),
    #[error("r is not anti-symmetric")]
    NotAntisymmetric,
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown vertex {0:?}")]
    DanglingVertex(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("duplicate declaration {0:?}")]
    Duplicate(String),
    #[error("vertex map is not injective: {0:?} and {1:?} share an image")]
    NonInjectiveVertexMap(String, String),
    #[error("arrow {arrow:?} maps to {image:?} but endpoints are not preserved")]
    EndpointMismatch { arrow: String, image: String },
    #[error("morphism leaves {0:?} unmapped")]
    IncompleteMorphism(String),
    #[error("quiver has a directed cycle through {0:?}: infinite path algebra unsupported")]
    CyclicQuiver(String),

    #[error("document error: {0}")]
    Document(String),
}
