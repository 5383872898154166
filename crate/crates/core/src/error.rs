use thiserror::Error;

use crate::xfield::FieldError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("malformed identifier: {0}")]
    MalformedId(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("admissibility violation: nonzero paths reach the length cap {cap}")]
    AdmissibilityViolation { cap: usize },
    #[error("objects live in different module categories")]
    AlgebraMismatch,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("decomposition inconclusive: {0}")]
    DecompositionInconclusive(String),
    #[error("algebra is not Nakayama: {0}")]
    NotNakayama(String),
    #[error("brute-force enumeration needs a finite prime field")]
    BruteNeedsPrimeField,
    #[error("enumeration budget of {budget} candidates exceeded")]
    EnumerationBudgetExceeded { budget: usize },
    #[error("indecomposable list not stable at dimension bound {bound}: new module with dimension vector {dims:?}")]
    NotRepresentationFiniteWithinBounds { bound: usize, dims: Vec<usize> },
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("module is not self-orthogonal: {0}")]
    NotSelfOrthogonal(String),
    #[error("not a source point extension: {0}")]
    NotSourceExtension(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("summand missing: {0}")]
    SummandMissing(String),
    #[error("summand has residue division ring of dimension {0} over the prime field")]
    NonSplitResidue(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
