use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate form: {0}")]
    DegenerateForm(String),
    #[error("vectors are linearly dependent: {0}")]
    DependentBasis(String),
    #[error("invalid symplectic space: {0}")]
    InvalidSpace(String),
    #[error("operator is not symmetric with respect to the symplectic form")]
    NotSymmetric,
    #[error("degenerate restriction of the trace form to {0}")]
    DegenerateRestriction(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("algebra does not carry TKK labels")]
    NotBuilt,
    #[error("invalid sl2-triple: {0}")]
    InvalidTriple(String),
    #[error("ad(h) has an eigenvalue outside -2..2: {0}")]
    NotShort(String),
    #[error("ad(h) is not diagonalizable over the rationals")]
    NotSemisimpleElement,
    #[error("algebra is not simple")]
    NotSimple,
    #[error("extracted J2 does not contain the identity operator")]
    NonUnitalJ2,
    #[error("invalid root system type {0}")]
    InvalidType(String),
    #[error("no witness found for marking {0}")]
    WitnessNotFound(String),
    #[error("inconsistent existence decision for marking {0}")]
    InconsistentDecision(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}
