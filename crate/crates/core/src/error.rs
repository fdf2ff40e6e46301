use thiserror::Error;

/// Errors raised by the library. Every variant maps to a stable string code
/// used by the command line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in rational construction")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,

    #[error("basis degrees differ ({from} vs {to})")]
    DegreeMismatch { from: usize, to: usize },
    #[error("change-of-basis matrix is singular")]
    SingularBasis,
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("coefficient count {found} does not match basis size {expected}")]
    CoefficientCount { expected: usize, found: usize },
    #[error("index {index} out of range for basis of degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },

    #[error("both polynomials are zero")]
    BothZero,
    #[error("sizing degree must be at least 1")]
    DegreeTooLow,
    #[error("Bezout basis must have degree {expected}, got {found}")]
    BasisDegreeMismatch { expected: usize, found: usize },
    #[error("interpolation nodes are not pairwise distinct")]
    RepeatedNodes,
    #[error("polynomial {index} has degree {degree} exceeding deg P = {n}")]
    DegreeViolation {
        index: usize,
        degree: usize,
        n: usize,
    },

    #[error("bad dimensions: {0}")]
    BadDimensions(String),
    #[error("null space has dimension {0}, expected 1")]
    NullityNotOne(usize),
    #[error("zero denominator in root formula")]
    ZeroDenominator,

    #[error("trailing columns of T are dependent; rank assumption violated")]
    RankAssumptionViolated,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("linear system has {0} free parameters")]
    NonUniqueSolution(usize),
    #[error("all polynomials are zero")]
    AllZero,
    #[error("inputs are expressed in different bases")]
    MixedBases,
    #[error("need at least {0} polynomials")]
    TooFewInputs(usize),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::BadRational(_) => "BadRational",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::Singular => "Singular",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::SingularBasis => "SingularBasis",
            Error::InvalidBasis(_) => "InvalidBasis",
            Error::CoefficientCount { .. } => "CoefficientCount",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::BothZero => "BothZero",
            Error::DegreeTooLow => "DegreeTooLow",
            Error::BasisDegreeMismatch { .. } => "BasisDegreeMismatch",
            Error::RepeatedNodes => "RepeatedNodes",
            Error::DegreeViolation { .. } => "DegreeViolation",
            Error::BadDimensions(_) => "BadDimensions",
            Error::NullityNotOne(_) => "NullityNotOne",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::RankAssumptionViolated => "RankAssumptionViolated",
            Error::NoSolution => "NoSolution",
            Error::NonUniqueSolution(_) => "NonUniqueSolution",
            Error::AllZero => "AllZero",
            Error::MixedBases => "MixedBases",
            Error::TooFewInputs(_) => "TooFewInputs",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
