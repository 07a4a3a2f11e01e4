use thiserror::Error;

/// Failures raised by the algebra and operator layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in κ-field")]
    DivisionByZero,
    #[error("κ-pole at κ = {kappa}: denominator factor {factor} vanishes")]
    KappaPole { kappa: String, factor: String },
    #[error("division by a non-real κ-polynomial: {0}")]
    NonRealDenominator(String),
    #[error("rank mismatch: expected {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("input is not symmetric: transposition x{0} <-> x{1} changes it")]
    NotSymmetric(usize, usize),
    #[error("non-polynomial operator output")]
    NonPolynomial,
    #[error("spectral degeneracy at κ = {kappa} between weights {a:?} and {b:?}")]
    SpectralDegeneracy { kappa: String, a: Vec<u32>, b: Vec<u32> },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("convention mismatch: {0}")]
    ConventionMismatch(String),
    #[error("result is not proportional to a single polynomial: {0}")]
    NotProportional(String),
    #[error("weight {0:?} is not dominant")]
    NonDominant(Vec<i64>),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
