use thiserror::Error;

/// Errors raised by the engine. Every variant is a domain error; callers
/// that need a machine-readable tag use [`Error::kind`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: declared {declared}, computed {computed}")]
    RankMismatch { declared: usize, computed: usize },
    #[error("matrix is not homogeneous: (1,...,1) is not in the row space")]
    NotHomogeneous,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("vector {0:?} is not in the kernel lattice")]
    NotInLattice(Vec<i64>),
    #[error("weight not generic: tie on {0:?}")]
    WeightNotGeneric(Vec<i64>),
    #[error("{0} budget exceeded")]
    BudgetExceeded(&'static str),
    #[error("degenerate parameter: standard pair {0} gives a positive-dimensional solution set")]
    DegenerateParameter(String),
    #[error("restriction must contain nsupp(v) = {0:?} and be a subset of NS")]
    InvalidRestriction(Vec<usize>),
    #[error("dimension unsupported: n - d = {0}")]
    DimensionUnsupported(usize),
    #[error("perturbation vector hits zero coordinate {0}")]
    PerturbationHitsZero(usize),
    #[error("exponent does not have minimal negative support (witness {0:?})")]
    NotMinimal(Vec<i64>),
    #[error("order out of range: {0}")]
    OrderOutOfRange(String),
    #[error("condition certificate is not all-zero")]
    ConditionNotSatisfied,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RankMismatch { .. } => "rank_mismatch",
            Error::NotHomogeneous => "not_homogeneous",
            Error::Shape(_) => "shape",
            Error::NotInLattice(_) => "not_in_lattice",
            Error::WeightNotGeneric(_) => "weight_not_generic",
            Error::BudgetExceeded(_) => "budget_exceeded",
            Error::DegenerateParameter(_) => "degenerate_parameter",
            Error::InvalidRestriction(_) => "invalid_restriction",
            Error::DimensionUnsupported(_) => "dimension_unsupported",
            Error::PerturbationHitsZero(_) => "perturbation_hits_zero",
            Error::NotMinimal(_) => "not_minimal",
            Error::OrderOutOfRange(_) => "order_out_of_range",
            Error::ConditionNotSatisfied => "condition_not_satisfied",
            Error::Parse(_) => "parse",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
