use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator vanishes at the evaluation point")]
    ZeroDenominator,

    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("objective {index} has a non-positive denominator at the candidate point")]
    DomainViolation { index: usize },

    #[error("candidate point violates constraint row {row}")]
    InfeasibleCandidate { row: usize },

    #[error("epsilon component {index} is negative")]
    NegativeEpsilon { index: usize },

    #[error("feasible set is empty")]
    EmptyFeasibleSet,

    #[error("problem has no objectives")]
    NoObjectives,

    #[error("malformed linear program: {0}")]
    MalformedLp(String),

    /// Two independent decision routes disagreed. Never expected on valid input.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(&'static str),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroDenominator => "ZeroDenominator",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::DomainViolation { .. } => "DomainViolation",
            Error::InfeasibleCandidate { .. } => "InfeasibleCandidate",
            Error::NegativeEpsilon { .. } => "NegativeEpsilon",
            Error::EmptyFeasibleSet => "EmptyFeasibleSet",
            Error::NoObjectives => "NoObjectives",
            Error::MalformedLp(_) => "MalformedLp",
            Error::Inconsistent(_) => "Inconsistent",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_len(what: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            what,
            expected,
            found,
        })
    }
}
