use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid diagram: {0}")]
    Validation(String),
    #[error("invalid n-sign: {0}")]
    InvalidSign(String),
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("coefficient x^{requested} requested from a series truncated at order {order}")]
    OrderExceeded { requested: usize, order: usize },
    #[error("t-exponent {0} of the normalized Yokota polynomial is not divisible by 3")]
    NonCubicExponent(i32),
    #[error("E-chain witness mismatch on {0}")]
    WitnessMismatch(String),
    #[error("diagram has {crossings} crossings, over the budget of {budget}")]
    BudgetExceeded { crossings: usize, budget: usize },
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("bad catalog parameter: {0}")]
    BadParameter(String),
    #[error("order certificate violated: {0}")]
    CertificateViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
