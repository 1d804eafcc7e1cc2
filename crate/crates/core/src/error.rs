use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("cannot parse rational from {0:?}")]
    Parse(String),

    /// A parameter such as `u`, `alpha` or `beta` hit an excluded value.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An index or size argument outside the operation's domain.
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("series is not invertible: constant term is not a unit")]
    NonInvertible,
}
