use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("exponent {exp} outside window [{min_exp}, {order})")]
    OutOfWindow { exp: i64, min_exp: i64, order: i64 },
    #[error("invalid window: min_exp {min_exp} exceeds order {order}")]
    InvalidWindow { min_exp: i64, order: i64 },
    #[error("divisor 1 - c*q^{exp} has no unit constant term")]
    NonUnitDivisor { exp: i64 },
    #[error("quadratic form {0} is not positive definite")]
    NotPositiveDefinite(String),
    #[error("checkpoint {checkpoint} beyond table range (max n = {max_n})")]
    CheckpointOutOfRange { checkpoint: u64, max_n: u64 },
    #[error("{0}")]
    Usage(String),
}
