use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("root-of-unity order must be at least 1")]
    ZeroOrder,

    #[error("root-of-unity order {order} exceeds the ceiling {ceiling}")]
    OrderCeiling { order: u64, ceiling: u64 },

    #[error("cyclotomic orders differ: {left} vs {right} (embed into a common order first)")]
    OrderMismatch { left: u64, right: u64 },

    #[error("{divisor} does not divide {order}")]
    NotDivisor { divisor: u64, order: u64 },

    #[error("{k} is not coprime to {order}")]
    NotCoprime { k: i64, order: u64 },

    #[error("{0} is not an odd prime")]
    NotPrime(u64),

    #[error("{a} is zero modulo {p}")]
    ZeroDivisor { a: i64, p: u64 },

    #[error("inexact division by a polynomial")]
    InexactDivision,

    #[error("enumeration visits {count} functions, budget is {budget}")]
    BudgetExceeded { count: BigUint, budget: u64 },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid function: {0}")]
    InvalidFunction(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
