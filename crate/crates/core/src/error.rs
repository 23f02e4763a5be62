use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("Groebner budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// `f` lies in the ideal of the line, so the unprojection ring has zero divisors.
    #[error("f lies in I, so S_un(f) is not a domain")]
    NotADomain,
}

pub type Result<T> = std::result::Result<T, Error>;
