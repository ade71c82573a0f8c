use std::fmt;

use thiserror::Error;

/// Which factor of a closed-form denominator vanished.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Vanishing {
    /// `x^r z = 1`
    FirstRatio,
    /// `y^r z = 1`
    SecondRatio,
    /// Both `x^r z = 1` and `y^r z = 1`.
    BothRatios,
    /// The quadratic denominator of binomial term `i` of a power sum.
    Term(u32),
}

impl fmt::Display for Vanishing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vanishing::FirstRatio => f.write_str("x^r*z = 1"),
            Vanishing::SecondRatio => f.write_str("y^r*z = 1"),
            Vanishing::BothRatios => f.write_str("x^r*z = 1 and y^r*z = 1"),
            Vanishing::Term(i) => write!(f, "binomial term i = {i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different rings: sqrt({0}) vs sqrt({1})")]
    DiscMismatch(String, String),
    #[error("element has zero norm and is not invertible")]
    NotInvertible,
    #[error("value has a nonzero surd part: {0}")]
    SurdResidue(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(&'static str),
    #[error("degenerate discriminant: p^2 - 4q = 0")]
    DegenerateDiscriminant,
    #[error("denominator vanishes ({0})")]
    DenominatorVanishes(Vanishing),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
