//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors raised by constructors, parsers and evaluators.
///
/// Internal invariant violations (a reducible word handed to a routine that
/// expects a normal form, mismatched matrix dimensions, ...) are programming
/// errors and panic instead.
#[derive(Debug, Error)]
pub enum Error {
    /// Expression could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A generator name that does not belong to the chosen algebra.
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    /// Laurent polynomials cannot be evaluated at q = 0.
    #[error("evaluation at q = 0 is undefined")]
    EvalAtZero,

    /// The denominator of a rational function vanishes at the chosen point.
    #[error("denominator vanishes at q = {0}")]
    DenominatorVanishes(String),

    /// Division of rational functions by zero.
    #[error("division by zero")]
    DivisionByZero,

    /// Weight parameters must be coprime.
    #[error("weights must be coprime, got ({0}, {1})")]
    NotCoprime(u32, u32),

    /// A parameter is outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Two elements living over different presentations were combined.
    #[error("mismatched presentations: {0} vs {1}")]
    MixedPresentations(String, String),

    /// An element expected to be coinvariant (degree zero) is not.
    #[error("element is not coinvariant: term of degree {0}")]
    NotCoinvariant(i64),

    /// An operation that requires a zero constant term received one.
    #[error("element has a nonzero constant term")]
    NonzeroConstantTerm,

    /// A probe of the zero element is meaningless.
    #[error("element is zero")]
    ZeroElement,
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
