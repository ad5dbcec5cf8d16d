use thiserror::Error;

/// A parameter tuple outside the domain of its function.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("parameter {name} must be finite (got {value})")]
    NonFinite { name: &'static str, value: f64 },

    #[error("parameter {name} must be positive (got {value})")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{first} = {second} is excluded: the two exponents must differ")]
    EqualExponents {
        first: &'static str,
        second: &'static str,
    },

    #[error("{pair} = {other} is excluded: the numerator and denominator pairs coincide")]
    CoincidentPairs {
        pair: &'static str,
        other: &'static str,
    },

    #[error("G requires b > a > 0 (got a = {a}, b = {b})")]
    Unordered { a: f64, b: f64 },

    #[error("(α,β) = ({alpha}, {beta}) is an excluded point of Q: it must avoid (0,1) and (1,0)")]
    QExcludedPoint { alpha: f64, beta: f64 },

    #[error("logarithms of {first} and {second} coincide in double precision")]
    IndistinctLogarithms {
        first: &'static str,
        second: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Param(#[from] ParamError),

    #[error("argument t must be finite (got {0})")]
    NonFiniteArgument(f64),

    #[error("derivative order {order} is not supported (expected {expected})")]
    UnsupportedOrder { order: u32, expected: &'static str },

    #[error("invalid option: {0}")]
    InvalidOption(&'static str),

    #[error("finite-difference stencil around t = {t} with step {step} crosses t = 0")]
    StencilCrossesZero { t: f64, step: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(&'static str),

    #[error("number of draws must be at least 1")]
    NoDraws,

    #[error("log-derivatives of order ≥ 2 vanish identically for ratio {ratio}")]
    LogAffine { ratio: f64 },
}
