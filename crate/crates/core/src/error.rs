use thiserror::Error;

/// Errors raised by series arithmetic and product construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term must be +1 or -1 to invert over the integers, found {0}")]
    NonUnitConstantTerm(String),
    #[error("leading coefficient of divisor must be +1 or -1, found {0}")]
    NonUnitLeadingCoefficient(String),
    #[error("dividend valuation {dividend} is below divisor valuation {divisor}")]
    ValuationMismatch { dividend: usize, divisor: usize },
    #[error("divisor is identically zero to its precision")]
    ZeroDivisor,
    #[error("shift by -{shift} would discard a nonzero coefficient at q^{index}")]
    NegativeShiftNonzeroLowTerms { shift: usize, index: usize },
    #[error("invalid product factor (q^{offset}; q^{modulus})^{exponent}: offset and modulus must be >= 1 and exponent nonzero")]
    InvalidFactor {
        offset: usize,
        modulus: usize,
        exponent: i64,
    },
    #[error("unknown series name `{0}`")]
    UnknownSeries(String),
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
