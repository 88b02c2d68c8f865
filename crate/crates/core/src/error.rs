use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty sequence")]
    Empty,

    #[error("duplicate value {0}")]
    DuplicateValue(i64),

    #[error("value {value} out of range 1..={n}")]
    ValueOutOfRange { value: i64, n: usize },

    #[error("v_{index} = {value} out of range, bound 1..={index}")]
    VDigitOutOfRange { index: usize, value: i64 },

    #[error("r_{index} = {value} out of range, bound {bound}")]
    RDigitOutOfRange {
        index: usize,
        value: i64,
        bound: usize,
    },

    #[error("k = {k} out of range 1..={n}")]
    LastValueOutOfRange { k: i64, n: usize },

    #[error("n must be at least 1")]
    ZeroSize,

    #[error(
        "n = {n} exceeds the enumeration ceiling {ceiling}; raise the ceiling to run it anyway"
    )]
    AboveCeiling { n: usize, ceiling: usize },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: u128, max: u128 },

    #[error("parts must be at least 1")]
    ZeroParts,

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}
