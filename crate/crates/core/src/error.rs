use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base must be at least 2, got {0}")]
    InvalidBase(u64),

    #[error("textual numerals support bases 2..=36, got {0}")]
    UnsupportedTextBase(u32),

    #[error("empty numeral")]
    EmptyNumeral,

    #[error("invalid digit {ch:?} for base {base}")]
    InvalidDigit { ch: char, base: u32 },

    #[error("digit {digit} out of range for base {base}")]
    DigitOutOfRange { digit: u32, base: u32 },

    #[error("base mismatch: {left} vs {right}")]
    BaseMismatch { left: u32, right: u32 },

    #[error("hamming distance is undefined for sequences of unequal length ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("arithmetic overflow")]
    Overflow,

    #[error("valuation of zero is undefined")]
    ZeroValuation,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
