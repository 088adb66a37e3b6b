//! Radix representation of non-negative integers.
//!
//! Digits are stored most-significant first, so a [`Numeral`] reads the same
//! way as its written form: `8` in base 2 is `[1, 0, 0, 0]`.

use std::fmt;

use crate::error::{Error, Result};

const ALPHABET: &[u8; 36] = b"0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// Largest base with a textual form (`0-9` then `A-Z`).
pub const MAX_TEXT_BASE: u32 = 36;

/// A radix `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Base(u32);

impl Base {
    pub const BINARY: Base = Base(2);
    pub const DECIMAL: Base = Base(10);

    pub fn new(value: u32) -> Result<Self> {
        if value < 2 {
            return Err(Error::InvalidBase(value.into()));
        }
        Ok(Base(value))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Whether numerals in this base can be parsed from and formatted to text.
    pub fn has_text_form(self) -> bool {
        self.0 <= MAX_TEXT_BASE
    }

    fn require_text_form(self) -> Result<()> {
        if self.has_text_form() {
            Ok(())
        } else {
            Err(Error::UnsupportedTextBase(self.0))
        }
    }
}

impl TryFrom<u32> for Base {
    type Error = Error;

    fn try_from(value: u32) -> Result<Self> {
        Base::new(value)
    }
}

impl TryFrom<u64> for Base {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        u32::try_from(value)
            .map_err(|_| Error::InvalidBase(value))
            .and_then(Base::new)
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The digit expansion of a whole number in some base, most-significant first.
///
/// A numeral produced by [`to_numeral`] or [`parse`] is canonical: it has no
/// leading zeros, and zero is the single digit `[0]`. [`pad_to_common_length`]
/// produces non-canonical numerals with leading zeros, which still denote the
/// same value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Numeral {
    base: Base,
    digits: Vec<u32>,
}

impl Numeral {
    /// Builds a numeral from MSB-first digits, keeping any leading zeros.
    pub fn from_digits(base: Base, digits: Vec<u32>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::EmptyNumeral);
        }
        if let Some(&digit) = digits.iter().find(|&&d| d >= base.get()) {
            return Err(Error::DigitOutOfRange {
                digit,
                base: base.get(),
            });
        }
        Ok(Numeral { base, digits })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    /// Always false; a numeral has at least one digit.
    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.digits.len() == 1 || self.digits[0] != 0
    }

    /// Strips leading zeros, leaving `[0]` for zero.
    pub fn into_canonical(mut self) -> Self {
        let first_nonzero = self
            .digits
            .iter()
            .position(|&d| d != 0)
            .unwrap_or(self.digits.len() - 1);
        self.digits.drain(..first_nonzero);
        self
    }

    /// Left-pads with zero digits up to `len`. Shorter targets are a no-op.
    pub fn padded_to(&self, len: usize) -> Self {
        let pad = len.saturating_sub(self.digits.len());
        let mut digits = Vec::with_capacity(self.digits.len() + pad);
        digits.resize(pad, 0);
        digits.extend_from_slice(&self.digits);
        Numeral {
            base: self.base,
            digits,
        }
    }

    pub fn value(&self) -> Result<u64> {
        value_of(self)
    }
}

impl fmt::Display for Numeral {
    /// Uppercase text for bases up to 36; larger bases fall back to a
    /// bracketed digit list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match format(self) {
            Ok(s) => f.write_str(&s),
            Err(_) => write!(f, "{:?}_{}", self.digits, self.base),
        }
    }
}

/// Canonical base-`base` digits of `m`.
pub fn to_numeral(m: u64, base: Base) -> Numeral {
    let mut digits = Vec::new();
    write_digits_lsb(m, base, &mut digits);
    digits.reverse();
    Numeral { base, digits }
}

/// Overwrites `out` with the canonical digits of `m`, least-significant first.
pub(crate) fn write_digits_lsb(mut m: u64, base: Base, out: &mut Vec<u32>) {
    let n = u64::from(base.get());
    out.clear();
    loop {
        out.push((m % n) as u32);
        m /= n;
        if m == 0 {
            break;
        }
    }
}

/// Horner evaluation of `x`. Fails with [`Error::Overflow`] past `u64::MAX`.
pub fn value_of(x: &Numeral) -> Result<u64> {
    let n = u64::from(x.base.get());
    x.digits.iter().try_fold(0u64, |acc, &d| {
        acc.checked_mul(n)
            .and_then(|v| v.checked_add(u64::from(d)))
            .ok_or(Error::Overflow)
    })
}

/// Parses case-insensitive `[0-9A-Za-z]+` text in `base` into canonical form.
pub fn parse(text: &str, base: Base) -> Result<Numeral> {
    base.require_text_form()?;
    if text.is_empty() {
        return Err(Error::EmptyNumeral);
    }
    let digits = text
        .chars()
        .map(|ch| match ch.to_digit(base.get()) {
            Some(d) => Ok(d),
            None => Err(Error::InvalidDigit {
                ch,
                base: base.get(),
            }),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Numeral { base, digits }.into_canonical())
}

/// Uppercase, most-significant-first text. Leading zeros of a padded numeral
/// are kept.
pub fn format(x: &Numeral) -> Result<String> {
    x.base.require_text_form()?;
    Ok(x.digits
        .iter()
        .map(|&d| char::from(ALPHABET[d as usize]))
        .collect())
}

/// Left-pads the shorter numeral with zeros so both have the same length.
pub fn pad_to_common_length(a: &Numeral, b: &Numeral) -> Result<(Numeral, Numeral)> {
    if a.base != b.base {
        return Err(Error::BaseMismatch {
            left: a.base.get(),
            right: b.base.get(),
        });
    }
    let len = a.len().max(b.len());
    Ok((a.padded_to(len), b.padded_to(len)))
}
