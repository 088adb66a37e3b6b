//! Symbolwise Hamming distance.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeral::{pad_to_common_length, Numeral};

/// Number of positions at which two equal-length sequences differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Distance(u64);

impl Distance {
    pub const fn new(value: u64) -> Self {
        Distance(value)
    }

    #[inline]
    pub const fn get(self) -> u64 {
        self.0
    }
}

impl From<Distance> for u64 {
    fn from(d: Distance) -> u64 {
        d.0
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Hamming distance between two sequences of equal length.
///
/// Unequal lengths are an error, not a truncated comparison.
pub fn hamming<T: PartialEq>(s1: &[T], s2: &[T]) -> Result<Distance> {
    if s1.len() != s2.len() {
        return Err(Error::LengthMismatch {
            left: s1.len(),
            right: s2.len(),
        });
    }
    let differing = s1.iter().zip(s2).filter(|(a, b)| a != b).count();
    Ok(Distance(differing as u64))
}

/// Hamming distance between two strings, compared char by char.
pub fn hamming_str(s1: &str, s2: &str) -> Result<Distance> {
    let a: Vec<char> = s1.chars().collect();
    let b: Vec<char> = s2.chars().collect();
    hamming(&a, &b)
}

/// Hamming distance between two numerals after left-padding the shorter one
/// with zeros.
pub fn hamming_numerals(a: &Numeral, b: &Numeral) -> Result<Distance> {
    let (a, b) = pad_to_common_length(a, b)?;
    hamming(a.digits(), b.digits())
}
