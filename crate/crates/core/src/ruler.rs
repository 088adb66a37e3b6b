//! Consecutive-integer Hamming distances and their prefix sums.
//!
//! Going from `m - 1` to `m` in base `n` rewrites the trailing run of
//! `n - 1` digits plus one more digit, so the distance is `v + 1` where `v` is
//! the exponent of the largest power of `n` dividing `m`. Summing over
//! `1..=m` and swapping the order of summation gives
//!
//! ```text
//! S(m) = sum_{j >= 0, n^j <= m} floor(m / n^j)
//! ```
//!
//! since exactly `floor(m / n^j)` integers in `1..=m` are multiples of `n^j`.
//! Note the floor: a ceiling overcounts (it would give `S(1) = 2` in base 2).

use std::fmt;
use std::iter::FusedIterator;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hamming::Distance;
use crate::numeral::{write_digits_lsb, Base};
#[cfg(doc)]
use crate::{hamming::hamming_numerals, numeral::to_numeral};

/// Exponent of the largest power of the base dividing some `m >= 1`.
///
/// For composite bases this is the valuation with respect to the base itself,
/// not to any of its prime factors: `12` in base 6 has exponent 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valuation {
    pub exponent: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SumMode {
    Fast,
    Naive,
}

impl fmt::Display for SumMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SumMode::Fast => "fast",
            SumMode::Naive => "naive",
        })
    }
}

/// `S(m)` together with how it was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SumResult {
    pub total: u64,
    pub mode: SumMode,
    /// Power terms for [`SumMode::Fast`], consecutive pairs for [`SumMode::Naive`].
    pub terms_evaluated: u64,
}

pub fn valuation(m: u64, base: Base) -> Result<Valuation> {
    if m == 0 {
        return Err(Error::ZeroValuation);
    }
    let n = u64::from(base.get());
    let mut rest = m;
    let mut exponent = 0;
    while rest.is_multiple_of(n) {
        rest /= n;
        exponent += 1;
    }
    Ok(Valuation { exponent })
}

/// `H(m - 1, m)` in base `base`, from the valuation of `m`.
pub fn consecutive_distance(m: u64, base: Base) -> Result<Distance> {
    valuation(m, base).map(|v| Distance::new(u64::from(v.exponent) + 1))
}

/// `S(m)` by converting every integer in `0..=m` and comparing digits.
///
/// Linear in `m`. This is the reference the closed form is checked against.
/// Equivalent to summing [`hamming_numerals`] over consecutive
/// [`to_numeral`] pairs, without allocating per step.
pub fn sum_naive(m: u64, base: Base) -> SumResult {
    let mut total = 0u64;
    let mut prev = Vec::new();
    let mut next = Vec::new();
    write_digits_lsb(0, base, &mut prev);
    for i in 1..=m {
        write_digits_lsb(i, base, &mut next);
        total += padded_distance_lsb(&prev, &next);
        std::mem::swap(&mut prev, &mut next);
    }
    SumResult {
        total,
        mode: SumMode::Naive,
        terms_evaluated: m,
    }
}

/// Hamming distance of two LSB-first digit strings, treating missing
/// high digits as zeros.
fn padded_distance_lsb(a: &[u32], b: &[u32]) -> u64 {
    let len = a.len().max(b.len());
    let digit = |s: &[u32], i: usize| s.get(i).copied().unwrap_or(0);
    (0..len).filter(|&i| digit(a, i) != digit(b, i)).count() as u64
}

/// `S(m)` from the closed form, one term per power of the base not
/// exceeding `m`.
pub fn sum_fast(m: u64, base: Base) -> Result<SumResult> {
    let n = u64::from(base.get());
    let mut total = 0u64;
    let mut terms = 0u64;
    let mut power = 1u64;
    while power <= m {
        total = total.checked_add(m / power).ok_or(Error::Overflow)?;
        terms += 1;
        power = match power.checked_mul(n) {
            Some(p) => p,
            None => break,
        };
    }
    Ok(SumResult {
        total,
        mode: SumMode::Fast,
        terms_evaluated: terms,
    })
}

/// `S(n^k) = (n^(k+1) - 1) / (n - 1)`.
pub fn sum_power_identity(k: u32, base: Base) -> Result<u64> {
    let n = u128::from(base.get());
    // n^k fits in u64 and n < 2^32, so n^(k+1) fits in u128.
    let power = n
        .checked_pow(k)
        .filter(|&p| p <= u128::from(u64::MAX))
        .ok_or(Error::Overflow)?;
    let total = (power * n - 1) / (n - 1);
    u64::try_from(total).map_err(|_| Error::Overflow)
}

/// `H(i - 1, i)` for `i = 1..=m`, lazily. Empty when `m == 0`.
pub fn distance_sequence(m: u64, base: Base) -> DistanceSequence {
    DistanceSequence {
        next: 1,
        end: m,
        base,
    }
}

#[derive(Debug, Clone)]
pub struct DistanceSequence {
    next: u64,
    end: u64,
    base: Base,
}

impl Iterator for DistanceSequence {
    type Item = Distance;

    fn next(&mut self) -> Option<Distance> {
        if self.next > self.end {
            return None;
        }
        let i = self.next;
        self.next = i.checked_add(1).unwrap_or_else(|| {
            // i == u64::MAX; park past the end
            self.end = 0;
            1
        });
        Some(consecutive_distance(i, self.base).expect("i >= 1"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end + 1).saturating_sub(self.next);
        match usize::try_from(left) {
            Ok(n) => (n, Some(n)),
            Err(_) => (usize::MAX, None),
        }
    }
}

impl FusedIterator for DistanceSequence {}
