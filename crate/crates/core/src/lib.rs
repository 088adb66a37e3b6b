//! Hamming distances between whole numbers written in base `n`.
//!
//! - [`numeral`]: radix conversion, parsing and left-zero padding.
//! - [`hamming`]: symbolwise distance between equal-length sequences.
//! - [`ruler`]: the distance between `m - 1` and `m` via the base-`n`
//!   valuation of `m`, and the prefix sum `S(m)` in `O(log_n m)` steps
//!   alongside a linear reference.
//! - [`cli`]: the command-line front end used by the `radix-hamming` binary.
//!
//! ```
//! use radix_hamming::{sum_fast, sum_naive, Base};
//!
//! let base = Base::new(10).unwrap();
//! assert_eq!(sum_fast(100, base).unwrap().total, 111);
//! assert_eq!(sum_naive(100, base).total, 111);
//! ```

pub mod cli;
mod error;
pub mod hamming;
pub mod numeral;
pub mod ruler;

pub use error::{Error, Result};
pub use hamming::{hamming, hamming_numerals, hamming_str, Distance};
pub use numeral::{format, pad_to_common_length, parse, to_numeral, value_of, Base, Numeral};
pub use ruler::{
    consecutive_distance, distance_sequence, sum_fast, sum_naive, sum_power_identity, valuation,
    DistanceSequence, SumMode, SumResult, Valuation,
};
