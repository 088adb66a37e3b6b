// The distance between `m - 1` and `m` is one more than the exponent of the
// largest power of the base dividing `m`. This walks a range of `m` for a few
// bases, compares the digit-by-digit distance against the valuation shortcut,
// and tallies how often each of the three situations comes up: `m` a pure
// power of the base, `m` a multiple of the base that is not a pure power, and
// `m` not divisible by the base.
//
// ```text
// cargo run -p radix-hamming --example lemma_cases
// ```

use std::error::Error;

use radix_hamming::{consecutive_distance, hamming_numerals, to_numeral, valuation, Base};

#[derive(Debug, Default)]
struct Tally {
    pure_power: u64,
    multiple: u64,
    coprime_step: u64,
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in [2u32, 3, 6, 10] {
        let base = Base::new(n)?;
        let mut tally = Tally::default();
        for m in 1..=10_000u64 {
            let v = valuation(m, base)?.exponent;
            let unit = m / u64::from(n).pow(v);
            let by_digits = hamming_numerals(&to_numeral(m, base), &to_numeral(m - 1, base))?;
            let by_valuation = consecutive_distance(m, base)?;
            if by_digits != by_valuation {
                return Err(format!("m = {m}, base {n}: {by_digits} != {by_valuation}").into());
            }
            match (v, unit) {
                (0, _) => {
                    assert_eq!(by_digits.get(), 1);
                    tally.coprime_step += 1;
                }
                (_, 1) => tally.pure_power += 1,
                _ => tally.multiple += 1,
            }
        }
        println!("base {n:>2}: {tally:?}");
    }

    let base = Base::new(6)?;
    for m in [36u64, 12, 7] {
        println!(
            "base 6: {} -> {}  distance {}",
            to_numeral(m - 1, base).padded_to(to_numeral(m, base).len()),
            to_numeral(m, base),
            consecutive_distance(m, base)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
