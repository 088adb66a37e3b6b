// Hamming distance between strings and between numerals.
//
// ```text
// cargo run -p radix-hamming --example word_distance
// ```

use std::error::Error;

use radix_hamming::{hamming, hamming_numerals, hamming_str, parse, Base};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (a, b) in [
        ("math", "mats"),
        ("math", "math"),
        ("karolin", "kathrin"),
        ("0111", "1000"),
    ] {
        println!("H({a}, {b}) = {}", hamming_str(a, b)?);
    }

    match hamming_str("math", "maths") {
        Ok(d) => return Err(format!("unequal lengths gave {d}").into()),
        Err(e) => println!("H(math, maths): {e}"),
    }

    // any element type with equality works
    println!(
        "H([1, 0, 1], [1, 1, 1]) = {}",
        hamming(&[1, 0, 1], &[1, 1, 1])?
    );

    // numerals of different length are left-padded first
    let base = Base::new(6)?;
    let (a, b) = (parse("20", base)?, parse("5", base)?);
    println!(
        "H(20, 5) in base 6 = {} (compares 20 with 05)",
        hamming_numerals(&a, &b)?
    );

    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
