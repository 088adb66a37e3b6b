// Converting, parsing, formatting and padding numerals.
//
// ```text
// cargo run -p radix-hamming --example radix_conversion
// ```

use std::error::Error;

use radix_hamming::{format, pad_to_common_length, parse, to_numeral, value_of, Base, Numeral};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let hex = Base::new(16)?;
    let ff = parse("ff", hex)?;
    println!(
        "ff in base 16 -> digits {:?} -> {} = {}",
        ff.digits(),
        format(&ff)?,
        value_of(&ff)?
    );

    for n in [2, 3, 8, 10, 36] {
        let x = to_numeral(1_000_000, Base::new(n)?);
        println!("1000000 in base {n:>2}: {x}");
    }

    // leading zeros are accepted and stripped
    let bin = Base::BINARY;
    assert_eq!(parse("000111", bin)?, to_numeral(7, bin));

    let (a, b) = pad_to_common_length(&to_numeral(7, bin), &to_numeral(8, bin))?;
    println!("7 and 8 padded: {a} {b}");

    // bases past 36 have no text form but work as digit vectors
    let base_1000 = Base::new(1000)?;
    let x = Numeral::from_digits(base_1000, vec![1, 234, 567])?;
    println!("[1, 234, 567] in base 1000 = {}", value_of(&x)?);
    assert!(format(&x).is_err());

    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
