// Writes the distance sequence `H(i - 1, i)` as an OEIS-style b-file.
// In base 2 this is the binary ruler sequence (OEIS A001511).
//
// ```text
// cargo run -p radix-hamming --example ruler_bfile -- 2 64
// ```

use std::error::Error;
use std::io::{self, Write};

use radix_hamming::cli::{cmd_seq, SeqFormat};
use radix_hamming::{distance_sequence, Base};

/// First terms of A001511.
const A001511: [u64; 16] = [1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1, 5];

fn write_bfile<W: Write>(n: u32, m: u64, out: &mut W) -> Result<(), Box<dyn Error>> {
    cmd_seq(m, Base::new(n)?, SeqFormat::Bfile, out)?;
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ruler: Vec<u64> = distance_sequence(16, Base::BINARY)
        .map(|d| d.get())
        .collect();
    assert_eq!(ruler, A001511);

    let mut buf = Vec::new();
    write_bfile(3, 9, &mut buf)?;
    print!("{}", String::from_utf8(buf)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let mut args = std::env::args().skip(1);
    let (Some(n), Some(m)) = (args.next(), args.next()) else {
        return run_example();
    };
    write_bfile(n.parse()?, m.parse()?, &mut io::stdout().lock())
}
