// Prefix sums `S(m)` of consecutive distances: the logarithmic closed form
// against the linear reference, and why the closed form uses floor.
//
// ```text
// cargo run -p radix-hamming --example closed_form_sum
// ```

use std::error::Error;

use radix_hamming::{sum_fast, sum_naive, sum_power_identity, Base};

/// The same closed form with ceiling division, which overcounts.
fn ceiling_variant(m: u64, n: u64) -> u64 {
    let mut total = 0;
    let mut power = 1;
    while power <= m {
        total += m.div_ceil(power);
        power *= n;
    }
    total
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!(
        "{:>8} {:>4} {:>10} {:>10} {:>6} {:>10}",
        "m", "base", "fast", "naive", "terms", "ceiling"
    );
    for (m, n) in [
        (1u64, 2u32),
        (4, 2),
        (9, 3),
        (100, 10),
        (1000, 7),
        (65_535, 16),
    ] {
        let base = Base::new(n)?;
        let fast = sum_fast(m, base)?;
        let naive = sum_naive(m, base);
        assert_eq!(fast.total, naive.total);
        println!(
            "{m:>8} {n:>4} {:>10} {:>10} {:>6} {:>10}",
            fast.total,
            naive.total,
            fast.terms_evaluated,
            ceiling_variant(m, u64::from(n))
        );
    }

    for (n, k) in [(2u32, 10u32), (3, 7), (10, 12)] {
        let base = Base::new(n)?;
        let m = u64::from(n).pow(k);
        println!(
            "S({n}^{k}) = {} = ({n}^{} - 1) / {}",
            sum_fast(m, base)?.total,
            k + 1,
            n - 1
        );
        assert_eq!(sum_fast(m, base)?.total, sum_power_identity(k, base)?);
    }

    let big = i64::MAX as u64;
    let r = sum_fast(big, Base::BINARY)?;
    println!(
        "S(2^63 - 1) in base 2 = {} after {} terms",
        r.total, r.terms_evaluated
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
