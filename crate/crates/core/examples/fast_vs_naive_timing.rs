// Times the closed-form sum against the linear reference for growing `m`.
// For criterion measurements use `cargo bench -p radix-hamming`.
//
// ```text
// cargo run --release -p radix-hamming --example fast_vs_naive_timing
// ```

use std::error::Error;

use radix_hamming::cli::{cmd_bench, DEFAULT_GUARD};
use radix_hamming::Base;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sizes = [1_000u64, 10_000, 100_000, 1_000_000, 1_000_000_000_000];
    for n in [2u32, 10] {
        let base = Base::new(n)?;
        for m in sizes {
            let (report, notice) = cmd_bench(m, base, true, DEFAULT_GUARD)?;
            if let Some(naive) = report.naive_total {
                assert_eq!(naive, report.fast_total);
            }
            println!(
                "base {n:>2}  m = {m:>14}  S = {:>14}  fast {:>3} terms {:>10?}  naive {}",
                report.fast_total,
                report.fast_terms,
                report.fast_time,
                match (report.naive_time, notice) {
                    (Some(t), _) => format!("{t:?}"),
                    (None, _) => "skipped".to_string(),
                }
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
