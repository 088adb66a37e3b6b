//! Reference computations for integration tests, written against plain
//! strings so they share no code path with the library.

#![allow(dead_code)]

const ALPHABET: &[u8] = b"0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";

pub const BASES: [u32; 8] = [2, 3, 4, 5, 6, 10, 16, 36];

/// Base-`n` text of `m` by repeated division.
pub fn radix_string(mut m: u64, n: u32) -> String {
    assert!((2..=36).contains(&n));
    let n = n as u64;
    let mut out = Vec::new();
    loop {
        out.push(ALPHABET[(m % n) as usize]);
        m /= n;
        if m == 0 {
            break;
        }
    }
    out.reverse();
    String::from_utf8(out).unwrap()
}

/// Distance between two digit strings after left-padding with '0'.
pub fn padded_distance(a: &str, b: &str) -> u64 {
    let width = a.len().max(b.len());
    let a = format!("{a:0>width$}");
    let b = format!("{b:0>width$}");
    a.bytes().zip(b.bytes()).filter(|(x, y)| x != y).count() as u64
}

/// `H(m - 1, m)` from the written numerals.
pub fn oracle_step(m: u64, n: u32) -> u64 {
    padded_distance(&radix_string(m - 1, n), &radix_string(m, n))
}

/// `S(0..=max)` as a prefix table, `table[m] = S(m)`.
pub fn oracle_prefix_sums(max: u64, n: u32) -> Vec<u64> {
    let mut table = Vec::with_capacity(max as usize + 1);
    table.push(0);
    let mut total = 0;
    for m in 1..=max {
        total += oracle_step(m, n);
        table.push(total);
    }
    table
}

/// Largest `j` with `n^j <= m`, by exact integer comparison.
pub fn floor_log(m: u64, n: u32) -> u32 {
    assert!(m >= 1);
    let mut j = 0;
    let mut p = n as u128;
    while p <= m as u128 {
        p *= n as u128;
        j += 1;
    }
    j
}
