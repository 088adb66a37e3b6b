//! Command-line front end: `convert`, `dist`, `sum`, `seq` and `bench`.
//!
//! Each subcommand is backed by a `cmd_*` function returning plain data, so
//! the binary stays a thin wrapper around [`run`].

use std::hint::black_box;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::hamming::{hamming_numerals, Distance};
use crate::numeral::{self, pad_to_common_length, parse, to_numeral, Base};
use crate::ruler::{distance_sequence, sum_fast, sum_naive, SumMode, SumResult};

/// Default cap on `m` for the linear-time naive sum.
pub const DEFAULT_GUARD: u64 = 10_000_000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Numeral(#[from] crate::Error),

    #[error(
        "naive mode refuses m = {m} above the guard of {guard}; use --mode fast or raise --guard"
    )]
    GuardExceeded { m: u64, guard: u64 },

    #[error("sequence length must be at least 1")]
    EmptySequence,

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "radix-hamming",
    version,
    about = "Hamming distances between consecutive integers in base n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert a numeral from one base to another
    Convert {
        #[arg(long, value_parser = parse_base)]
        from: Base,
        #[arg(long, value_parser = parse_base)]
        to: Base,
        value: String,
    },
    /// Hamming distance between two numerals, left-padded with zeros
    Dist {
        #[arg(long, value_parser = parse_base)]
        base: Base,
        lhs: String,
        rhs: String,
        #[arg(long)]
        json: bool,
    },
    /// Sum of distances between consecutive integers in 0..=m (m in decimal)
    Sum {
        #[arg(long, value_parser = parse_base)]
        base: Base,
        m: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Fast)]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u64,
        #[arg(long)]
        json: bool,
    },
    /// Distances H(i-1, i) for i = 1..=m
    Seq {
        #[arg(long, value_parser = parse_base)]
        base: Base,
        m: u64,
        #[arg(long, value_enum, default_value_t = SeqFormat::Plain)]
        format: SeqFormat,
    },
    /// Time the closed-form sum, optionally against the naive sum
    Bench {
        #[arg(long, value_parser = parse_base)]
        base: Base,
        m: u64,
        #[arg(long)]
        include_naive: bool,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Fast,
    Naive,
}

impl From<ModeArg> for SumMode {
    fn from(m: ModeArg) -> SumMode {
        match m {
            ModeArg::Fast => SumMode::Fast,
            ModeArg::Naive => SumMode::Naive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqFormat {
    /// One distance per line
    Plain,
    /// "index value" pairs, 1-indexed
    Bfile,
}

fn parse_base(s: &str) -> Result<Base, String> {
    let n: u64 = s.parse().map_err(|e| format!("{e}"))?;
    Base::try_from(n).map_err(|e| e.to_string())
}

impl Serialize for Base {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u32(self.get())
    }
}

/// One `dist` query with the padded numerals that were compared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub base: Base,
    pub lhs: String,
    pub rhs: String,
    pub padded_lhs: String,
    pub padded_rhs: String,
    pub distance: Distance,
}

#[derive(Debug, Serialize)]
struct SumReport {
    base: Base,
    m: u64,
    total: u64,
    mode: SumMode,
    terms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchReport {
    pub base: Base,
    pub m: u64,
    pub fast_total: u64,
    pub naive_total: Option<u64>,
    pub fast_terms: u64,
    pub naive_terms: Option<u64>,
    #[serde(rename = "fast_time_ns", serialize_with = "nanos")]
    pub fast_time: Duration,
    #[serde(rename = "naive_time_ns", serialize_with = "opt_nanos")]
    pub naive_time: Option<Duration>,
}

fn nanos<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(u64::try_from(d.as_nanos()).unwrap_or(u64::MAX))
}

fn opt_nanos<S: Serializer>(d: &Option<Duration>, s: S) -> Result<S::Ok, S::Error> {
    match d {
        Some(d) => nanos(d, s),
        None => s.serialize_none(),
    }
}

pub fn cmd_convert(value: &str, from: Base, to: Base) -> Result<String, CliError> {
    let m = parse(value, from)?.value()?;
    Ok(numeral::format(&to_numeral(m, to))?)
}

pub fn cmd_dist(lhs: &str, rhs: &str, base: Base) -> Result<DistanceReport, CliError> {
    let a = parse(lhs, base)?;
    let b = parse(rhs, base)?;
    let (pa, pb) = pad_to_common_length(&a, &b)?;
    Ok(DistanceReport {
        base,
        lhs: numeral::format(&a)?,
        rhs: numeral::format(&b)?,
        padded_lhs: numeral::format(&pa)?,
        padded_rhs: numeral::format(&pb)?,
        distance: hamming_numerals(&a, &b)?,
    })
}

pub fn cmd_sum(m: u64, base: Base, mode: SumMode, guard: u64) -> Result<SumResult, CliError> {
    match mode {
        SumMode::Fast => Ok(sum_fast(m, base)?),
        SumMode::Naive if m > guard => Err(CliError::GuardExceeded { m, guard }),
        SumMode::Naive => Ok(sum_naive(m, base)),
    }
}

/// Writes the distance sequence for `1..=m`; bfile lines are `"i value\n"`.
pub fn cmd_seq<W: Write>(
    m: u64,
    base: Base,
    format: SeqFormat,
    out: &mut W,
) -> Result<(), CliError> {
    if m == 0 {
        return Err(CliError::EmptySequence);
    }
    for (i, d) in (1u64..).zip(distance_sequence(m, base)) {
        match format {
            SeqFormat::Plain => writeln!(out, "{d}")?,
            SeqFormat::Bfile => writeln!(out, "{i} {d}")?,
        }
    }
    Ok(())
}

/// Runs the fast leg and, if requested and `m <= guard`, the naive leg.
///
/// The second value is a notice when the naive leg was skipped.
pub fn cmd_bench(
    m: u64,
    base: Base,
    include_naive: bool,
    guard: u64,
) -> Result<(BenchReport, Option<String>), CliError> {
    let start = Instant::now();
    let fast = sum_fast(black_box(m), black_box(base))?;
    let fast_time = start.elapsed();

    let mut report = BenchReport {
        base,
        m,
        fast_total: fast.total,
        naive_total: None,
        fast_terms: fast.terms_evaluated,
        naive_terms: None,
        fast_time,
        naive_time: None,
    };
    if !include_naive {
        return Ok((report, None));
    }
    if m > guard {
        let notice = format!("naive leg skipped: m = {m} exceeds the guard of {guard}");
        return Ok((report, Some(notice)));
    }

    let start = Instant::now();
    let naive = sum_naive(black_box(m), black_box(base));
    report.naive_time = Some(start.elapsed());
    report.naive_total = Some(naive.total);
    report.naive_terms = Some(naive.terms_evaluated);
    debug_assert_eq!(naive.total, fast.total);
    Ok((report, None))
}

fn write_json<W: Write, T: Serialize>(out: &mut W, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Executes `cli`, writing results to `out` and notices to `err`.
pub fn run<W: Write, E: Write>(cli: Cli, out: &mut W, err: &mut E) -> Result<(), CliError> {
    match cli.command {
        Command::Convert { from, to, value } => {
            writeln!(out, "{}", cmd_convert(&value, from, to)?)?;
        }
        Command::Dist {
            base,
            lhs,
            rhs,
            json,
        } => {
            let report = cmd_dist(&lhs, &rhs, base)?;
            if json {
                write_json(out, &report)?;
            } else {
                writeln!(out, "{}", report.distance)?;
            }
        }
        Command::Sum {
            base,
            m,
            mode,
            guard,
            json,
        } => {
            let r = cmd_sum(m, base, mode.into(), guard)?;
            if json {
                let report = SumReport {
                    base,
                    m,
                    total: r.total,
                    mode: r.mode,
                    terms: r.terms_evaluated,
                };
                write_json(out, &report)?;
            } else {
                writeln!(out, "{}", r.total)?;
            }
        }
        Command::Seq { base, m, format } => cmd_seq(m, base, format, out)?,
        Command::Bench {
            base,
            m,
            include_naive,
            guard,
        } => {
            let (report, notice) = cmd_bench(m, base, include_naive, guard)?;
            if let Some(notice) = notice {
                writeln!(err, "{notice}")?;
            }
            write_json(out, &report)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(n: u32) -> Base {
        Base::new(n).unwrap()
    }

    fn run_args(args: &[&str]) -> (Result<(), CliError>, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("radix-hamming").chain(args.iter().copied()))
            .unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let res = run(cli, &mut out, &mut err);
        (
            res,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn convert_examples() {
        assert_eq!(cmd_convert("255", base(10), base(16)).unwrap(), "FF");
        assert_eq!(cmd_convert("0", base(2), base(36)).unwrap(), "0");
        assert_eq!(cmd_convert("1000", base(2), base(10)).unwrap(), "8");
        assert!(matches!(
            cmd_convert("2", base(2), base(10)),
            Err(CliError::Numeral(_))
        ));
    }

    #[test]
    fn dist_examples() {
        let r = cmd_dist("1000", "111", base(2)).unwrap();
        assert_eq!(r.distance.get(), 4);
        assert_eq!(
            (r.padded_lhs.as_str(), r.padded_rhs.as_str()),
            ("1000", "0111")
        );
        assert_eq!(cmd_dist("5", "5", base(10)).unwrap().distance.get(), 0);
        assert_eq!(cmd_dist("20", "15", base(6)).unwrap().distance.get(), 2);
    }

    #[test]
    fn dist_report_is_canonical() {
        let r = cmd_dist("0007", "ff", base(16)).unwrap();
        assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("7", "FF"));
        assert_eq!((r.padded_lhs.as_str(), r.padded_rhs.as_str()), ("07", "FF"));
    }

    #[test]
    fn sum_examples() {
        assert_eq!(
            cmd_sum(4, base(2), SumMode::Fast, DEFAULT_GUARD)
                .unwrap()
                .total,
            7
        );
        for mode in [SumMode::Fast, SumMode::Naive] {
            assert_eq!(cmd_sum(0, base(7), mode, DEFAULT_GUARD).unwrap().total, 0);
        }
        assert_eq!(
            cmd_sum(100, base(10), SumMode::Naive, DEFAULT_GUARD)
                .unwrap()
                .total,
            111
        );
    }

    #[test]
    fn sum_guard() {
        assert!(matches!(
            cmd_sum(11, base(2), SumMode::Naive, 10),
            Err(CliError::GuardExceeded { m: 11, guard: 10 })
        ));
        assert!(cmd_sum(10, base(2), SumMode::Naive, 10).is_ok());
        assert!(cmd_sum(11, base(2), SumMode::Fast, 10).is_ok());
    }

    #[test]
    fn seq_examples() {
        let mut out = Vec::new();
        cmd_seq(4, base(2), SeqFormat::Plain, &mut out).unwrap();
        assert_eq!(out, b"1\n2\n1\n3\n");
        out.clear();
        cmd_seq(1, base(9), SeqFormat::Plain, &mut out).unwrap();
        assert_eq!(out, b"1\n");
        out.clear();
        cmd_seq(6, base(3), SeqFormat::Bfile, &mut out).unwrap();
        assert_eq!(out, b"1 1\n2 1\n3 2\n4 1\n5 1\n6 2\n");
        assert!(matches!(
            cmd_seq(0, base(3), SeqFormat::Plain, &mut out),
            Err(CliError::EmptySequence)
        ));
    }

    #[test]
    fn bench_examples() {
        let (r, notice) = cmd_bench(1_000_000, base(2), true, DEFAULT_GUARD).unwrap();
        assert!(notice.is_none());
        assert_eq!(Some(r.fast_total), r.naive_total);
        assert_eq!(r.fast_terms, 20);
        assert_eq!(r.naive_terms, Some(1_000_000));

        let (r, _) = cmd_bench(0, base(2), false, DEFAULT_GUARD).unwrap();
        assert_eq!((r.fast_total, r.fast_terms), (0, 0));

        let (r, notice) = cmd_bench(1_000_000_000_000, base(10), false, DEFAULT_GUARD).unwrap();
        assert_eq!(r.fast_terms, 13);
        assert!(notice.is_none());
    }

    #[test]
    fn bench_skips_naive_over_guard() {
        let (r, notice) = cmd_bench(100, base(2), true, 99).unwrap();
        assert!(notice.unwrap().contains("skipped"));
        assert_eq!(r.naive_total, None);
        assert_eq!(r.fast_total, 197);
    }

    #[test]
    fn run_json_shapes() {
        let (res, out, _) = run_args(&["sum", "--base", "2", "--json", "4"]);
        res.unwrap();
        assert_eq!(
            out,
            "{\"base\":2,\"m\":4,\"total\":7,\"mode\":\"fast\",\"terms\":3}\n"
        );

        let (res, out, _) = run_args(&["dist", "--base", "2", "--json", "1000", "111"]);
        res.unwrap();
        assert_eq!(
            out,
            "{\"base\":2,\"lhs\":\"1000\",\"rhs\":\"111\",\"padded_lhs\":\"1000\",\"padded_rhs\":\"0111\",\"distance\":4}\n"
        );
    }

    #[test]
    fn run_bench_notice_goes_to_err() {
        let (res, out, err) = run_args(&[
            "bench",
            "--base",
            "2",
            "--include-naive",
            "--guard",
            "5",
            "6",
        ]);
        res.unwrap();
        assert!(err.contains("skipped"));
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["fast_total"], 10);
        assert!(v["naive_total"].is_null());
    }

    #[test]
    fn base_argument_validation() {
        assert!(Cli::try_parse_from(["radix-hamming", "sum", "--base", "1", "4"]).is_err());
        assert!(Cli::try_parse_from(["radix-hamming", "sum", "--base", "x", "4"]).is_err());
        assert!(Cli::try_parse_from(["radix-hamming", "sum", "--base", "1000", "4"]).is_ok());
    }
}
