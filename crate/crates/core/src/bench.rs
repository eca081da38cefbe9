//! Timing and operation-count comparison of the two exactly-`k` steppers.
//!
//! For each `k` both steppers run a complete enumeration of the `k`-block
//! partitions of an `n`-set. Wall-clock timings use the uninstrumented
//! steppers and keep the median over the repetitions; operation counts and an
//! output checksum come from one extra instrumented run of each.

use std::fmt::Write as _;
use std::hint::black_box;
use std::io;
use std::ops::RangeInclusive;
use std::path::Path;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::steppers::{self, OpCounters, Probe};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("no benchmark records to write")]
    NoRecords,
    #[error("repetitions must be at least 1")]
    NoRepetitions,
    #[error("X and Y disagree at k = {k}: {detail}")]
    Divergence { k: usize, detail: String },
    #[error("failed to write benchmark output: {0}")]
    Io(#[from] io::Error),
    #[error("malformed CSV line {line}: {detail}")]
    Parse { line: usize, detail: String },
}

/// One row of the comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub k: usize,
    /// Seconds per transition, `total / run_length`.
    pub per_next_x: f64,
    pub per_next_y: f64,
    /// Seconds per full enumeration (median).
    pub total_x: f64,
    pub total_y: f64,
    /// Digit writes per transition; `None` when operation counting was off.
    pub writes_per_next_x: Option<f64>,
    pub writes_per_next_y: Option<f64>,
    pub run_length: u64,
}

/// Knobs for [`run_comparison`].
#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    /// Timed samples per stepper and `k`; the median is reported.
    pub repetitions: usize,
    /// Enumerations shorter than this are repeated back to back and averaged
    /// so that one sample is never dominated by timer resolution.
    pub min_sample: Duration,
    /// Also run each stepper once under [`OpCounters`] and cross-check the
    /// output checksums.
    pub count_operations: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            repetitions: 3,
            min_sample: Duration::from_millis(100),
            count_operations: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactStepper {
    X,
    Y,
}

/// Result of one complete enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunSummary {
    pub emitted: u64,
    pub checksum: u64,
    pub counters: OpCounters,
}

fn initial(n: usize, k: usize) -> (Vec<usize>, Vec<usize>) {
    let zeros = n - k;
    let a: Vec<usize> = (0..n).map(|i| i.saturating_sub(zeros)).collect();
    let b = crate::rgs::PrefixMaxima::of(&a).into_vec();
    (a, b)
}

#[inline(always)]
fn step<P: Probe>(which: ExactStepper, a: &mut [usize], b: &mut [usize], k: usize, p: &mut P) -> bool {
    match which {
        ExactStepper::X => steppers::next_x(a, b, k, p),
        ExactStepper::Y => steppers::next_y(a, b, k, p),
    }
}

/// Enumerates every `k`-block partition and returns how many there were,
/// without any instrumentation.
pub fn timed_run(which: ExactStepper, n: usize, k: usize) -> (Duration, u64) {
    let (mut a, mut b) = initial(n, k);
    let start = Instant::now();
    let emitted = match which {
        ExactStepper::X => drain_x(&mut a, &mut b, k),
        ExactStepper::Y => drain_y(&mut a, &mut b, k),
    };
    let elapsed = start.elapsed();
    black_box(&a);
    (elapsed, emitted)
}

// Each loop gets its own function so neither is register-allocated around
// the other.
#[inline(never)]
fn drain_x(a: &mut [usize], b: &mut [usize], k: usize) -> u64 {
    let mut emitted = 1;
    while steppers::next_x(a, b, k, &mut ()) {
        emitted += 1;
    }
    emitted
}

#[inline(never)]
fn drain_y(a: &mut [usize], b: &mut [usize], k: usize) -> u64 {
    let mut emitted = 1;
    while steppers::next_y(a, b, k, &mut ()) {
        emitted += 1;
    }
    emitted
}

const SAMPLE_MASK: u64 = (1 << 12) - 1;

fn fold(hash: u64, value: u64) -> u64 {
    (hash ^ value).wrapping_mul(0x0000_0100_0000_01b3)
}

/// Instrumented enumeration. The checksum folds in the full digit string of
/// every 4096th emission and of the last one.
pub fn counted_run(which: ExactStepper, n: usize, k: usize) -> RunSummary {
    let (mut a, mut b) = initial(n, k);
    let mut counters = OpCounters::default();
    let mut checksum = 0xcbf2_9ce4_8422_2325u64;
    let mut emitted = 0u64;
    loop {
        if emitted & SAMPLE_MASK == 0 {
            checksum = a.iter().fold(fold(checksum, emitted), |h, &d| fold(h, d as u64));
        }
        emitted += 1;
        let advanced = step(which, &mut a, &mut b, k, &mut counters);
        counters.end_transition();
        if !advanced {
            break;
        }
    }
    checksum = a.iter().fold(fold(checksum, emitted), |h, &d| fold(h, d as u64));
    RunSummary {
        emitted,
        checksum,
        counters,
    }
}

/// One timing sample: mean duration of back-to-back enumerations filling at
/// least `window`.
pub fn sample(which: ExactStepper, n: usize, k: usize, window: Duration) -> (Duration, u64) {
    let mut total = Duration::ZERO;
    let mut runs = 0u32;
    loop {
        let (elapsed, emitted) = timed_run(which, n, k);
        total += elapsed;
        runs += 1;
        if total >= window {
            return (total / runs, emitted);
        }
    }
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

/// Times X and Y for every `k` in `ks` (values outside `2..=n-1` are skipped
/// with a warning) and returns one record per `k`, sorted by `k`.
pub fn run_comparison(
    n: usize,
    ks: RangeInclusive<usize>,
    config: &BenchConfig,
) -> Result<Vec<BenchRecord>, BenchError> {
    if config.repetitions == 0 {
        return Err(BenchError::NoRepetitions);
    }
    let mut records = Vec::new();
    for k in ks {
        if k < 2 || k + 1 > n {
            log::warn!("skipping k = {k}: outside 2..={}", n.saturating_sub(1));
            continue;
        }
        records.push(compare_at(n, k, config)?);
    }
    Ok(records)
}

fn compare_at(n: usize, k: usize, config: &BenchConfig) -> Result<BenchRecord, BenchError> {
    let mut xs = Vec::with_capacity(config.repetitions);
    let mut ys = Vec::with_capacity(config.repetitions);
    let mut run_length = 0;
    for _ in 0..config.repetitions {
        let (tx, cx) = sample(ExactStepper::X, n, k, config.min_sample);
        let (ty, cy) = sample(ExactStepper::Y, n, k, config.min_sample);
        if cx != cy {
            return Err(BenchError::Divergence {
                k,
                detail: format!("X emitted {cx}, Y emitted {cy}"),
            });
        }
        run_length = cx;
        xs.push(tx);
        ys.push(ty);
    }
    let (mut writes_x, mut writes_y) = (None, None);
    if config.count_operations {
        let x = counted_run(ExactStepper::X, n, k);
        let y = counted_run(ExactStepper::Y, n, k);
        if x.emitted != y.emitted || x.checksum != y.checksum || x.emitted != run_length {
            return Err(BenchError::Divergence {
                k,
                detail: format!(
                    "checksums {:#x}/{:#x} over {}/{} strings",
                    x.checksum, y.checksum, x.emitted, y.emitted
                ),
            });
        }
        writes_x = Some(x.counters.writes_per_call());
        writes_y = Some(y.counters.writes_per_call());
    }
    let total_x = median(xs).as_secs_f64();
    let total_y = median(ys).as_secs_f64();
    log::info!("n={n} k={k}: {run_length} partitions, X {total_x:.6}s, Y {total_y:.6}s");
    Ok(BenchRecord {
        k,
        per_next_x: total_x / run_length as f64,
        per_next_y: total_y / run_length as f64,
        total_x,
        total_y,
        writes_per_next_x: writes_x,
        writes_per_next_y: writes_y,
        run_length,
    })
}

pub const CSV_HEADER: &str = "k,Xpn,Ypn,X,Y,writes_x,writes_y,count";

/// Renders records as CSV: header line, one row per record, trailing newline.
pub fn to_csv(records: &[BenchRecord]) -> Result<String, BenchError> {
    if records.is_empty() {
        return Err(BenchError::NoRecords);
    }
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        // f64 Display never uses exponent notation or digit grouping
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.k,
            r.per_next_x,
            r.per_next_y,
            r.total_x,
            r.total_y,
            optional(r.writes_per_next_x),
            optional(r.writes_per_next_y),
            r.run_length
        )
        .expect("writing to a String cannot fail");
    }
    Ok(out)
}

fn optional(v: Option<f64>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// Writes the CSV to `destination`, or to standard output when it is `None`.
pub fn emit_csv(records: &[BenchRecord], destination: Option<&Path>) -> Result<(), BenchError> {
    let csv = to_csv(records)?;
    match destination {
        Some(path) => std::fs::write(path, csv)?,
        None => {
            use io::Write;
            let mut stdout = io::stdout().lock();
            stdout.write_all(csv.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

/// Parses CSV produced by [`to_csv`].
pub fn parse_csv(text: &str) -> Result<Vec<BenchRecord>, BenchError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == CSV_HEADER => {}
        _ => {
            return Err(BenchError::Parse {
                line: 1,
                detail: "missing header".into(),
            })
        }
    }
    lines
        .map(|(i, line)| {
            let bad = |detail: &str| BenchError::Parse {
                line: i + 1,
                detail: detail.to_string(),
            };
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 8 {
                return Err(bad("expected 8 fields"));
            }
            let float = |j: usize| fields[j].parse::<f64>().map_err(|_| bad(fields[j]));
            let maybe = |j: usize| match fields[j] {
                "" => Ok(None),
                f => f.parse::<f64>().map(Some).map_err(|_| bad(f)),
            };
            Ok(BenchRecord {
                k: fields[0].parse().map_err(|_| bad(fields[0]))?,
                per_next_x: float(1)?,
                per_next_y: float(2)?,
                total_x: float(3)?,
                total_y: float(4)?,
                writes_per_next_x: maybe(5)?,
                writes_per_next_y: maybe(6)?,
                run_length: fields[7].parse().map_err(|_| bad(fields[7]))?,
            })
        })
        .collect()
}
