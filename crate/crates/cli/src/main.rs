//! `partenum`: enumerate, count and benchmark set partitions.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use partition_enum::bench::{self, BenchConfig};
use partition_enum::counting;
use partition_enum::rgs::{format_compact, format_digits};
use partition_enum::{
    BlockCountSpec, Direction, EnumeratorState, Regime, RestrictedGrowthString,
};

#[derive(Parser)]
#[command(name = "partenum", version, about = "Lexicographic set partition enumeration")]
struct Cli {
    /// Log more (repeat for debug output). RUST_LOG overrides this.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream partitions, one per line.
    Enumerate(EnumerateArgs),
    /// Print the exact number of partitions a spec admits.
    Count(SpecArgs),
    /// Time the two exactly-k steppers and write CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
struct SpecArgs {
    /// Number of elements.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: Option<u64>,
    /// At most this many blocks (exactly, with --exact).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..), conflicts_with_all = ["k_min", "k_max", "blocks"])]
    k: Option<u64>,
    #[arg(long, requires = "k")]
    exact: bool,
    /// Lower bound on the block count (default 1).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..), conflicts_with = "blocks")]
    k_min: Option<u64>,
    /// Upper bound on the block count (default n).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..), conflicts_with = "blocks")]
    k_max: Option<u64>,
    /// Admissible block counts, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1.., value_parser = clap::value_parser!(u64).range(1..))]
    blocks: Option<Vec<u64>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Rgs,
    Compact,
    Blocks,
    JsonLines,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Enumerate in reverse lexicographic order.
    #[arg(long)]
    reverse: bool,
    #[arg(long, value_enum, default_value = "rgs")]
    format: Format,
    /// Stop after this many partitions and print a resume token to stderr.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    limit: Option<u64>,
    /// Continue after the partition a previous limited run stopped at.
    #[arg(long)]
    resume: Option<String>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
    n: u64,
    /// Inclusive range of block counts, `lo:hi`.
    #[arg(long, value_parser = parse_range)]
    k_range: (usize, usize),
    /// CSV destination (default stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Timed repetitions per stepper; the median is reported.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    repetitions: u64,
    /// Repeat enumerations shorter than this many milliseconds within one sample.
    #[arg(long, default_value_t = 100)]
    min_sample_ms: u64,
    /// Skip the instrumented runs; the writes columns are left empty.
    #[arg(long)]
    no_counters: bool,
}

fn parse_range(text: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| format!("expected lo:hi, got {text:?}"))?;
    let num = |s: &str| s.trim().parse::<usize>().map_err(|e| format!("{s:?}: {e}"));
    Ok((num(lo)?, num(hi)?))
}

enum Failure {
    Usage(String),
    Internal(String),
}

type CliResult = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn internal(e: impl std::fmt::Display) -> Failure {
    Failure::Internal(e.to_string())
}

impl SpecArgs {
    fn given(&self) -> bool {
        self.k.is_some() || self.k_min.is_some() || self.k_max.is_some() || self.blocks.is_some()
    }

    fn regime(&self, n: usize) -> Regime {
        let us = |v: u64| v as usize;
        if let Some(k) = self.k {
            return if self.exact {
                Regime::Exactly(us(k))
            } else {
                Regime::AtMost(us(k))
            };
        }
        if let Some(blocks) = &self.blocks {
            return Regime::Set(blocks.iter().copied().map(us).collect());
        }
        if self.k_min.is_some() || self.k_max.is_some() {
            let lo = self.k_min.map_or(1, us);
            let hi = self.k_max.map_or(n.max(lo), us);
            return Regime::Range(lo, hi);
        }
        Regime::Unrestricted
    }

    fn spec(&self) -> Result<BlockCountSpec, Failure> {
        let n = self.n.ok_or_else(|| usage("--n is required"))? as usize;
        BlockCountSpec::new(self.regime(n), n).map_err(|e| usage(e.to_string()))
    }
}

fn count(args: &SpecArgs) -> CliResult {
    let spec = args.spec()?;
    let mut out = io::stdout().lock();
    writeln!(out, "{}", counting::count_for(&spec)).map_err(internal)
}

fn render(digits: &[usize], format: Format) -> String {
    let blocks = || RestrictedGrowthString::new(digits.to_vec()).expect("enumerator emits valid strings").to_blocks();
    match format {
        Format::Rgs => format_digits(digits),
        Format::Compact => format_compact(digits).expect("digits checked against kmax"),
        Format::Blocks => blocks().to_string(),
        Format::JsonLines => json!({ "rgs": digits, "blocks": blocks().blocks() }).to_string(),
    }
}

fn open_state(args: &EnumerateArgs) -> Result<(EnumeratorState, bool), Failure> {
    let direction = if args.reverse {
        Direction::Reverse
    } else {
        Direction::Forward
    };
    let Some(token) = &args.resume else {
        return Ok((EnumeratorState::first(args.spec.spec()?, direction), false));
    };
    let state = EnumeratorState::from_token(token).map_err(|e| usage(format!("bad resume token: {e}")))?;
    if let Some(n) = args.spec.n {
        if n as usize != state.n() {
            return Err(usage(format!("--n {n} does not match the token (n={})", state.n())));
        }
    }
    if args.spec.given() {
        let n = state.n();
        let given = BlockCountSpec::new(args.spec.regime(n), n).map_err(|e| usage(e.to_string()))?;
        if given.k_values() != state.spec().k_values() {
            return Err(usage("block count arguments do not match the token"));
        }
    }
    if direction != state.direction() {
        return Err(usage(format!("the token is for a {} run", state.direction())));
    }
    Ok((state, true))
}

fn enumerate(args: &EnumerateArgs) -> CliResult {
    let (state, resumed) = open_state(args)?;
    if let (Format::Compact, Some(kmax)) = (args.format, state.spec().kmax()) {
        if kmax > 10 {
            return Err(usage(format!(
                "compact format needs at most 10 blocks, this spec allows {kmax}; use --format rgs"
            )));
        }
    }
    let mut items = if resumed {
        state.into_iter_after_current()
    } else {
        state.into_iter_from_current()
    };
    let limit = args.limit.unwrap_or(u64::MAX);
    // Stdout is line buffered, so a killed process leaves whole lines behind.
    let mut out = io::stdout().lock();
    let mut emitted = 0u64;
    while emitted < limit {
        let Some(digits) = items.next() else {
            return Ok(());
        };
        if let Err(e) = writeln!(out, "{}", render(&digits, args.format)) {
            return if e.kind() == io::ErrorKind::BrokenPipe {
                Ok(())
            } else {
                Err(internal(e))
            };
        }
        emitted += 1;
    }
    out.flush().map_err(internal)?;
    eprintln!("{}", items.state().to_token());
    Ok(())
}

fn run_bench(args: &BenchArgs) -> CliResult {
    let n = args.n as usize;
    let (lo, hi) = args.k_range;
    let (first, last) = (lo.max(2), hi.min(n - 1));
    if first > last {
        return Err(usage(format!(
            "--k-range {lo}:{hi} has no block count in 2..={} for n={n}",
            n - 1
        )));
    }
    let config = BenchConfig {
        repetitions: args.repetitions as usize,
        min_sample: Duration::from_millis(args.min_sample_ms),
        count_operations: !args.no_counters,
    };
    let records = bench::run_comparison(n, lo..=hi, &config).map_err(internal)?;
    bench::emit_csv(&records, args.out.as_deref()).map_err(internal)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    let result = match &cli.command {
        Command::Enumerate(args) => enumerate(args),
        Command::Count(args) => count(args),
        Command::Bench(args) => run_bench(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
