//! Command-line front end. [`run`] takes the argument list and two writers so
//! the whole surface can be driven in-process by tests; the `pi-formula`
//! binary is a thin wrapper around it.
//!
//! Exit codes: 0 all checks pass, 1 verification failure, 2 usage error,
//! 3 search exhausted.

pub mod output;
pub mod table1;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::formula::{build_thresholds, MAX_K};
use crate::prime_engine::{pi_point, pi_stream, sieve_segment, BasePrimes, PiCheckpoint};
use crate::scanner::{first_attainment, resume_seed, CheckpointLog, ScanMode, Scanner};
use output::{Format, PointRecord, RecordWriter};
use table1::{compare_with_fixture, TABLE1, TABLE1_HI, TABLE1_LO};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_FOUND: i32 = 3;

/// Scans ending above this need `--allow-large`.
pub const DEFAULT_SCAN_CAP: u64 = 1_000_000_000;
/// `pi` results up to here are confirmed by a full sieve.
pub const SIEVE_CROSS_CHECK_MAX: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "pi-formula",
    version,
    about = "Verify pi(n) = n / floor(ln n - 1/2) where pi(n) divides n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Jobs {
    /// Worker threads and pieces per wave (default: available cores)
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print pi(x)
    Pi { x: u64 },
    /// List every n in [from, to) with pi(n) | n
    Scan {
        from: u64,
        to: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Checkpoint file to append to and resume from
        #[arg(long)]
        resume: Option<PathBuf>,
        #[command(flatten)]
        jobs: Jobs,
        /// Permit ranges ending above 10^9
        #[arg(long)]
        allow_large: bool,
    },
    /// Reproduce the published table for 67 <= n < 4000
    VerifyTable {
        /// Alternate fixture, one `n,pi` row per line
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Check n/(ln n - 1/2) < pi(n) < n/(ln n - 3/2) at every n in [from, to)
    #[command(visible_alias = "bounds")]
    VerifyBounds {
        from: u64,
        to: u64,
        #[command(flatten)]
        jobs: Jobs,
        #[arg(long)]
        allow_large: bool,
    },
    /// Least n with n = k * pi(n)
    FirstRatio {
        k: u64,
        #[arg(long, default_value_t = 10_000_000)]
        limit: u64,
    },
    /// Print the integer breakpoints of floor(ln n - 1/2) for k = 0..=k_max
    Thresholds { k_max: u32 },
    /// Time both counting backends
    Bench {
        #[arg(long, default_value_t = 10_000_000)]
        limit: u64,
        #[command(flatten)]
        jobs: Jobs,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Outcome of a subcommand before it is mapped to an exit code.
enum Outcome {
    Pass,
    Fail,
    NotFound,
}

enum CliError {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInterval { .. }
            | Error::ZeroArgument
            | Error::EmptyThresholdTable
            | Error::ThresholdOverflow { .. }
            | Error::InvalidRatio { .. }
            | Error::RangeTooLarge { .. } => CliError::Usage(e.to_string()),
            e => CliError::Runtime(e),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Runtime(e.into())
    }
}

type CmdResult = std::result::Result<Outcome, CliError>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { out, err };
    let result = dispatch(cli.command, &mut io);
    let _ = io.out.flush();
    match result {
        Ok(Outcome::Pass) => EXIT_OK,
        Ok(Outcome::Fail) => EXIT_FAILED,
        Ok(Outcome::NotFound) => EXIT_NOT_FOUND,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Runtime(e)) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_FAILED
        }
    }
}

fn scanner(jobs: &Jobs) -> std::result::Result<Scanner, CliError> {
    match jobs.jobs {
        None => Ok(Scanner::new()),
        Some(0) => Err(CliError::Usage("--jobs must be at least 1".into())),
        Some(n) => Scanner::new()
            .with_shards(n)
            .with_threads(n)
            .map_err(|e| CliError::Usage(e.to_string())),
    }
}

fn check_cap(to: u64, allow_large: bool) -> std::result::Result<(), CliError> {
    if to > DEFAULT_SCAN_CAP && !allow_large {
        return Err(CliError::Usage(format!(
            "range end {to} exceeds {DEFAULT_SCAN_CAP}; pass --allow-large to proceed"
        )));
    }
    Ok(())
}

fn check_range(from: u64, to: u64) -> std::result::Result<(), CliError> {
    if from >= to {
        return Err(CliError::Usage(format!("empty range: {from} >= {to}")));
    }
    Ok(())
}

fn dispatch(command: Command, io: &mut Io<'_>) -> CmdResult {
    match command {
        Command::Pi { x } => cmd_pi(x, io),
        Command::Scan {
            from,
            to,
            format,
            resume,
            jobs,
            allow_large,
        } => {
            check_range(from, to)?;
            check_cap(to, allow_large)?;
            cmd_scan(from, to, format, resume, &jobs, io)
        }
        Command::VerifyTable { fixture, jobs } => cmd_verify_table(fixture, &jobs, io),
        Command::VerifyBounds {
            from,
            to,
            jobs,
            allow_large,
        } => {
            check_range(from, to)?;
            check_cap(to, allow_large)?;
            cmd_bounds(from, to, &jobs, io)
        }
        Command::FirstRatio { k, limit } => cmd_first_ratio(k, limit, io),
        Command::Thresholds { k_max } => cmd_thresholds(k_max, io),
        Command::Bench { limit, jobs } => cmd_bench(limit, &jobs, io),
    }
}

fn cmd_pi(x: u64, io: &mut Io<'_>) -> CmdResult {
    let count = pi_point(x)?;
    if x <= SIEVE_CROSS_CHECK_MAX {
        let sieved = pi_stream(PiCheckpoint::ORIGIN, x)?
            .last()
            .map_or(0, |c| c.count);
        if sieved != count {
            writeln!(
                io.err,
                "backend disagreement: legendre {count}, sieve {sieved}"
            )?;
            return Ok(Outcome::Fail);
        }
    }
    writeln!(io.out, "{count}")?;
    Ok(Outcome::Pass)
}

fn cmd_scan(
    from: u64,
    to: u64,
    format: Format,
    resume: Option<PathBuf>,
    jobs: &Jobs,
    io: &mut Io<'_>,
) -> CmdResult {
    let mut log = resume.map(CheckpointLog::open).transpose()?;
    let seed = resume_seed(from, to, log.as_ref().and_then(CheckpointLog::last))?;
    let started = Instant::now();
    let mut writer = RecordWriter::begin(&mut *io.out, format)?;
    let (mut points, mut checked, mut failures) = (0u64, 0u64, 0u64);
    if seed.n + 1 < to {
        scanner(jobs)?.run(seed, to, ScanMode::GOLOMB, |piece| {
            for p in &piece.points {
                writer.write(&PointRecord::from(p))?;
                points += 1;
                checked += u64::from(p.in_domain());
                failures += u64::from(p.is_failure());
            }
            if let Some(log) = log.as_mut() {
                log.append(piece.end)?;
            }
            Ok(())
        })?;
    }
    writer.finish()?;
    writeln!(
        io.err,
        "scanned [{}, {to}): {points} points, {checked} checked, {failures} failures ({:.3?})",
        seed.n + 1,
        started.elapsed()
    )?;
    Ok(if failures == 0 {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

fn read_fixture(path: &PathBuf) -> std::result::Result<Vec<(u64, u64)>, CliError> {
    let text = fs::read_to_string(path)?;
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        let parsed = match fields.as_slice() {
            [n, pi] => n.parse().ok().zip(pi.parse().ok()),
            _ => None,
        };
        let row = parsed.ok_or_else(|| {
            CliError::Usage(format!("{}:{}: expected `n,pi`", path.display(), i + 1))
        })?;
        rows.push(row);
    }
    rows.sort_unstable();
    Ok(rows)
}

fn cmd_verify_table(fixture: Option<PathBuf>, jobs: &Jobs, io: &mut Io<'_>) -> CmdResult {
    let rows = match fixture {
        Some(path) => read_fixture(&path)?,
        None => TABLE1.to_vec(),
    };
    let report = scanner(jobs)?.verify_theorem3(TABLE1_LO, TABLE1_HI)?;
    let cmp = compare_with_fixture(&report.points, &rows);
    for diff in &cmp.diffs {
        writeln!(io.out, "{diff}")?;
    }
    writeln!(io.out, "{}/{} rows match", cmp.matched, cmp.rows)?;
    writeln!(
        io.err,
        "scan of [{TABLE1_LO}, {TABLE1_HI}) found {} points in {:.3?}",
        report.points.len(),
        report.elapsed
    )?;
    Ok(if cmp.passed() {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

fn cmd_bounds(from: u64, to: u64, jobs: &Jobs, io: &mut Io<'_>) -> CmdResult {
    let report = scanner(jobs)?.verify_bounds(from, to)?;
    for n in &report.bounds_violations {
        writeln!(io.out, "violation {n}")?;
    }
    writeln!(io.out, "{} violations", report.bounds_violations.len())?;
    writeln!(
        io.err,
        "checked {} integers in {:.3?}",
        report.bounds_checked, report.elapsed
    )?;
    Ok(if report.bounds_violations.is_empty() {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

fn cmd_first_ratio(k: u64, limit: u64, io: &mut Io<'_>) -> CmdResult {
    match first_attainment(k, limit)? {
        Some(n) => {
            writeln!(io.out, "{n}")?;
            Ok(Outcome::Pass)
        }
        None => {
            writeln!(io.err, "no n <= {limit} with n = {k} * pi(n)")?;
            Ok(Outcome::NotFound)
        }
    }
}

fn cmd_thresholds(k_max: u32, io: &mut Io<'_>) -> CmdResult {
    if k_max > MAX_K {
        return Err(Error::ThresholdOverflow { k: k_max }.into());
    }
    let table = build_thresholds(k_max)?;
    for &(k, t) in table.entries() {
        writeln!(io.out, "{k} {t}")?;
    }
    Ok(Outcome::Pass)
}

fn cmd_bench(limit: u64, jobs: &Jobs, io: &mut Io<'_>) -> CmdResult {
    if limit < 2 {
        return Err(CliError::Usage("--limit must be at least 2".into()));
    }
    let t = Instant::now();
    let legendre = pi_point(limit)?;
    let legendre_time = t.elapsed();

    let t = Instant::now();
    let base = BasePrimes::for_limit(limit + 1);
    let seg_len = crate::prime_engine::SieveConfig::default().segment_len();
    let mut sieved = 0;
    let mut lo = 0;
    while lo <= limit {
        let hi = (limit + 1).min(lo + seg_len);
        sieved += sieve_segment(lo, hi, &base)?.count();
        lo = hi;
    }
    let sieve_time = t.elapsed();

    let t = Instant::now();
    let report = scanner(jobs)?.verify_theorem3(1, limit + 1)?;
    let scan_time = t.elapsed();

    writeln!(io.out, "pi_point {limit} {legendre}")?;
    writeln!(io.out, "sieve {limit} {sieved}")?;
    writeln!(io.out, "golomb_points {limit} {}", report.points.len())?;
    writeln!(
        io.err,
        "legendre {legendre_time:.3?}, sieve {sieve_time:.3?}, scan {scan_time:.3?}"
    )?;
    Ok(if legendre == sieved && report.passed() {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}
