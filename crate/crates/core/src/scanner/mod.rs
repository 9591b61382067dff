//! Range scans: Golomb points (`π(n) | n`), the closed-form check at each,
//! the explicit bounds at every integer, and minimal ratio witnesses.
//!
//! A scan proceeds in waves. Each wave is cut into `shards` pieces that are
//! sieved in parallel; every piece but the first is seeded by an independent
//! Legendre count, and the aggregator checks that each piece's final count
//! equals the next piece's seed before merging in ascending order.

mod checkpoint;
mod report;
mod walk;

use std::collections::VecDeque;
use std::ops::ControlFlow;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

pub use checkpoint::{format_checkpoint, parse_checkpoint, read_checkpoints, CheckpointLog};
pub use report::{Failure, VerificationReport};

use crate::error::{Error, Result};
use crate::formula::{GolombPoint, ThresholdTable};
use crate::prime_engine::{
    count_up_to, pi_point_with, BasePrimes, LegendreContext, PiCheckpoint, SieveConfig,
};

/// Scans may not reach past this point (base primes would exceed 2^26).
pub const MAX_SCAN_HI: u64 = 1 << 52;

/// What to look for while walking a range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanMode {
    pub golomb: bool,
    pub bounds: bool,
}

impl ScanMode {
    pub const GOLOMB: ScanMode = ScanMode {
        golomb: true,
        bounds: false,
    };
    pub const BOUNDS: ScanMode = ScanMode {
        golomb: false,
        bounds: true,
    };
    pub const ALL: ScanMode = ScanMode {
        golomb: true,
        bounds: true,
    };
}

/// Result of one completed piece, handed to the aggregator in order.
#[derive(Debug, Clone, PartialEq)]
pub struct PieceOutcome {
    pub lo: u64,
    pub hi: u64,
    /// `π(lo − 1)` as this piece was seeded.
    pub seed: u64,
    /// `π(hi − 1)`
    pub end: PiCheckpoint,
    pub points: Vec<GolombPoint>,
    pub violations: Vec<u64>,
    pub bounds_checked: u64,
}

#[derive(Debug, Clone)]
pub struct Scanner {
    shards: usize,
    sieve: SieveConfig,
    table: &'static ThresholdTable,
    /// Dedicated workers; the global rayon pool when absent.
    pool: Option<Arc<rayon::ThreadPool>>,
}

impl Default for Scanner {
    fn default() -> Self {
        let shards = std::thread::available_parallelism().map_or(1, |n| n.get());
        Scanner {
            shards,
            sieve: SieveConfig::default(),
            table: ThresholdTable::standard(),
            pool: None,
        }
    }
}

fn check_range(lo: u64, hi: u64) -> Result<()> {
    if lo >= hi {
        return Err(Error::InvalidInterval { lo, hi });
    }
    if hi > MAX_SCAN_HI {
        return Err(Error::RangeTooLarge {
            hi,
            max: MAX_SCAN_HI,
        });
    }
    Ok(())
}

/// `π(lo − 1)` for a range starting at `lo`; `lo = 0` is seeded like `lo = 1`.
fn seed_for(lo: u64) -> Result<PiCheckpoint> {
    let n = lo.saturating_sub(1);
    Ok(PiCheckpoint::new(n, count_up_to(n)?))
}

impl Scanner {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_shards(mut self, shards: usize) -> Self {
        self.shards = shards.max(1);
        self
    }

    pub fn with_sieve(mut self, sieve: SieveConfig) -> Self {
        self.sieve = sieve;
        self
    }

    /// Runs pieces on a private pool of `threads` workers.
    pub fn with_threads(
        mut self,
        threads: usize,
    ) -> std::result::Result<Self, rayon::ThreadPoolBuildError> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()?;
        self.pool = Some(Arc::new(pool));
        Ok(self)
    }

    pub fn shards(&self) -> usize {
        self.shards
    }

    fn run_piece(
        &self,
        lo: u64,
        hi: u64,
        seed: u64,
        mode: ScanMode,
        base: &BasePrimes,
    ) -> Result<PieceOutcome> {
        let seg = self.sieve.sieve_segment(lo, hi, base)?;
        let mut points = Vec::new();
        let mut violations = Vec::new();
        let mut bounds_checked = 0;
        let mut err = None;
        let (end, _) = walk::for_each_interval(&seg, seed, |a, b, c| {
            let step = (|| {
                if mode.golomb {
                    walk::golomb_in(a, b, c, self.table, &mut points)?;
                }
                if mode.bounds {
                    bounds_checked += walk::bounds_in(a, b, c, &mut violations)?;
                }
                Ok(())
            })();
            match step {
                Ok(()) => ControlFlow::Continue(()),
                Err(e) => {
                    err = Some(e);
                    ControlFlow::Break(())
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        Ok(PieceOutcome {
            lo,
            hi,
            seed,
            end: PiCheckpoint::new(hi - 1, end),
            points,
            violations,
            bounds_checked,
        })
    }

    /// Walks `(seed.n, hi)` and feeds each completed piece, in ascending
    /// order, to `on_piece`. Returns `π(hi − 1)`.
    pub fn run<F>(
        &self,
        seed: PiCheckpoint,
        hi: u64,
        mode: ScanMode,
        mut on_piece: F,
    ) -> Result<PiCheckpoint>
    where
        F: FnMut(PieceOutcome) -> Result<()>,
    {
        let lo = seed.n + 1;
        check_range(lo, hi)?;
        let base = BasePrimes::for_limit(hi);
        let legendre = (self.shards > 1).then(|| LegendreContext::new(hi));
        let seg_len = self.sieve.segment_len();
        let mut running = seed.count;
        let mut cur = lo;
        while cur < hi {
            let wave_len = (hi - cur).min(seg_len.saturating_mul(self.shards as u64));
            let piece_len = wave_len.div_ceil(self.shards as u64);
            let wave_end = cur + wave_len;
            let pieces: Vec<(u64, u64)> = (0..)
                .map(|i| cur + i * piece_len)
                .take_while(|&a| a < wave_end)
                .map(|a| (a, (a + piece_len).min(wave_end)))
                .collect();
            let first_seed = running;
            let work = || -> Vec<Result<PieceOutcome>> {
                pieces
                    .par_iter()
                    .enumerate()
                    .map(|(i, &(a, b))| {
                        let seed = match (i, &legendre) {
                            (0, _) | (_, None) => first_seed,
                            (_, Some(ctx)) => pi_point_with(a - 1, ctx)?,
                        };
                        self.run_piece(a, b, seed, mode, &base)
                    })
                    .collect()
            };
            let outcomes = match &self.pool {
                Some(pool) => pool.install(work),
                None => work(),
            };
            for outcome in outcomes {
                let outcome = outcome?;
                if outcome.seed != running {
                    return Err(Error::ShardMismatch {
                        n: outcome.lo - 1,
                        finished: running,
                        seeded: outcome.seed,
                    });
                }
                running = outcome.end.count;
                on_piece(outcome)?;
            }
            cur = wave_end;
        }
        Ok(PiCheckpoint::new(hi - 1, running))
    }

    fn report_from(
        &self,
        range_lo: u64,
        seed: PiCheckpoint,
        hi: u64,
        mode: ScanMode,
        mut log: Option<&mut CheckpointLog>,
    ) -> Result<VerificationReport> {
        let started = Instant::now();
        let mut report = VerificationReport::empty(range_lo, hi, seed);
        report.checkpoint = self.run(seed, hi, mode, |piece| {
            report.absorb_points(piece.points);
            report.bounds_violations.extend(piece.violations);
            report.bounds_checked += piece.bounds_checked;
            if let Some(log) = log.as_deref_mut() {
                log.append(piece.end)?;
            }
            Ok(())
        })?;
        report.elapsed = started.elapsed();
        Ok(report)
    }

    /// Every Golomb point in `[lo, hi)`, checked against the closed form.
    pub fn verify_theorem3(&self, lo: u64, hi: u64) -> Result<VerificationReport> {
        check_range(lo, hi)?;
        self.report_from(lo, seed_for(lo)?, hi, ScanMode::GOLOMB, None)
    }

    /// The explicit bounds at every integer of `[max(lo, 67), hi)`.
    pub fn verify_bounds(&self, lo: u64, hi: u64) -> Result<VerificationReport> {
        check_range(lo, hi)?;
        self.report_from(lo, seed_for(lo)?, hi, ScanMode::BOUNDS, None)
    }

    /// Like [`verify_theorem3`](Self::verify_theorem3), but continues after
    /// the last checkpoint in `log` and appends one checkpoint per piece.
    /// The report covers only the part scanned by this call.
    pub fn verify_theorem3_resumable(
        &self,
        lo: u64,
        hi: u64,
        log: &mut CheckpointLog,
    ) -> Result<VerificationReport> {
        check_range(lo, hi)?;
        let seed = resume_seed(lo, hi, log.last())?;
        if seed.n + 1 >= hi {
            return Ok(VerificationReport::empty(seed.n + 1, hi, seed));
        }
        self.report_from(seed.n + 1, seed, hi, ScanMode::GOLOMB, Some(log))
    }
}

/// Seed for a resumed scan of `[lo, hi)`, cross-checked against Legendre.
pub fn resume_seed(lo: u64, hi: u64, last: Option<PiCheckpoint>) -> Result<PiCheckpoint> {
    let Some(c) = last else {
        return seed_for(lo);
    };
    if c.n + 1 < lo || c.n >= hi {
        return Err(Error::BadCheckpoint {
            line: 0,
            reason: format!("checkpoint n = {} lies outside [{}, {})", c.n, lo, hi),
        });
    }
    let expected = count_up_to(c.n)?;
    if expected != c.count {
        return Err(Error::InconsistentSeed {
            n: c.n,
            count: c.count,
            expected,
        });
    }
    Ok(c)
}

pub fn verify_theorem3(lo: u64, hi: u64) -> Result<VerificationReport> {
    Scanner::default().verify_theorem3(lo, hi)
}

pub fn verify_bounds_range(lo: u64, hi: u64) -> Result<VerificationReport> {
    Scanner::default().verify_bounds(lo, hi)
}

/// Sequential stream of the Golomb points in `[lo, hi)`, starting from a
/// seed `π(lo − 1)` that is cross-checked against the Legendre backend.
pub fn scan_golomb_points(lo: u64, hi: u64, seed: PiCheckpoint) -> Result<GolombScan> {
    check_range(lo, hi)?;
    if seed.n.checked_add(1) != Some(lo) {
        return Err(Error::InconsistentSeed {
            n: seed.n,
            count: seed.count,
            expected: count_up_to(lo.saturating_sub(1))?,
        });
    }
    let expected = count_up_to(seed.n)?;
    if expected != seed.count {
        return Err(Error::InconsistentSeed {
            n: seed.n,
            count: seed.count,
            expected,
        });
    }
    Ok(GolombScan {
        scanner: Scanner::default().with_shards(1),
        base: BasePrimes::for_limit(hi),
        next: lo,
        hi,
        count: seed.count,
        buffer: VecDeque::new(),
    })
}

pub struct GolombScan {
    scanner: Scanner,
    base: BasePrimes,
    next: u64,
    hi: u64,
    count: u64,
    buffer: VecDeque<GolombPoint>,
}

impl Iterator for GolombScan {
    type Item = Result<GolombPoint>;

    fn next(&mut self) -> Option<Result<GolombPoint>> {
        while self.buffer.is_empty() && self.next < self.hi {
            let end = self
                .hi
                .min(self.next.saturating_add(self.scanner.sieve.segment_len()));
            let piece = match self.scanner.run_piece(
                self.next,
                end,
                self.count,
                ScanMode::GOLOMB,
                &self.base,
            ) {
                Ok(p) => p,
                Err(e) => {
                    self.next = self.hi;
                    return Some(Err(e));
                }
            };
            self.count = piece.end.count;
            self.next = end;
            self.buffer.extend(piece.points);
        }
        self.buffer.pop_front().map(Ok)
    }
}

/// Least `n <= search_limit` with `n = k · π(n)`, or `None` if there is none.
pub fn first_attainment(k: u64, search_limit: u64) -> Result<Option<u64>> {
    if k < 2 {
        return Err(Error::InvalidRatio { k });
    }
    if search_limit < 2 {
        return Ok(None);
    }
    let hi = search_limit.checked_add(1).ok_or(Error::Overflow {
        what: "search limit",
    })?;
    check_range(2, hi)?;
    let cfg = SieveConfig::default();
    let base = BasePrimes::for_limit(hi);
    let mut count = 0;
    let mut lo = 2;
    while lo < hi {
        let end = hi.min(lo.saturating_add(cfg.segment_len()));
        let seg = cfg.sieve_segment(lo, end, &base)?;
        let mut found = None;
        let (c, flow) = walk::for_each_interval(&seg, count, |a, b, c| match k.checked_mul(c) {
            Some(n) if c > 0 && a <= n && n < b => {
                found = Some(n);
                ControlFlow::Break(())
            }
            _ => ControlFlow::Continue(()),
        });
        if flow.is_break() {
            return Ok(found);
        }
        count = c;
        lo = end;
    }
    Ok(None)
}
