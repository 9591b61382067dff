use std::io;

use thiserror::Error;

/// Errors raised by every layer of the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid interval [{lo}, {hi}): lower bound must be below upper bound")]
    InvalidInterval { lo: u64, hi: u64 },

    #[error("segment [{lo}, {hi}) is longer than the configured maximum of {max} integers")]
    SegmentTooLong { lo: u64, hi: u64, max: u64 },

    #[error("base primes cover only up to {bound}, need every prime up to {needed}")]
    InsufficientBasePrimes { bound: u64, needed: u64 },

    #[error("limit {limit} is below the checkpoint at n = {start}")]
    LimitBelowStart { start: u64, limit: u64 },

    #[error("pi(x) is only defined here for x >= 1")]
    ZeroArgument,

    #[error("phi(x, a) needs the first {a} primes but only {available} are available")]
    NotEnoughPrimes { a: usize, available: usize },

    #[error("threshold for k = {k} does not fit in 64 bits")]
    ThresholdOverflow { k: u32 },

    #[error("k_max must be at least 1")]
    EmptyThresholdTable,

    #[error("n = {n} is outside the threshold table coverage")]
    OutsideTable { n: u64 },

    #[error("n = {n} is below the domain boundary n >= {min}")]
    BelowDomain { n: u64, min: u64 },

    #[error("pi(n) = 0 cannot be used as a divisor")]
    ZeroCount,

    #[error("ratio must be at least 2, got {k}")]
    InvalidRatio { k: u64 },

    #[error("extended precision could not separate {what} from its decision boundary")]
    Undecidable { what: String },

    #[error("seed checkpoint (n = {n}, count = {count}) disagrees with pi({n}) = {expected}")]
    InconsistentSeed { n: u64, count: u64, expected: u64 },

    #[error(
        "shard ending at {n} finished with count {finished}, next shard was seeded with {seeded}"
    )]
    ShardMismatch { n: u64, finished: u64, seeded: u64 },

    #[error("range end {hi} exceeds the supported scan budget of {max}")]
    RangeTooLarge { hi: u64, max: u64 },

    #[error("arithmetic overflow while computing {what}")]
    Overflow { what: &'static str },

    #[error("malformed checkpoint line {line}: {reason}")]
    BadCheckpoint { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
