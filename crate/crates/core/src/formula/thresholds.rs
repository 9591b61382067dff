//! Integer breakpoints of `⌊ln n − 1/2⌋`.
//!
//! `t_k` is the least integer strictly above `e^{k + 1/2}`, so that
//! `⌊ln n − 1/2⌋ = k` exactly when `t_k <= n < t_{k+1}`. The candidate comes
//! from `e^{k+1/2}` evaluated in fixed point; it is then confirmed through the
//! logarithm at a wider precision on both sides of the breakpoint.

use std::cmp::Ordering;
use std::sync::OnceLock;

use super::extended::{Real, BASE_PRECISION, WIDE_PRECISION};
use crate::error::{Error, Result};

/// Largest `k` whose threshold fits in a `u64` (`e^{44.5}` does not).
pub const MAX_K: u32 = 43;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdTable {
    entries: Vec<(u32, u64)>,
    /// `t_{k_max + 1}`, or `None` when it lies beyond `u64::MAX`.
    ceiling: Option<u64>,
}

/// Exact threshold `t_k`, or `None` when it does not fit in 64 bits.
fn threshold(k: u32) -> Result<Option<u64>> {
    let e = Real::exp_half(2 * u64::from(k) + 1, BASE_PRECISION);
    let floor = e.floor().ok_or_else(|| Error::Undecidable {
        what: format!("e^({k} + 1/2)"),
    })?;
    let Ok(candidate) = u64::try_from(floor + 1) else {
        return Ok(None);
    };
    verify_entry(k, candidate)?;
    Ok(Some(candidate))
}

/// `ln t − 1/2 >= k` and `ln (t − 1) − 1/2 < k`, both strict beyond the margin.
fn verify_entry(k: u32, t: u64) -> Result<()> {
    let shift = Real::dyadic(2 * i64::from(k) + 1, 1, WIDE_PRECISION);
    let above = Real::ln(t, WIDE_PRECISION).sub(&shift).sign();
    let below = Real::ln(t - 1, WIDE_PRECISION).sub(&shift).sign();
    match (above, below) {
        (Some(Ordering::Greater), Some(Ordering::Less)) => Ok(()),
        _ => Err(Error::Undecidable {
            what: format!("threshold t_{k} = {t}"),
        }),
    }
}

/// Breakpoints `t_0 ..= t_{k_max}`.
pub fn build_thresholds(k_max: u32) -> Result<ThresholdTable> {
    if k_max < 1 {
        return Err(Error::EmptyThresholdTable);
    }
    let mut entries = Vec::with_capacity(k_max as usize + 1);
    for k in 0..=k_max {
        let t = threshold(k)?.ok_or(Error::ThresholdOverflow { k })?;
        entries.push((k, t));
    }
    let ceiling = threshold(k_max + 1)?;
    Ok(ThresholdTable { entries, ceiling })
}

impl ThresholdTable {
    /// The full 64-bit table, built once per process.
    pub fn standard() -> &'static ThresholdTable {
        static TABLE: OnceLock<ThresholdTable> = OnceLock::new();
        TABLE.get_or_init(|| build_thresholds(MAX_K).expect("standard threshold table"))
    }

    pub fn entries(&self) -> &[(u32, u64)] {
        &self.entries
    }

    pub fn k_max(&self) -> u32 {
        self.entries.last().map_or(0, |&(k, _)| k)
    }

    /// Exclusive upper end of the covered range, `None` meaning all of `u64`.
    pub fn ceiling(&self) -> Option<u64> {
        self.ceiling
    }

    pub fn threshold(&self, k: u32) -> Option<u64> {
        self.entries.get(k as usize).map(|&(_, t)| t)
    }

    /// Re-runs the two-sided logarithm check on every entry.
    pub fn verify(&self) -> Result<()> {
        let increasing = self.entries.windows(2).all(|w| w[0].1 < w[1].1);
        if !increasing {
            return Err(Error::Undecidable {
                what: "monotonicity of the threshold table".into(),
            });
        }
        for &(k, t) in &self.entries {
            verify_entry(k, t)?;
        }
        Ok(())
    }

    /// `⌊ln n − 1/2⌋` by integer comparison against the breakpoints.
    pub fn floor_log_shift(&self, n: u64) -> Result<u32> {
        let first = self.entries[0].1;
        if n < first || self.ceiling.is_some_and(|c| n >= c) {
            return Err(Error::OutsideTable { n });
        }
        let idx = self.entries.partition_point(|&(_, t)| t <= n);
        Ok(self.entries[idx - 1].0)
    }
}

/// `⌊ln n − 1/2⌋` for `n >= 2`.
pub fn floor_log_shift(n: u64, table: &ThresholdTable) -> Result<u32> {
    table.floor_log_shift(n)
}
