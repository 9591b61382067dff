//! The explicit bounds `n/(ln n − 1/2) < π(n) < n/(ln n − 3/2)` for `n >= 67`
//! and their inverted form `ln n − 3/2 < n/π(n) < ln n − 1/2`.
//!
//! Both checks run in `f64` and fall back to [`Real`] arithmetic whenever a
//! compared quantity lies within [`NEAR_BOUNDARY`] relative distance of its
//! bound. The two fall-backs use different algebra (cross-multiplication vs.
//! division) so the equivalence tests compare genuinely distinct paths.

use std::cmp::Ordering;

use serde::Serialize;

use super::extended::{Real, BASE_PRECISION, WIDE_PRECISION};
use crate::error::{Error, Result};

/// Smallest `n` for which the bounds are asserted.
pub const BOUNDS_MIN_N: u64 = 67;

/// Relative distance below which a float comparison is re-done exactly.
pub const NEAR_BOUNDARY: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundsResult {
    pub n: u64,
    pub pi_n: u64,
    /// `n / (ln n − 1/2)`
    pub lower: f64,
    /// `n / (ln n − 3/2)`
    pub upper: f64,
    /// `n / π(n)`
    pub ratio: f64,
    /// `ln n − 3/2`
    pub ratio_lo: f64,
    /// `ln n − 1/2`
    pub ratio_hi: f64,
    pub ok: bool,
}

impl BoundsResult {
    pub fn sandwich_width(&self) -> f64 {
        self.ratio_hi - self.ratio_lo
    }
}

fn near(a: f64, b: f64) -> bool {
    (a - b).abs() <= NEAR_BOUNDARY * a.abs().max(b.abs())
}

/// Decide `sign(f(prec))` at the base precision, confirmed at the wide one.
fn decide(what: impl Fn() -> String, f: impl Fn(u32) -> Real) -> Result<Ordering> {
    let base = f(BASE_PRECISION).sign();
    let wide = f(WIDE_PRECISION).sign();
    match (base, wide) {
        (Some(a), Some(b)) if a == b => Ok(a),
        _ => Err(Error::Undecidable { what: what() }),
    }
}

/// `pi · (ln n − c/2) − n`, sign only.
fn cross_sign(n: u64, pi_n: u64, c: i64) -> Result<Ordering> {
    decide(
        || format!("{pi_n} (ln {n} - {c}/2) against {n}"),
        |prec| {
            Real::ln(n, prec)
                .sub(&Real::dyadic(c, 1, prec))
                .mul_u64(pi_n)
                .sub(&Real::from_u64(n, prec))
        },
    )
}

pub fn rosser_schoenfeld(n: u64, pi_n: u64) -> Result<BoundsResult> {
    if n < BOUNDS_MIN_N {
        return Err(Error::BelowDomain {
            n,
            min: BOUNDS_MIN_N,
        });
    }
    let nf = n as f64;
    let pf = pi_n as f64;
    let ln = nf.ln();
    let lower = nf / (ln - 0.5);
    let upper = nf / (ln - 1.5);

    let above_lower = if near(pf, lower) {
        cross_sign(n, pi_n, 1)? == Ordering::Greater
    } else {
        pf > lower
    };
    let below_upper = if near(pf, upper) {
        cross_sign(n, pi_n, 3)? == Ordering::Less
    } else {
        pf < upper
    };

    Ok(BoundsResult {
        n,
        pi_n,
        lower,
        upper,
        ratio: nf / pf,
        ratio_lo: ln - 1.5,
        ratio_hi: ln - 0.5,
        ok: above_lower && below_upper,
    })
}

/// `n / π(n) − (ln n − c/2)`, sign only.
fn ratio_sign(n: u64, pi_n: u64, c: i64) -> Result<Ordering> {
    decide(
        || format!("{n}/{pi_n} against ln {n} - {c}/2"),
        |prec| {
            let ratio = Real::from_u64(n, prec).div(&Real::from_u64(pi_n, prec));
            ratio.sub(&Real::ln(n, prec).sub(&Real::dyadic(c, 1, prec)))
        },
    )
}

/// `ln n − 3/2 < n/π(n) < ln n − 1/2`.
pub fn ratio_check(n: u64, pi_n: u64) -> Result<bool> {
    if pi_n == 0 {
        return Err(Error::ZeroCount);
    }
    if n < BOUNDS_MIN_N {
        return Err(Error::BelowDomain {
            n,
            min: BOUNDS_MIN_N,
        });
    }
    let ratio = n as f64 / pi_n as f64;
    let ln = (n as f64).ln();
    let lo = ln - 1.5;
    let hi = ln - 0.5;
    let above = if near(ratio, lo) {
        ratio_sign(n, pi_n, 3)? == Ordering::Greater
    } else {
        ratio > lo
    };
    let below = if near(ratio, hi) {
        ratio_sign(n, pi_n, 1)? == Ordering::Less
    } else {
        ratio < hi
    };
    Ok(above && below)
}
