//! Walks a sieved segment as a sequence of maximal intervals on which `π` is
//! constant. Every scan in this module is phrased in terms of these intervals:
//! Golomb points on `[a, b)` with count `c` are the multiples of `c` there.

use std::ops::ControlFlow;

use crate::error::Result;
use crate::formula::{rosser_schoenfeld, GolombPoint, ThresholdTable, BOUNDS_MIN_N};
use crate::prime_engine::SieveSegment;

/// Calls `f(a, b, c)` for consecutive intervals `[a, b)` covering the
/// segment, where `π(n) = c` for every `n` in the interval. Returns the count
/// at the end of the segment.
pub(crate) fn for_each_interval<F>(
    seg: &SieveSegment,
    seed: u64,
    mut f: F,
) -> (u64, ControlFlow<()>)
where
    F: FnMut(u64, u64, u64) -> ControlFlow<()>,
{
    let mut start = seg.lo();
    let mut count = seed;
    for p in seg.primes() {
        if p > start {
            if let ControlFlow::Break(()) = f(start, p, count) {
                return (count, ControlFlow::Break(()));
            }
        }
        count += 1;
        start = p;
    }
    let flow = f(start, seg.hi(), count);
    (count, flow)
}

/// Multiples of `c` in `[a, b)` as Golomb points.
pub(crate) fn golomb_in(
    a: u64,
    b: u64,
    c: u64,
    table: &ThresholdTable,
    out: &mut Vec<GolombPoint>,
) -> Result<()> {
    if c == 0 {
        return Ok(());
    }
    let mut m = a.div_ceil(c).saturating_mul(c);
    while m < b {
        if let Some(point) = GolombPoint::evaluate(m, c, table)? {
            out.push(point);
        }
        m = match m.checked_add(c) {
            Some(next) => next,
            None => break,
        };
    }
    Ok(())
}

/// Bound violations in `[a, b)` with constant count `c`.
///
/// Both bounds are increasing in `n` once `ln n > 5/2`, so the lower bound is
/// tightest at `b − 1` and the upper at `a`. Only when one of the two extreme
/// checks fails is the interval examined point by point.
pub(crate) fn bounds_in(a: u64, b: u64, c: u64, violations: &mut Vec<u64>) -> Result<u64> {
    let a = a.max(BOUNDS_MIN_N);
    if a >= b {
        return Ok(0);
    }
    let first = rosser_schoenfeld(a, c)?.ok;
    let last = b - 1 == a || rosser_schoenfeld(b - 1, c)?.ok;
    if !(first && last) {
        for n in a..b {
            if !rosser_schoenfeld(n, c)?.ok {
                violations.push(n);
            }
        }
    }
    Ok(b - a)
}
