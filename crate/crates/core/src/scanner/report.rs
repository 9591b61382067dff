use std::time::Duration;

use serde::Serialize;

use crate::formula::GolombPoint;
use crate::prime_engine::PiCheckpoint;

/// An in-domain Golomb point where `n / ⌊ln n − 1/2⌋` is not `π(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub n: u64,
    pub expected: u64,
    /// `None` when the floor did not even divide `n`.
    pub formula: Option<u64>,
}

/// Aggregate result of a range scan over `[range_lo, range_hi)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub range_lo: u64,
    pub range_hi: u64,
    pub points: Vec<GolombPoint>,
    /// Points with `n >= 67`.
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub bounds_violations: Vec<u64>,
    /// Integers `n >= 67` tested against the explicit bounds.
    pub bounds_checked: u64,
    #[serde(skip)]
    pub elapsed: Duration,
    /// `π(range_hi − 1)`, the resume point after this range.
    pub checkpoint: PiCheckpoint,
}

impl VerificationReport {
    pub(crate) fn empty(lo: u64, hi: u64, checkpoint: PiCheckpoint) -> Self {
        VerificationReport {
            range_lo: lo,
            range_hi: hi,
            points: Vec::new(),
            checked: 0,
            failures: Vec::new(),
            bounds_violations: Vec::new(),
            bounds_checked: 0,
            elapsed: Duration::ZERO,
            checkpoint,
        }
    }

    pub(crate) fn absorb_points(&mut self, points: Vec<GolombPoint>) {
        for p in &points {
            if p.in_domain() {
                self.checked += 1;
            }
            if p.is_failure() {
                self.failures.push(Failure {
                    n: p.n,
                    expected: p.pi_n,
                    formula: p.theorem3_val,
                });
            }
        }
        self.points.extend(points);
    }

    /// No formula failures and no bound violations.
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.bounds_violations.is_empty()
    }
}
