use serde::{Deserialize, Serialize};

use super::sieve::{BasePrimes, SieveConfig, SieveSegment};
use crate::error::{Error, Result};

/// A known value of the prime counting function: `count = π(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PiCheckpoint {
    pub n: u64,
    pub count: u64,
}

impl PiCheckpoint {
    /// The trivial seed `π(1) = 0`.
    pub const ORIGIN: PiCheckpoint = PiCheckpoint { n: 1, count: 0 };

    pub fn new(n: u64, count: u64) -> Self {
        PiCheckpoint { n, count }
    }

    /// Cheap necessary condition: only 2 and odd numbers can be prime.
    pub fn is_plausible(&self) -> bool {
        match self.n {
            0 | 1 => self.count == 0,
            2 => self.count == 1,
            n => self.count >= 2 && self.count <= n / 2 + 1,
        }
    }
}

/// Emits `π(n)` for every `n` in `(start.n, limit]`, one checkpoint per integer.
pub fn pi_stream(start: PiCheckpoint, limit: u64) -> Result<PiStream> {
    pi_stream_with(start, limit, SieveConfig::default())
}

pub fn pi_stream_with(start: PiCheckpoint, limit: u64, config: SieveConfig) -> Result<PiStream> {
    if limit < start.n {
        return Err(Error::LimitBelowStart {
            start: start.n,
            limit,
        });
    }
    let end = limit.checked_add(1).ok_or(Error::Overflow {
        what: "stream limit",
    })?;
    Ok(PiStream {
        base: BasePrimes::for_limit(end),
        config,
        next: start.n + 1,
        end,
        count: start.count,
        segment: None,
    })
}

/// Sequential, single-owner state of a running prime count.
pub struct PiStream {
    base: BasePrimes,
    config: SieveConfig,
    next: u64,
    end: u64,
    count: u64,
    segment: Option<SieveSegment>,
}

impl PiStream {
    /// The last emitted checkpoint (or the seed if nothing was emitted).
    pub fn current(&self) -> PiCheckpoint {
        PiCheckpoint::new(self.next - 1, self.count)
    }
}

impl Iterator for PiStream {
    type Item = PiCheckpoint;

    fn next(&mut self) -> Option<PiCheckpoint> {
        if self.next >= self.end {
            return None;
        }
        let n = self.next;
        if self.segment.as_ref().is_none_or(|s| n >= s.hi()) {
            let hi = self.end.min(n.saturating_add(self.config.segment_len()));
            let seg = self
                .config
                .sieve_segment(n, hi, &self.base)
                .expect("segment bounds are derived from a validated range");
            self.segment = Some(seg);
        }
        let seg = self.segment.as_ref().expect("segment loaded");
        if seg.is_prime(n) {
            self.count += 1;
        }
        self.next += 1;
        Some(PiCheckpoint::new(n, self.count))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.end - self.next).unwrap_or(usize::MAX);
        (left, Some(left))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_at(n: u64) -> u64 {
        pi_stream(PiCheckpoint::ORIGIN, n)
            .unwrap()
            .last()
            .map_or(0, |c| c.count)
    }

    #[test]
    fn known_counts() {
        assert_eq!(count_at(10), 4);
        assert_eq!(count_at(100), 25);
    }

    #[test]
    fn seed_only_emits_nothing() {
        let mut s = pi_stream(PiCheckpoint::ORIGIN, 1).unwrap();
        assert_eq!(s.next(), None);
        assert_eq!(s.current(), PiCheckpoint::ORIGIN);
    }

    #[test]
    fn limit_below_start() {
        assert!(matches!(
            pi_stream(PiCheckpoint::new(10, 4), 9),
            Err(Error::LimitBelowStart {
                start: 10,
                limit: 9
            })
        ));
    }

    #[test]
    fn resumes_from_checkpoint() {
        let tail: Vec<_> = pi_stream(PiCheckpoint::new(10, 4), 13).unwrap().collect();
        assert_eq!(
            tail,
            vec![
                PiCheckpoint::new(11, 5),
                PiCheckpoint::new(12, 5),
                PiCheckpoint::new(13, 6)
            ]
        );
    }

    #[test]
    fn crosses_segment_boundaries() {
        let small = SieveConfig::with_segment_bits(7);
        let a: Vec<_> = pi_stream_with(PiCheckpoint::ORIGIN, 5000, small)
            .unwrap()
            .collect();
        let b: Vec<_> = pi_stream(PiCheckpoint::ORIGIN, 5000).unwrap().collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 4999);
    }

    #[test]
    fn plausibility() {
        assert!(PiCheckpoint::new(100, 25).is_plausible());
        assert!(!PiCheckpoint::new(100, 60).is_plausible());
        assert!(!PiCheckpoint::new(1, 1).is_plausible());
    }
}
