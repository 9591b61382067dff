//! Odd-only, bit-packed segmented sieve of Eratosthenes.
//!
//! Each segment stores one bit per odd integer of its half-open interval.
//! The even prime 2 is tracked by a separate flag so that word scans only
//! ever see odd candidates.

use crate::error::{Error, Result};

/// Default number of odd residues per segment (2^20 bits = 128 KiB).
pub const DEFAULT_SEGMENT_BITS: u64 = 1 << 20;

/// Every prime up to `bound`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasePrimes {
    bound: u64,
    primes: Vec<u64>,
}

impl BasePrimes {
    /// Simple (unsegmented) sieve of all primes `<= bound`.
    pub fn up_to(bound: u64) -> Self {
        let len = usize::try_from(bound).expect("base prime bound exceeds address space");
        let mut composite = vec![false; len + 1];
        let mut primes = Vec::new();
        for i in 2..=len {
            if composite[i] {
                continue;
            }
            primes.push(i as u64);
            let mut j = i.saturating_mul(i);
            while j <= len {
                composite[j] = true;
                j += i;
            }
        }
        BasePrimes { bound, primes }
    }

    /// Enough base primes to sieve any segment ending below `hi`.
    pub fn for_limit(hi: u64) -> Self {
        Self::up_to(hi.saturating_sub(1).isqrt())
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// π(x) for `x <= bound`, by binary search.
    pub fn count_up_to(&self, x: u64) -> Option<u64> {
        (x <= self.bound).then(|| self.primes.partition_point(|&p| p <= x) as u64)
    }
}

/// Segment length policy shared by every scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SieveConfig {
    /// Odd residues per segment; a segment spans twice as many integers.
    pub segment_bits: u64,
}

impl Default for SieveConfig {
    fn default() -> Self {
        SieveConfig {
            segment_bits: DEFAULT_SEGMENT_BITS,
        }
    }
}

impl SieveConfig {
    pub fn with_segment_bits(segment_bits: u64) -> Self {
        assert!(segment_bits > 0, "segment must hold at least one residue");
        SieveConfig { segment_bits }
    }

    /// Maximum number of integers in one segment.
    pub fn segment_len(&self) -> u64 {
        self.segment_bits.saturating_mul(2)
    }

    pub fn sieve_segment(&self, lo: u64, hi: u64, base: &BasePrimes) -> Result<SieveSegment> {
        if lo >= hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        if hi - lo > self.segment_len() {
            return Err(Error::SegmentTooLong {
                lo,
                hi,
                max: self.segment_len(),
            });
        }
        let needed = (hi - 1).isqrt();
        if base.bound < needed {
            return Err(Error::InsufficientBasePrimes {
                bound: base.bound,
                needed,
            });
        }
        Ok(SieveSegment::build(lo, hi, base))
    }
}

/// Sieve `[lo, hi)` with the default segment length.
pub fn sieve_segment(lo: u64, hi: u64, base: &BasePrimes) -> Result<SieveSegment> {
    SieveConfig::default().sieve_segment(lo, hi, base)
}

/// Primality of every integer in `[lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveSegment {
    lo: u64,
    hi: u64,
    /// Smallest odd integer `>= lo`; bit `i` stands for `first_odd + 2i`.
    first_odd: u64,
    bits: u64,
    words: Vec<u64>,
    has_two: bool,
}

impl SieveSegment {
    fn build(lo: u64, hi: u64, base: &BasePrimes) -> Self {
        let first_odd = lo | 1;
        let bits = if first_odd < hi {
            (hi - first_odd).div_ceil(2)
        } else {
            0
        };
        let nwords = bits.div_ceil(64) as usize;
        let mut words = vec![u64::MAX; nwords];
        if bits % 64 != 0 {
            words[nwords - 1] = (1u64 << (bits % 64)) - 1;
        }

        let last = hi - 1;
        for &p in base.primes.iter().skip_while(|&&p| p == 2) {
            let Some(sq) = p.checked_mul(p) else { break };
            if sq > last {
                break;
            }
            let mut m = lo.div_ceil(p).saturating_mul(p).max(sq);
            if m % 2 == 0 {
                m += p;
            }
            let mut idx = ((m - first_odd) / 2) as usize;
            let end = bits as usize;
            // Odd multiples are 2p integers apart, which is p bits.
            let stride = p as usize;
            while idx < end {
                words[idx / 64] &= !(1u64 << (idx % 64));
                idx += stride;
            }
        }
        if first_odd == 1 && bits > 0 {
            words[0] &= !1;
        }

        SieveSegment {
            lo,
            hi,
            first_odd,
            bits,
            words,
            has_two: lo <= 2 && 2 < hi,
        }
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    pub fn is_prime(&self, n: u64) -> bool {
        debug_assert!(self.lo <= n && n < self.hi, "{n} outside segment");
        if n == 2 {
            return self.has_two;
        }
        if n.is_multiple_of(2) || n < self.first_odd {
            return false;
        }
        let idx = (n - self.first_odd) / 2;
        idx < self.bits && self.words[(idx / 64) as usize] >> (idx % 64) & 1 == 1
    }

    /// Number of primes in the segment.
    pub fn count(&self) -> u64 {
        let odd: u64 = self.words.iter().map(|w| u64::from(w.count_ones())).sum();
        odd + u64::from(self.has_two)
    }

    /// Primes of the segment in ascending order.
    pub fn primes(&self) -> SegmentPrimes<'_> {
        SegmentPrimes {
            segment: self,
            two_pending: self.has_two,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }
}

/// Ascending iterator over the primes of a [`SieveSegment`].
pub struct SegmentPrimes<'a> {
    segment: &'a SieveSegment,
    two_pending: bool,
    word_idx: usize,
    current: u64,
}

impl Iterator for SegmentPrimes<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.two_pending {
            self.two_pending = false;
            return Some(2);
        }
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as u64;
                self.current &= self.current - 1;
                let idx = self.word_idx as u64 * 64 + bit;
                return Some(self.segment.first_odd + 2 * idx);
            }
            self.word_idx += 1;
            self.current = *self.segment.words.get(self.word_idx)?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
        let base = BasePrimes::for_limit(hi);
        sieve_segment(lo, hi, &base).unwrap().primes().collect()
    }

    #[test]
    fn first_primes() {
        assert_eq!(primes_in(2, 10), vec![2, 3, 5, 7]);
    }

    #[test]
    fn nineties() {
        assert_eq!(primes_in(90, 100), vec![97]);
    }

    #[test]
    fn nothing_below_two() {
        assert!(primes_in(0, 2).is_empty());
        assert!(primes_in(1, 2).is_empty());
    }

    #[test]
    fn single_element_segments() {
        assert_eq!(primes_in(2, 3), vec![2]);
        assert_eq!(primes_in(97, 98), vec![97]);
        assert!(primes_in(98, 99).is_empty());
    }

    #[test]
    fn rejects_empty_interval() {
        let base = BasePrimes::up_to(10);
        assert!(matches!(
            sieve_segment(10, 10, &base),
            Err(Error::InvalidInterval { .. })
        ));
    }

    #[test]
    fn rejects_short_base() {
        let base = BasePrimes::up_to(5);
        // sqrt(120) > 10 needs 7 as a base prime
        assert!(matches!(
            sieve_segment(100, 121, &base),
            Err(Error::InsufficientBasePrimes { needed: 10, .. })
        ));
    }

    #[test]
    fn rejects_long_segment() {
        let base = BasePrimes::up_to(100);
        let cfg = SieveConfig::with_segment_bits(8);
        assert!(cfg.sieve_segment(0, 16, &base).is_ok());
        assert!(matches!(
            cfg.sieve_segment(0, 17, &base),
            Err(Error::SegmentTooLong { max: 16, .. })
        ));
    }

    #[test]
    fn base_prime_counts() {
        let base = BasePrimes::up_to(100);
        assert_eq!(base.primes().len(), 25);
        assert_eq!(base.count_up_to(10), Some(4));
        assert_eq!(base.count_up_to(101), None);
    }

    #[test]
    fn count_matches_iteration() {
        let base = BasePrimes::for_limit(1 << 16);
        let seg = sieve_segment(1000, 1 << 16, &base).unwrap();
        assert_eq!(seg.count(), seg.primes().count() as u64);
    }
}
