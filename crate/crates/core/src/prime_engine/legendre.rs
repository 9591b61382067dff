//! Single-point prime counting through Legendre's identity
//! `π(x) = φ(x, a) + a − 1` with `a = π(√x)`.

use std::collections::HashMap;

use super::sieve::BasePrimes;
use crate::error::{Error, Result};

/// Primorials of the first few primes; `φ(y, a)` for `a <= SMALL_A` is read
/// from a periodic table instead of recursing.
const PRIMORIALS: [u64; 7] = [1, 2, 6, 30, 210, 2310, 30030];
const SMALL_A: usize = PRIMORIALS.len() - 1;

/// Subproblems with `x` below this are memoized by default.
pub const DEFAULT_MEMO_CUTOFF: u64 = 1 << 16;

/// Read-only state for φ evaluation: the root primes plus periodic tables.
#[derive(Debug, Clone)]
pub struct LegendreContext {
    root: BasePrimes,
    /// `small[a][r]` = #{1 <= y <= r : gcd(y, P_a) = 1} for `r < P_a`.
    small: Vec<Vec<u32>>,
    memo_cutoff: u64,
}

impl LegendreContext {
    /// Context able to answer π(x') for every `x' <= x_max`.
    pub fn new(x_max: u64) -> Self {
        Self::with_memo_cutoff(x_max, DEFAULT_MEMO_CUTOFF)
    }

    pub fn with_memo_cutoff(x_max: u64, memo_cutoff: u64) -> Self {
        // at least the primes dividing the largest primorial, so the tables are consistent
        let root = BasePrimes::up_to(x_max.isqrt().max(13));
        let small = (0..=SMALL_A)
            .map(|a| {
                let period = PRIMORIALS[a] as usize;
                let ps = &root.primes()[..a];
                let mut acc = 0u32;
                (0..period)
                    .map(|r| {
                        if r > 0 && ps.iter().all(|&p| !(r as u64).is_multiple_of(p)) {
                            acc += 1;
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        LegendreContext {
            root,
            small,
            memo_cutoff,
        }
    }

    pub fn root_primes(&self) -> &[u64] {
        self.root.primes()
    }

    /// All primes up to this bound are present in [`root_primes`](Self::root_primes).
    pub fn root_bound(&self) -> u64 {
        self.root.bound()
    }

    fn small_phi(&self, x: u64, a: usize) -> u64 {
        debug_assert!(a >= 1);
        let period = PRIMORIALS[a];
        let table = &self.small[a];
        let full = u64::from(table[period as usize - 1]);
        (x / period) * full + u64::from(table[(x % period) as usize])
    }

    fn phi_rec(&self, x: u64, a: usize, memo: &mut HashMap<(u64, usize), u64>) -> u64 {
        if a == 0 {
            return x;
        }
        if a <= SMALL_A {
            return self.small_phi(x, a);
        }
        if x == 0 {
            return 0;
        }
        let primes = self.root.primes();
        let pa = primes[a - 1];
        if x <= pa {
            return 1;
        }
        // Below pa^2 the survivors are 1 and the primes in (pa, x].
        if x < pa * pa {
            if let Some(pi_x) = self.root.count_up_to(x) {
                return 1 + pi_x - a as u64;
            }
        }
        let memoize = x < self.memo_cutoff;
        if memoize {
            if let Some(&v) = memo.get(&(x, a)) {
                return v;
            }
        }
        // φ(x, a) = φ(x, SMALL_A) − Σ_{i = SMALL_A+1..=a} φ(⌊x / p_i⌋, i − 1)
        let mut value = self.small_phi(x, SMALL_A);
        for i in SMALL_A + 1..=a {
            let p = primes[i - 1];
            let q = x / p;
            if q == 0 {
                break;
            }
            value -= self.phi_rec(q, i - 1, memo);
        }
        if memoize {
            memo.insert((x, a), value);
        }
        value
    }
}

/// Count of integers in `[1, x]` divisible by none of the first `a` primes.
pub fn phi(x: u64, a: usize, ctx: &LegendreContext) -> Result<u64> {
    let available = ctx.root_primes().len();
    if a > available {
        return Err(Error::NotEnoughPrimes { a, available });
    }
    if a == 0 {
        return Ok(x);
    }
    Ok(ctx.phi_rec(x, a, &mut HashMap::new()))
}

/// π(x) for a single point `x >= 1`.
pub fn pi_point(x: u64) -> Result<u64> {
    if x == 0 {
        return Err(Error::ZeroArgument);
    }
    let ctx = LegendreContext::new(x);
    pi_point_with(x, &ctx)
}

/// π(x) reusing an existing context; the context must cover `√x`.
pub fn pi_point_with(x: u64, ctx: &LegendreContext) -> Result<u64> {
    if x == 0 {
        return Err(Error::ZeroArgument);
    }
    let root = x.isqrt();
    if root > ctx.root_bound() {
        return Err(Error::InsufficientBasePrimes {
            bound: ctx.root_bound(),
            needed: root,
        });
    }
    let a = ctx.root_primes().partition_point(|&p| p <= root);
    Ok(phi(x, a, ctx)? + a as u64 - 1)
}

/// π(x) with `π(0) = 0`, for seeding scans that start at 1.
pub(crate) fn count_up_to(x: u64) -> Result<u64> {
    if x == 0 {
        Ok(0)
    } else {
        pi_point(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_small_cases() {
        let ctx = LegendreContext::new(10_000);
        assert_eq!(phi(10, 1, &ctx).unwrap(), 5);
        assert_eq!(phi(100, 2, &ctx).unwrap(), 33);
        for x in [0, 1, 17, 12345] {
            assert_eq!(phi(x, 0, &ctx).unwrap(), x);
        }
    }

    #[test]
    fn phi_rejects_missing_primes() {
        let ctx = LegendreContext::new(100);
        let n = ctx.root_primes().len();
        assert!(phi(1000, n, &ctx).is_ok());
        assert!(matches!(
            phi(1000, n + 1, &ctx),
            Err(Error::NotEnoughPrimes { .. })
        ));
    }

    #[test]
    fn phi_matches_direct_count() {
        let ctx = LegendreContext::new(1 << 20);
        let primes = ctx.root_primes().to_vec();
        for a in 0..12 {
            for x in [0u64, 1, 2, 97, 1000, 30030, 30031, 65537] {
                let direct = (1..=x)
                    .filter(|y| primes[..a].iter().all(|p| y % p != 0))
                    .count() as u64;
                assert_eq!(phi(x, a, &ctx).unwrap(), direct, "phi({x}, {a})");
            }
        }
    }

    #[test]
    fn pi_point_known_values() {
        assert_eq!(pi_point(1).unwrap(), 0);
        assert_eq!(pi_point(2).unwrap(), 1);
        assert_eq!(pi_point(3).unwrap(), 2);
        assert_eq!(pi_point(4).unwrap(), 2);
        assert_eq!(pi_point(100).unwrap(), 25);
        assert_eq!(pi_point(1_000_000).unwrap(), 78_498);
    }

    #[test]
    fn pi_point_rejects_zero() {
        assert!(matches!(pi_point(0), Err(Error::ZeroArgument)));
    }

    #[test]
    fn memo_cutoff_does_not_change_results() {
        let x = 3_000_000;
        let a = LegendreContext::with_memo_cutoff(x, 0);
        let b = LegendreContext::with_memo_cutoff(x, u64::MAX);
        assert_eq!(pi_point_with(x, &a).unwrap(), pi_point_with(x, &b).unwrap());
    }
}
