//! Independent oracles used by the integration tests. Nothing here touches
//! the sieve or the Legendre code.

#![allow(dead_code)]

pub fn is_prime_trial(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `counts[n] = π(n)` for `n <= limit`, by trial division.
pub fn pi_table_trial(limit: u64) -> Vec<u64> {
    let mut counts = Vec::with_capacity(limit as usize + 1);
    let mut c = 0;
    for n in 0..=limit {
        if is_prime_trial(n) {
            c += 1;
        }
        counts.push(c);
    }
    counts
}

/// Naive enumeration of `n` in `[lo, hi)` with `π(n) >= 1` and `π(n) | n`.
pub fn golomb_naive(lo: u64, hi: u64) -> Vec<(u64, u64)> {
    let counts = pi_table_trial(hi);
    (lo..hi)
        .filter_map(|n| {
            let c = counts[n as usize];
            (c > 0 && n % c == 0).then_some((n, c))
        })
        .collect()
}

/// π(n) by trial division of every integer up to n.
pub fn pi_trial(n: u64) -> u64 {
    (2..=n).filter(|&m| is_prime_trial(m)).count() as u64
}
