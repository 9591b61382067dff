mod common;

use pi_formula::prime_engine::{
    phi, pi_point, pi_stream, pi_stream_with, sieve_segment, BasePrimes, LegendreContext,
    PiCheckpoint, SieveConfig,
};
use proptest::prelude::*;

use common::{is_prime_trial, pi_table_trial};

#[test]
fn sieve_matches_trial_division_to_ten_thousand() {
    let base = BasePrimes::for_limit(10_001);
    let seg = sieve_segment(0, 10_001, &base).unwrap();
    for n in 0..=10_000 {
        assert_eq!(seg.is_prime(n), is_prime_trial(n), "n = {n}");
    }
}

#[test]
fn step_property_against_sieve() {
    let base = BasePrimes::for_limit(200_001);
    let seg = sieve_segment(1, 200_001, &base).unwrap();
    let mut prev = PiCheckpoint::ORIGIN;
    for c in pi_stream(PiCheckpoint::ORIGIN, 200_000).unwrap() {
        assert_eq!(c.n, prev.n + 1);
        let step = c.count - prev.count;
        assert!(step <= 1);
        assert_eq!(step == 1, seg.is_prime(c.n), "n = {}", c.n);
        assert!(c.is_plausible());
        prev = c;
    }
}

#[test]
fn stream_agrees_with_trial_table() {
    let table = pi_table_trial(20_000);
    for c in pi_stream(PiCheckpoint::ORIGIN, 20_000).unwrap() {
        assert_eq!(c.count, table[c.n as usize]);
    }
}

#[test]
fn powers_of_ten_agree() {
    let marks: Vec<u64> = (1..=7).map(|k| 10u64.pow(k)).collect();
    let mut expected = Vec::new();
    let mut it = marks.iter().peekable();
    for c in pi_stream(PiCheckpoint::ORIGIN, 10_000_000).unwrap() {
        if it.peek() == Some(&&c.n) {
            expected.push(c.count);
            it.next();
        }
    }
    assert_eq!(expected, vec![4, 25, 168, 1229, 9592, 78498, 664579]);
    for (x, want) in marks.iter().zip(&expected) {
        assert_eq!(pi_point(*x).unwrap(), *want, "x = {x}");
    }
}

#[test]
fn root_primes_are_complete() {
    let ctx = LegendreContext::new(1_000_000_000);
    let roots = ctx.root_primes();
    assert!(roots.windows(2).all(|w| w[0] < w[1]));
    let bound = ctx.root_bound();
    let base = BasePrimes::for_limit(bound + 1);
    let seg = sieve_segment(0, bound + 1, &base).unwrap();
    assert_eq!(roots, seg.primes().collect::<Vec<_>>().as_slice());
}

#[test]
fn phi_inclusion_exclusion() {
    let ctx = LegendreContext::new(10_000);
    // 100 - 50 - 33 + 16
    assert_eq!(phi(100, 2, &ctx).unwrap(), 33);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pi_point_agrees_with_stream(x in 1u64..300_000) {
        let streamed = pi_stream(PiCheckpoint::ORIGIN, x).unwrap().last().map_or(0, |c| c.count);
        prop_assert_eq!(pi_point(x).unwrap(), streamed);
    }

    #[test]
    fn phi_zero_is_identity(x in 0u64..u64::MAX / 2) {
        let ctx = LegendreContext::new(100);
        prop_assert_eq!(phi(x, 0, &ctx).unwrap(), x);
    }

    #[test]
    fn segments_partition_counts(lo in 0u64..50_000, len in 1u64..5_000, split in 0u64..5_000) {
        let hi = lo + len;
        let mid = lo + split % len;
        let base = BasePrimes::for_limit(hi);
        let whole = sieve_segment(lo, hi, &base).unwrap().count();
        let left = if mid > lo { sieve_segment(lo, mid, &base).unwrap().count() } else { 0 };
        let right = sieve_segment(mid, hi, &base).unwrap().count();
        prop_assert_eq!(whole, left + right);
    }

    #[test]
    fn stream_independent_of_segment_size(bits in 1u64..64, limit in 2u64..3_000) {
        let a: Vec<_> = pi_stream_with(PiCheckpoint::ORIGIN, limit, SieveConfig::with_segment_bits(bits)).unwrap().collect();
        let b: Vec<_> = pi_stream(PiCheckpoint::ORIGIN, limit).unwrap().collect();
        prop_assert_eq!(a, b);
    }
}
