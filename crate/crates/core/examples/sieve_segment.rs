//! Sieves one window of integers and lists the primes in it.
//!
//! cargo run --example sieve_segment -- 1000000 1000100

use pi_formula::prime_engine::{BasePrimes, SieveConfig};

fn main() -> pi_formula::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<u64>().expect("integer"));
    let lo = args.next().unwrap_or(90);
    let hi = args.next().unwrap_or(100);
    let base = BasePrimes::for_limit(hi);
    let seg = SieveConfig::default().sieve_segment(lo, hi, &base)?;
    let primes: Vec<u64> = seg.primes().collect();
    println!("{} primes in [{lo}, {hi}): {primes:?}", seg.count());
    Ok(())
}
