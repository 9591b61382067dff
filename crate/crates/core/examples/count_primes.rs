//! Counts primes two ways: Legendre's formula at a single point, and the
//! segmented sieve as a running stream.
//!
//! cargo run --release --example count_primes -- 10000000

use pi_formula::prime_engine::{pi_point, pi_stream, PiCheckpoint};

fn main() -> pi_formula::Result<()> {
    let x: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1_000_000);
    println!("pi({x}) = {} (legendre)", pi_point(x)?);

    let last = pi_stream(PiCheckpoint::ORIGIN, x)?
        .last()
        .unwrap_or(PiCheckpoint::ORIGIN);
    println!("pi({}) = {} (sieve stream)", last.n, last.count);
    Ok(())
}
