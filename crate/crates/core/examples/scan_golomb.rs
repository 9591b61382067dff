//! Streams every n in [lo, hi) where pi(n) divides n, with the closed form
//! n / floor(ln n - 1/2) evaluated beside the true count.
//!
//! cargo run --release --example scan_golomb -- 1 100000

use pi_formula::prime_engine::pi_point;
use pi_formula::scanner::scan_golomb_points;
use pi_formula::PiCheckpoint;

fn main() -> pi_formula::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<u64>().expect("integer"));
    let lo = args.next().unwrap_or(1).max(1);
    let hi = args.next().unwrap_or(10_000);
    let seed = PiCheckpoint::new(lo - 1, if lo > 1 { pi_point(lo - 1)? } else { 0 });
    for p in scan_golomb_points(lo, hi, seed)? {
        let p = p?;
        let closed = p.theorem3_val.map_or("-".to_string(), |v| v.to_string());
        println!(
            "n={:<9} pi={:<7} ratio={:<3} closed form={closed}",
            p.n, p.pi_n, p.k
        );
    }
    Ok(())
}
