//! Checks n/(ln n - 1/2) < pi(n) < n/(ln n - 3/2) over a range, then shows
//! the individual bound values at one point.
//!
//! cargo run --release --example check_bounds -- 67 10000000

use pi_formula::formula::rosser_schoenfeld;
use pi_formula::prime_engine::pi_point;
use pi_formula::scanner::verify_bounds_range;

fn main() -> pi_formula::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<u64>().expect("integer"));
    let lo = args.next().unwrap_or(67);
    let hi = args.next().unwrap_or(1_000_000);
    let report = verify_bounds_range(lo, hi)?;
    println!(
        "[{lo}, {hi}): {} checked, {} violations",
        report.bounds_checked,
        report.bounds_violations.len()
    );

    let n = hi - 1;
    let r = rosser_schoenfeld(n, pi_point(n)?)?;
    println!("n={n}: {:.3} < {} < {:.3}", r.lower, r.pi_n, r.upper);
    println!(
        "ratio {:.6} in ({:.6}, {:.6})",
        r.ratio, r.ratio_lo, r.ratio_hi
    );
    Ok(())
}
