//! Finds the least n with n = k * pi(n) for a run of k.

use pi_formula::scanner::first_attainment;

fn main() -> pi_formula::Result<()> {
    for k in 2..=14 {
        match first_attainment(k, 10_000_000)? {
            Some(n) => println!("k={k:<2} n={n}"),
            None => println!("k={k:<2} not found below 10^7"),
        }
    }
    Ok(())
}
