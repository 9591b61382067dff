//! Scans the same range with different shard counts and confirms the
//! reports agree.

use std::time::Instant;

use pi_formula::scanner::Scanner;

fn main() -> pi_formula::Result<()> {
    let hi = 5_000_000;
    let mut reference = None;
    for shards in [1, 2, 4, 8, 16] {
        let started = Instant::now();
        let report = Scanner::new().with_shards(shards).verify_theorem3(67, hi)?;
        println!(
            "{shards:>2} shards: {} points in {:.2?}",
            report.points.len(),
            started.elapsed()
        );
        let reference = reference.get_or_insert_with(|| report.points.clone());
        assert_eq!(*reference, report.points);
    }
    Ok(())
}
