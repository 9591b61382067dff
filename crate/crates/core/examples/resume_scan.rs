//! Runs a scan that writes a checkpoint after every piece. Running it again
//! with the same file picks up after the last checkpoint.
//!
//! cargo run --release --example resume_scan -- /tmp/scan.ckpt 50000000

use pi_formula::scanner::{CheckpointLog, Scanner};

fn main() -> pi_formula::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| "scan.ckpt".into());
    let hi: u64 = args
        .next()
        .and_then(|s| s.parse().ok())
        .unwrap_or(20_000_000);

    let mut log = CheckpointLog::open(&path)?;
    match log.last() {
        Some(c) => println!("resuming after n={} (pi={})", c.n, c.count),
        None => println!("fresh scan"),
    }
    let report = Scanner::new().verify_theorem3_resumable(67, hi, &mut log)?;
    println!(
        "[{}, {}): {} new points, {} failures, last checkpoint {:?}",
        report.range_lo,
        report.range_hi,
        report.points.len(),
        report.failures.len(),
        report.checkpoint
    );
    Ok(())
}
