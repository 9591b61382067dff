//! Rescans 67 <= n < 4000 and compares the result with the published rows.

use pi_formula::cli::table1::{compare_with_fixture, TABLE1, TABLE1_HI, TABLE1_LO};
use pi_formula::scanner::verify_theorem3;

fn main() -> pi_formula::Result<()> {
    let report = verify_theorem3(TABLE1_LO, TABLE1_HI)?;
    let cmp = compare_with_fixture(&report.points, &TABLE1);
    for d in &cmp.diffs {
        println!("{d}");
    }
    println!("{}/{} rows match", cmp.matched, cmp.rows);
    for p in &report.points {
        println!(
            "{:>5} {:>4}  n/floor = {:?}  floor(n/(ln n - 1/2)) = {}",
            p.n, p.pi_n, p.theorem3_val, p.table_variant_val
        );
    }
    Ok(())
}
