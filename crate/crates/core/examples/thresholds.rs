//! Prints the integer breakpoints of floor(ln n - 1/2) and uses them to
//! evaluate the floor without floating point.

use pi_formula::formula::{floor_log_shift, ThresholdTable};

fn main() -> pi_formula::Result<()> {
    let table = ThresholdTable::standard();
    for &(k, t) in table.entries().iter().take(12) {
        println!("floor(ln n - 1/2) = {k:<2} from n = {t}");
    }
    for n in [96, 3094, 1_000_000, u64::MAX] {
        println!("floor(ln {n} - 1/2) = {}", floor_log_shift(n, table)?);
    }
    Ok(())
}
