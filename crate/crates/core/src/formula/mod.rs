//! Exact evaluation of `⌊ln n − 1/2⌋`, the two readings of the closed-form
//! count, and the explicit bounds that make it work for `n >= 67`.

mod bounds;
pub mod extended;
mod golomb;
mod thresholds;

pub use bounds::{ratio_check, rosser_schoenfeld, BoundsResult, BOUNDS_MIN_N, NEAR_BOUNDARY};
pub use golomb::{table_variant_formula, theorem3_formula, GolombPoint};
pub use thresholds::{build_thresholds, floor_log_shift, ThresholdTable, MAX_K};
