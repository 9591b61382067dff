use serde::{Deserialize, Serialize};

use super::bounds::BOUNDS_MIN_N;
use super::extended::{Real, BASE_PRECISION, WIDE_PRECISION};
use super::thresholds::ThresholdTable;
use crate::error::{Error, Result};

/// `n / ⌊ln n − 1/2⌋` when the floor divides `n`, `None` otherwise.
pub fn theorem3_formula(n: u64, table: &ThresholdTable) -> Result<Option<u64>> {
    if n < BOUNDS_MIN_N {
        return Err(Error::BelowDomain {
            n,
            min: BOUNDS_MIN_N,
        });
    }
    let k = u64::from(table.floor_log_shift(n)?);
    Ok(n.is_multiple_of(k).then(|| n / k))
}

/// `⌊n / (ln n − 1/2)⌋`, the expression printed in the header of the
/// published table. Computed at two fixed-point precisions that must agree.
pub fn table_variant_formula(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::BelowDomain { n, min: 2 });
    }
    let eval = |prec| {
        let denom = Real::ln(n, prec).sub(&Real::dyadic(1, 1, prec));
        Real::from_u64(n, prec).div(&denom).floor()
    };
    match (eval(BASE_PRECISION), eval(WIDE_PRECISION)) {
        (Some(a), Some(b)) if a == b => u64::try_from(a).map_err(|_| Error::Overflow {
            what: "table variant quotient",
        }),
        _ => Err(Error::Undecidable {
            what: format!("floor of {n} / (ln {n} - 1/2)"),
        }),
    }
}

/// One integer `n` with `π(n) | n`, evaluated against both formula readings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GolombPoint {
    pub n: u64,
    pub pi_n: u64,
    /// The integer ratio `n / π(n)`.
    pub k: u64,
    /// `⌊ln n − 1/2⌋`
    pub floor_val: u32,
    /// `n / floor_val`; absent below the domain or when the floor does not divide `n`.
    pub theorem3_val: Option<u64>,
    pub table_variant_val: u64,
    /// `None` below the domain boundary (`n < 67`).
    pub theorem3_match: Option<bool>,
    pub table_variant_match: Option<bool>,
}

impl GolombPoint {
    /// Evaluates `n`; returns `None` when `π(n)` is zero or does not divide `n`.
    pub fn evaluate(n: u64, pi_n: u64, table: &ThresholdTable) -> Result<Option<GolombPoint>> {
        if pi_n == 0 || !n.is_multiple_of(pi_n) {
            return Ok(None);
        }
        let floor_val = table.floor_log_shift(n)?;
        let table_variant_val = table_variant_formula(n)?;
        let in_domain = n >= BOUNDS_MIN_N;
        let theorem3_val = if in_domain {
            theorem3_formula(n, table)?
        } else {
            None
        };
        Ok(Some(GolombPoint {
            n,
            pi_n,
            k: n / pi_n,
            floor_val,
            theorem3_val,
            table_variant_val,
            theorem3_match: in_domain.then_some(theorem3_val == Some(pi_n)),
            table_variant_match: in_domain.then_some(table_variant_val == pi_n),
        }))
    }

    pub fn in_domain(&self) -> bool {
        self.n >= BOUNDS_MIN_N
    }

    /// In-domain point where the exact formula disagrees with `π(n)`.
    pub fn is_failure(&self) -> bool {
        self.theorem3_match == Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> &'static ThresholdTable {
        ThresholdTable::standard()
    }

    #[test]
    fn theorem3_table_rows() {
        assert_eq!(theorem3_formula(96, table()).unwrap(), Some(24));
        assert_eq!(theorem3_formula(100, table()).unwrap(), Some(25));
        assert_eq!(theorem3_formula(1008, table()).unwrap(), Some(168));
        assert_eq!(theorem3_formula(3094, table()).unwrap(), Some(442));
    }

    #[test]
    fn theorem3_not_divisible() {
        // ⌊ln 97 − 1/2⌋ = 4
        assert_eq!(theorem3_formula(97, table()).unwrap(), None);
    }

    #[test]
    fn theorem3_domain() {
        assert!(matches!(
            theorem3_formula(66, table()),
            Err(Error::BelowDomain { n: 66, min: 67 })
        ));
    }

    #[test]
    fn table_variant_values() {
        // values from an independent 200-bit mpmath evaluation
        assert_eq!(table_variant_formula(96).unwrap(), 23);
        assert_eq!(table_variant_formula(3094).unwrap(), 410);
        assert_eq!(table_variant_formula(2).unwrap(), 10);
        assert_eq!(table_variant_formula(100).unwrap(), 24);
        assert!(table_variant_formula(1).is_err());
    }

    #[test]
    fn point_in_domain() {
        let p = GolombPoint::evaluate(96, 24, table()).unwrap().unwrap();
        assert_eq!(p.k, 4);
        assert_eq!(p.floor_val, 4);
        assert_eq!(p.theorem3_val, Some(24));
        assert_eq!(p.table_variant_val, 23);
        assert_eq!(p.theorem3_match, Some(true));
        assert_eq!(p.table_variant_match, Some(false));
        assert!(!p.is_failure());
    }

    #[test]
    fn point_below_domain() {
        let p = GolombPoint::evaluate(27, 9, table()).unwrap().unwrap();
        assert_eq!(p.k, 3);
        assert_eq!(p.theorem3_val, None);
        assert_eq!(p.theorem3_match, None);
        assert_eq!(p.table_variant_match, None);
        assert!(!p.is_failure());
    }

    #[test]
    fn non_points() {
        assert_eq!(GolombPoint::evaluate(1, 0, table()).unwrap(), None);
        assert_eq!(GolombPoint::evaluate(97, 25, table()).unwrap(), None);
    }

    #[test]
    fn wrong_count_is_a_failure_not_a_panic() {
        // 100 with a pretend count of 20: ratio 5, floor 4
        let p = GolombPoint::evaluate(100, 20, table()).unwrap().unwrap();
        assert_eq!(p.theorem3_match, Some(false));
        assert!(p.is_failure());
    }
}
