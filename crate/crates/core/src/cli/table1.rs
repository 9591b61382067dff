//! The published table of `(n, π(n))` for every `67 <= n < 4000` with
//! `π(n) | n`, and the point-for-point comparison against a live scan.
//!
//! Only the first two printed columns are stored. The third column's header
//! formula `⌊n/(ln n − 1/2)⌋` does not reproduce its own printed values, so
//! the closed form `n / ⌊ln n − 1/2⌋` is recomputed live instead.

use std::fmt;

use crate::formula::GolombPoint;

pub const TABLE1_LO: u64 = 67;
pub const TABLE1_HI: u64 = 4000;

pub const TABLE1: [(u64, u64); 22] = [
    (96, 24),
    (100, 25),
    (120, 30),
    (330, 66),
    (335, 67),
    (340, 68),
    (350, 70),
    (355, 71),
    (360, 72),
    (1008, 168),
    (1080, 180),
    (1092, 182),
    (1116, 186),
    (1122, 187),
    (1128, 188),
    (1134, 189),
    (3059, 437),
    (3066, 438),
    (3073, 439),
    (3080, 440),
    (3087, 441),
    (3094, 442),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowDiff {
    /// The fixture lists `n` but the scan found no Golomb point there.
    MissingPoint { n: u64, fixture_pi: u64 },
    /// The scan found a Golomb point the fixture does not list.
    ExtraPoint { n: u64, pi: u64 },
    /// Same `n`, different `π(n)`.
    CountMismatch {
        n: u64,
        fixture_pi: u64,
        scanned_pi: u64,
    },
    /// `n / ⌊ln n − 1/2⌋` differs from `π(n)`.
    FormulaMismatch {
        n: u64,
        pi: u64,
        theorem3: Option<u64>,
    },
}

impl RowDiff {
    /// Whether the discrepancy points at the fixture rather than the code.
    pub fn is_fixture_problem(&self) -> bool {
        !matches!(self, RowDiff::FormulaMismatch { .. })
    }
}

impl fmt::Display for RowDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowDiff::MissingPoint { n, fixture_pi } => {
                write!(
                    f,
                    "missing point: fixture row n={n} pi={fixture_pi} not found by scan"
                )
            }
            RowDiff::ExtraPoint { n, pi } => {
                write!(f, "extra point found: n={n} pi={pi} is not in the fixture")
            }
            RowDiff::CountMismatch {
                n,
                fixture_pi,
                scanned_pi,
            } => write!(
                f,
                "pi mismatch at n={n}: fixture {fixture_pi}, scanned {scanned_pi}"
            ),
            RowDiff::FormulaMismatch { n, pi, theorem3 } => match theorem3 {
                Some(v) => write!(f, "formula mismatch at n={n}: pi={pi}, n/floor={v}"),
                None => write!(
                    f,
                    "formula mismatch at n={n}: pi={pi}, floor does not divide n"
                ),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableComparison {
    pub rows: usize,
    pub matched: usize,
    pub diffs: Vec<RowDiff>,
}

impl TableComparison {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty() && self.matched == self.rows
    }
}

/// Compares scanned points with fixture rows; both must be ascending in `n`.
pub fn compare_with_fixture(points: &[GolombPoint], fixture: &[(u64, u64)]) -> TableComparison {
    let mut diffs = Vec::new();
    let mut matched = 0;
    let (mut i, mut j) = (0, 0);
    while i < points.len() || j < fixture.len() {
        match (points.get(i), fixture.get(j)) {
            (Some(p), Some(&(n, pi))) if p.n == n => {
                let mut ok = true;
                if p.pi_n != pi {
                    ok = false;
                    diffs.push(RowDiff::CountMismatch {
                        n,
                        fixture_pi: pi,
                        scanned_pi: p.pi_n,
                    });
                }
                if p.theorem3_val != Some(p.pi_n) {
                    ok = false;
                    diffs.push(RowDiff::FormulaMismatch {
                        n,
                        pi: p.pi_n,
                        theorem3: p.theorem3_val,
                    });
                }
                matched += usize::from(ok);
                i += 1;
                j += 1;
            }
            (Some(p), Some(&(n, _))) if p.n < n => {
                diffs.push(RowDiff::ExtraPoint { n: p.n, pi: p.pi_n });
                i += 1;
            }
            (Some(p), None) => {
                diffs.push(RowDiff::ExtraPoint { n: p.n, pi: p.pi_n });
                i += 1;
            }
            (_, Some(&(n, pi))) => {
                diffs.push(RowDiff::MissingPoint { n, fixture_pi: pi });
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    TableComparison {
        rows: fixture.len(),
        matched,
        diffs,
    }
}
