//! Binary fixed-point reals on top of `BigInt`, just enough to evaluate
//! `ln n`, `e^{j/2}` and a few rational combinations of them far past
//! double precision.
//!
//! A [`Real`] at precision `p` carries `p + GUARD_BITS` fractional bits and
//! is accurate to better than `2^-p` for the magnitudes used here (values
//! below `2^64`). Decisions are only taken when the quantity is farther than
//! `2^-(p - SLACK_BITS)` from the boundary; otherwise the caller sees `None`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Precision used for the first extended re-evaluation.
pub const BASE_PRECISION: u32 = 160;
/// Precision used to confirm that widening does not change a decision.
pub const WIDE_PRECISION: u32 = 224;

const GUARD_BITS: u32 = 64;
/// Headroom for error growth through multiplication by 64-bit integers and
/// one division; a decision at precision `p` therefore has `p - 72` bits
/// of margin (88 bits at the base precision).
const SLACK_BITS: u32 = 72;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Real {
    mant: BigInt,
    frac_bits: u32,
    prec: u32,
}

impl Real {
    fn raw(mant: BigInt, prec: u32) -> Self {
        Real {
            mant,
            frac_bits: prec + GUARD_BITS,
            prec,
        }
    }

    pub fn from_u64(n: u64, prec: u32) -> Self {
        Self::raw(BigInt::from(n) << (prec + GUARD_BITS), prec)
    }

    /// `num / 2^shift` exactly.
    pub fn dyadic(num: i64, shift: u32, prec: u32) -> Self {
        let w = prec + GUARD_BITS;
        assert!(shift <= w);
        Self::raw(BigInt::from(num) << (w - shift), prec)
    }

    /// Natural logarithm of a positive integer.
    pub fn ln(n: u64, prec: u32) -> Self {
        assert!(n > 0, "ln(0)");
        let w = prec + GUARD_BITS;
        let m = 63 - n.leading_zeros();
        // n = 2^m * r with r in [1, 2); ln r = 2 atanh((n - 2^m) / (n + 2^m)).
        let pow2 = 1u128 << m;
        let num = BigInt::from(u128::from(n) - pow2);
        let den = BigInt::from(u128::from(n) + pow2);
        let atanh = atanh_ratio(&num, &den, w);
        let mant = ln2(w) * BigInt::from(m) + (atanh << 1);
        Self::raw(mant, prec)
    }

    /// `e^{j/2}` for a non-negative integer `j`.
    pub fn exp_half(j: u64, prec: u32) -> Self {
        let w = prec + GUARD_BITS;
        let root = exp_half_unit(w);
        let mut acc = BigInt::one() << w;
        let mut base = root;
        let mut e = j;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base) >> w;
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base) >> w;
            }
        }
        Self::raw(acc, prec)
    }

    fn check(&self, other: &Real) {
        assert_eq!(self.frac_bits, other.frac_bits, "precision mismatch");
    }

    pub fn sub(&self, other: &Real) -> Real {
        self.check(other);
        Self::raw(&self.mant - &other.mant, self.prec)
    }

    pub fn mul_u64(&self, k: u64) -> Real {
        Self::raw(&self.mant * BigInt::from(k), self.prec)
    }

    pub fn div(&self, other: &Real) -> Real {
        self.check(other);
        assert!(!other.mant.is_zero(), "division by zero");
        Self::raw((&self.mant << self.frac_bits) / &other.mant, self.prec)
    }

    fn tolerance(&self) -> BigInt {
        BigInt::one() << (self.frac_bits - (self.prec - SLACK_BITS))
    }

    /// Sign of the value, or `None` if it is within the error margin of zero.
    pub fn sign(&self) -> Option<Ordering> {
        let tol = self.tolerance();
        if self.mant > tol {
            Some(Ordering::Greater)
        } else if self.mant < -tol {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    /// `⌊value⌋`, or `None` if the value is within the error margin of an integer.
    pub fn floor(&self) -> Option<i128> {
        let one = BigInt::one() << self.frac_bits;
        let floor = self.mant.clone() >> self.frac_bits; // arithmetic shift = floor
        let frac = &self.mant - (&floor << self.frac_bits);
        let tol = self.tolerance();
        if frac <= tol || (&one - &frac) <= tol {
            return None;
        }
        floor.to_i128()
    }

    /// Nearest `f64`, for display and tests.
    pub fn to_f64(&self) -> f64 {
        let shift = self.frac_bits.saturating_sub(60);
        let top = (&self.mant >> shift).to_f64().unwrap_or(f64::NAN);
        top / 2f64.powi((self.frac_bits - shift) as i32)
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }
}

/// `atanh(num / den)` scaled by `2^w`, for `0 <= num / den <= 1/3`.
fn atanh_ratio(num: &BigInt, den: &BigInt, w: u32) -> BigInt {
    if num.is_zero() {
        return BigInt::zero();
    }
    let z = (num << w) / den;
    let z2 = ((num * num) << w) / (den * den);
    let mut power = z;
    let mut sum = BigInt::zero();
    let mut i = 1u64;
    while !power.is_zero() {
        sum += &power / BigInt::from(i);
        power = (&power * &z2) >> w;
        i += 2;
    }
    sum
}

fn ln2(w: u32) -> BigInt {
    atanh_ratio(&BigInt::one(), &BigInt::from(3), w) << 1
}

/// `e^{1/2} = Σ 1 / (2^i i!)` scaled by `2^w`.
fn exp_half_unit(w: u32) -> BigInt {
    let mut term = BigInt::one() << w;
    let mut sum = BigInt::zero();
    let mut i = 1u64;
    while !term.is_zero() {
        sum += &term;
        term /= BigInt::from(2 * i);
        i += 1;
    }
    sum
}

/// `⌊ln n − 1/2⌋` straight from the logarithm, at the given precision.
pub fn floor_ln_minus_half(n: u64, prec: u32) -> Option<i128> {
    Real::ln(n, prec).sub(&Real::dyadic(1, 1, prec)).floor()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_matches_f64() {
        for n in [1u64, 2, 3, 10, 96, 1 << 40, u64::MAX] {
            let x = Real::ln(n, BASE_PRECISION).to_f64();
            assert!((x - (n as f64).ln()).abs() < 1e-14 * x.max(1.0), "ln {n}");
        }
    }

    #[test]
    fn ln2_digits() {
        // ln 2 = 0.693147180559945309417232121458176568...
        let v = Real::ln(2, BASE_PRECISION);
        let scaled = v.mul_u64(1_000_000_000_000_000_000).floor().unwrap();
        assert_eq!(scaled, 693_147_180_559_945_309);
    }

    #[test]
    fn exp_half_digits() {
        // e = 2.718281828459045235360287...
        let e = Real::exp_half(2, BASE_PRECISION);
        assert_eq!(
            e.mul_u64(1_000_000_000_000_000_000).floor().unwrap(),
            2_718_281_828_459_045_235
        );
        assert_eq!(Real::exp_half(0, BASE_PRECISION).to_f64(), 1.0);
    }

    #[test]
    fn exp_and_ln_are_inverse() {
        for j in [1u64, 5, 9, 15, 41, 87] {
            let e = Real::exp_half(j, WIDE_PRECISION);
            let x = e.to_f64();
            assert!(((x.ln() * 2.0) - j as f64).abs() < 1e-12, "j = {j}");
        }
    }

    #[test]
    fn floor_near_integers_is_refused() {
        let three = Real::from_u64(3, BASE_PRECISION);
        assert_eq!(three.floor(), None);
        assert_eq!(three.sign(), Some(Ordering::Greater));
        assert_eq!(three.sub(&three).sign(), None);
        let third = Real::from_u64(1, BASE_PRECISION).div(&Real::from_u64(3, BASE_PRECISION));
        assert_eq!(third.floor(), Some(0));
    }

    #[test]
    fn floor_ln_small() {
        assert_eq!(floor_ln_minus_half(1, BASE_PRECISION), Some(-1));
        assert_eq!(floor_ln_minus_half(12, BASE_PRECISION), Some(1));
        assert_eq!(floor_ln_minus_half(13, BASE_PRECISION), Some(2));
        assert_eq!(floor_ln_minus_half(96, BASE_PRECISION), Some(4));
    }
}
