//! Scalar backends and the tolerance policy.
//!
//! Every geometric routine in this crate is generic over [`Scalar`]. Two
//! backends are provided: [`Rational`] (exact, arbitrary precision) and `f64`.
//! The exact backend compares structurally; the float backend compares through
//! a [`ToleranceProfile`]. Conversions between the two are always explicit.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, always stored reduced with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `n/d` in lowest terms; the sign is carried by the numerator.
    pub fn new(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let d = d.into();
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(n.into(), d)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Exact square root. Fails with [`Error::NotPerfectSquare`] when the
    /// root is irrational and [`Error::NegativeSqrt`] for negative input.
    pub fn sqrt_exact(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::NegativeSqrt);
        }
        let n = self.numer();
        let d = self.denom();
        let rn = n.sqrt();
        let rd = d.sqrt();
        if &(&rn * &rn) == n && &(&rd * &rd) == d {
            // n/d is reduced, so rn/rd is too
            Ok(Rational(BigRational::new_raw(rn, rd)))
        } else {
            Err(Error::NotPerfectSquare)
        }
    }

    /// Nearest `f64`. Large numerators and denominators are handled without
    /// overflowing to infinity.
    pub fn to_f64(&self) -> f64 {
        if let (Some(n), Some(d)) = (self.numer().to_f64(), self.denom().to_f64()) {
            if n.is_finite() && d.is_finite() && n.abs() < 9.0e15 && d < 9.0e15 {
                return n / d;
            }
        }
        // scale both to ~60 significant bits before dividing
        let nbits = self.numer().bits() as i64;
        let dbits = self.denom().bits() as i64;
        let shift_n = (nbits - 60).max(0);
        let shift_d = (dbits - 60).max(0);
        let n = (self.numer() >> shift_n as usize).to_f64().unwrap_or(f64::NAN);
        let d = (self.denom() >> shift_d as usize).to_f64().unwrap_or(f64::NAN);
        n / d * 2f64.powi((shift_n - shift_d) as i32)
    }

    /// Exact conversion of a finite float.
    pub fn from_f64(x: f64) -> Result<Self> {
        BigRational::from_float(x)
            .map(Rational)
            .ok_or_else(|| Error::NonFinite(x.to_string()))
    }
}

/// Shorthand for `Rational::new`.
pub fn make_rational(n: i64, d: i64) -> Result<Rational> {
    Rational::new(n, d)
}

impl fmt::Display for Rational {
    /// Always `p/q`, including integers (`36/1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p`, `p/q` and plain decimals such as `-2.375`, all exactly.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(s.to_string());
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            return Rational::new(n, d);
        }
        if let Some((int, frac)) = t.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = int.starts_with('-');
            let int_digits = int.trim_start_matches(['-', '+']);
            if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let digits = format!("{int_digits}{frac}");
            let mut n: BigInt = digits.parse().map_err(|_| bad())?;
            if negative {
                n = -n;
            }
            let d = num_traits::pow(BigInt::from(10), frac.len());
            return Rational::new(n, d);
        }
        let n: BigInt = t.parse().map_err(|_| bad())?;
        Ok(Rational::from_integer(n))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// Relative/absolute tolerance used by every approximate comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceProfile {
    rel_eps: f64,
    abs_eps: f64,
}

impl ToleranceProfile {
    pub const DEFAULT_REL_EPS: f64 = 1e-9;
    pub const DEFAULT_ABS_EPS: f64 = 1e-12;

    pub fn new(rel_eps: f64, abs_eps: f64) -> Result<Self> {
        if !(rel_eps > 0.0 && abs_eps > 0.0) || !rel_eps.is_finite() || !abs_eps.is_finite() {
            return Err(Error::InvalidTolerance);
        }
        Ok(ToleranceProfile { rel_eps, abs_eps })
    }

    pub fn rel_eps(&self) -> f64 {
        self.rel_eps
    }

    pub fn abs_eps(&self) -> f64 {
        self.abs_eps
    }
}

impl Default for ToleranceProfile {
    fn default() -> Self {
        ToleranceProfile {
            rel_eps: Self::DEFAULT_REL_EPS,
            abs_eps: Self::DEFAULT_ABS_EPS,
        }
    }
}

/// `|x - y| <= abs_eps + rel_eps * max(|x|, |y|)`.
pub fn approx_eq(x: f64, y: f64, tol: &ToleranceProfile) -> Result<bool> {
    if !x.is_finite() {
        return Err(Error::NonFinite(x.to_string()));
    }
    if !y.is_finite() {
        return Err(Error::NonFinite(y.to_string()));
    }
    Ok((x - y).abs() <= tol.abs_eps + tol.rel_eps * x.abs().max(y.abs()))
}

/// Whether `residual` counts as zero at magnitude `scale`: exactly zero for
/// the exact backend, `|residual| <= abs_eps + rel_eps * |scale|` for floats.
pub fn negligible<S: Scalar>(residual: &S, scale: &S, tol: &ToleranceProfile) -> bool {
    if S::EXACT {
        residual.is_zero()
    } else {
        let r = residual.to_f64().abs();
        r.is_finite() && r <= tol.abs_eps + tol.rel_eps * scale.to_f64().abs()
    }
}

/// Number type shared by the exact and floating-point backends.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Serialize
    + Send
    + Sync
    + 'static
{
    /// True for backends whose comparisons are structural.
    const EXACT: bool;
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// Explicit conversion from an exact value.
    fn from_rational(r: &Rational) -> Self;
    fn to_f64(&self) -> f64;
    fn abs(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_finite(&self) -> bool;
    /// Square root when representable in the backend (rationals: perfect squares only).
    fn sqrt_checked(&self) -> Option<Self>;
    /// Equality for the exact backend, [`approx_eq`] for floats.
    fn close_to(&self, other: &Self, tol: &ToleranceProfile) -> bool;

    fn half(&self) -> Self {
        self.clone() / Self::from_i64(2)
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn sign(&self) -> Ordering {
        self.partial_cmp(&Self::zero()).unwrap_or(Ordering::Equal)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;
    const NAME: &'static str = "exact";

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }
    fn abs(&self) -> Self {
        Rational::abs(self)
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_finite(&self) -> bool {
        true
    }
    fn sqrt_checked(&self) -> Option<Self> {
        self.sqrt_exact().ok()
    }
    fn close_to(&self, other: &Self, _tol: &ToleranceProfile) -> bool {
        self == other
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;
    const NAME: &'static str = "float";

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
    fn sqrt_checked(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }
    fn close_to(&self, other: &Self, tol: &ToleranceProfile) -> bool {
        approx_eq(*self, *other, tol).unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn make_rational_reduces() {
        let r = make_rational(2, 4).unwrap();
        assert_eq!((r.numer().clone(), r.denom().clone()), (1.into(), 2.into()));
        let r = make_rational(3, -6).unwrap();
        assert_eq!(r.to_string(), "-1/2");
        assert_eq!(make_rational(0, 7).unwrap().to_string(), "0/1");
        assert_eq!(make_rational(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn sqrt_exact_cases() {
        assert_eq!(q(9, 4).sqrt_exact().unwrap(), q(3, 2));
        assert_eq!(q(2, 1).sqrt_exact(), Err(Error::NotPerfectSquare));
        assert_eq!(q(0, 1).sqrt_exact().unwrap(), q(0, 1));
        assert_eq!(q(-1, 4).sqrt_exact(), Err(Error::NegativeSqrt));
        // numerator square, denominator not
        assert_eq!(q(4, 3).sqrt_exact(), Err(Error::NotPerfectSquare));
    }

    #[test]
    fn approx_eq_cases() {
        let tol = ToleranceProfile::default();
        assert!(approx_eq(1.0, 1.0 + 1e-15, &tol).unwrap());
        assert!(!approx_eq(1.0, 1.1, &tol).unwrap());
        assert!(approx_eq(0.0, 0.0, &tol).unwrap());
        assert!(approx_eq(f64::NAN, 0.0, &tol).is_err());
        assert!(approx_eq(1.0, f64::INFINITY, &tol).is_err());
    }

    #[test]
    fn tolerance_must_be_positive() {
        assert_eq!(ToleranceProfile::new(0.0, 1e-12), Err(Error::InvalidTolerance));
        assert_eq!(ToleranceProfile::new(1e-9, -1.0), Err(Error::InvalidTolerance));
        assert!(ToleranceProfile::new(1e-6, 1e-9).is_ok());
    }

    #[test]
    fn parse_forms() {
        assert_eq!("3".parse::<Rational>().unwrap(), q(3, 1));
        assert_eq!("3/1".parse::<Rational>().unwrap(), q(3, 1));
        assert_eq!("-6/4".parse::<Rational>().unwrap(), q(-3, 2));
        assert_eq!("2.375".parse::<Rational>().unwrap(), q(19, 8));
        assert_eq!("-0.5".parse::<Rational>().unwrap(), q(-1, 2));
        assert_eq!("0.1".parse::<Rational>().unwrap(), q(1, 10));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("1.".parse::<Rational>().is_err());
        assert!("1.2.3".parse::<Rational>().is_err());
    }

    #[test]
    fn to_f64_handles_huge_terms() {
        let big = num_traits::pow(BigInt::from(10), 400);
        let r = Rational::new(&big * BigInt::from(3), &big * BigInt::from(4)).unwrap();
        assert_eq!(r.to_f64(), 0.75);
        let r = Rational::new(num_traits::pow(BigInt::from(7), 500) + 1, num_traits::pow(BigInt::from(7), 499)).unwrap();
        assert!((r.to_f64() - 7.0).abs() < 1e-12);
    }

    #[test]
    fn serde_is_p_over_q() {
        assert_eq!(serde_json::to_string(&q(36, 1)).unwrap(), "\"36/1\"");
        let back: Rational = serde_json::from_str("\"-5/4\"").unwrap();
        assert_eq!(back, q(-5, 4));
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..10_000).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn arithmetic_stays_reduced(x in small_rational(), y in small_rational()) {
            let sum = &x + &y;
            prop_assert_eq!(num_integer::Integer::gcd(sum.numer(), sum.denom()), BigInt::from(1));
            prop_assert!(sum.denom() > &BigInt::from(0));
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.recip().unwrap(), Rational::one());
            }
        }

        #[test]
        fn sqrt_of_square_is_abs(x in small_rational()) {
            prop_assert_eq!((&x * &x).sqrt_exact().unwrap(), x.abs());
        }

        #[test]
        fn approx_eq_symmetric_reflexive(x in -1e6f64..1e6, y in -1e6f64..1e6) {
            let tol = ToleranceProfile::default();
            prop_assert!(approx_eq(x, x, &tol).unwrap());
            prop_assert_eq!(approx_eq(x, y, &tol).unwrap(), approx_eq(y, x, &tol).unwrap());
        }

        #[test]
        fn display_parse_roundtrip(x in small_rational()) {
            prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
        }
    }
}
