//! Scalar abstraction shared by the series and bound routines.
//!
//! Every routine that only needs field arithmetic is written against
//! [`Scalar`], so the same code evaluates exactly over [`BigRational`] or
//! approximately over `f32`/`f64`. Certified comparisons always go through
//! the rational instantiation.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub trait Scalar: Clone + PartialOrd + Num + fmt::Debug {
    fn from_u64(n: u64) -> Self;
    fn from_biguint(n: &BigUint) -> Self;
    fn to_f64(&self) -> f64;

    fn ratio(num: u64, den: u64) -> Self {
        Self::from_u64(num) / Self::from_u64(den)
    }

    fn powi(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl Scalar for f64 {
    fn from_u64(n: u64) -> Self {
        n as f64
    }
    fn from_biguint(n: &BigUint) -> Self {
        n.to_f64().unwrap_or(f64::INFINITY)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_u64(n: u64) -> Self {
        n as f32
    }
    fn from_biguint(n: &BigUint) -> Self {
        n.to_f32().unwrap_or(f32::INFINITY)
    }
    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }
}

impl Scalar for BigRational {
    fn from_u64(n: u64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_biguint(n: &BigUint) -> Self {
        BigRational::from_integer(BigInt::from(n.clone()))
    }
    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }
}

/// Converts a rational to the nearest-ish `f64`, staying finite-aware for
/// numerators and denominators far beyond the `f64` exponent range.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let sign = if q.is_negative() { -1.0 } else { 1.0 };
    let num = q.numer().abs();
    let den = q.denom().clone();
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    // Scale so the integer quotient carries ~64 significant bits.
    let shift = 64 - (nb - db);
    let quotient = if shift >= 0 {
        (num << shift as usize) / den
    } else {
        num / (den << (-shift) as usize)
    };
    let mantissa = quotient.to_f64().unwrap_or(f64::INFINITY);
    sign * mantissa * 2f64.powi(-(shift as i32))
}

/// Parses a plain decimal literal such as `"2.302786"` into an exact rational.
pub fn decimal(literal: &str) -> BigRational {
    let (negative, body) = match literal.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, literal),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    let digits = format!("{int_part}{frac_part}");
    let numer = BigInt::from_str_radix(&digits, 10).expect("decimal literal");
    let denom = num_traits::pow(BigInt::from(10u32), frac_part.len());
    let q = BigRational::new(numer, denom);
    if negative {
        -q
    } else {
        q
    }
}

pub fn rational_from_biguint(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// Formats a rational as a fixed-point decimal truncated toward zero.
pub fn format_decimal(q: &BigRational, places: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10u32), places);
    let scaled = (q * BigRational::from_integer(scale.clone())).trunc().to_integer();
    let negative = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let padded = format!("{:0>width$}", digits, width = places + 1);
    let (int_part, frac_part) = padded.split_at(padded.len() - places);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// A closed interval `[lo, hi]` known to contain some target quantity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bracket<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Scalar> Bracket<T> {
    pub fn new(lo: T, hi: T) -> Self {
        assert!(lo <= hi, "bracket with lo > hi: {lo:?} > {hi:?}");
        Bracket { lo, hi }
    }

    pub fn point(v: T) -> Self {
        Bracket { lo: v.clone(), hi: v }
    }

    pub fn contains(&self, v: &T) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn strictly_contains(&self, v: &T) -> bool {
        &self.lo < v && v < &self.hi
    }

    pub fn width(&self) -> T {
        self.hi.clone() - self.lo.clone()
    }

    pub fn midpoint(&self) -> T {
        (self.lo.clone() + self.hi.clone()) / T::from_u64(2)
    }

    /// Product of two brackets over nonnegative reals.
    pub fn mul_nonneg(&self, other: &Bracket<T>) -> Bracket<T> {
        debug_assert!(self.lo >= T::zero() && other.lo >= T::zero());
        Bracket::new(self.lo.clone() * other.lo.clone(), self.hi.clone() * other.hi.clone())
    }

    pub fn scale_nonneg(&self, factor: &T) -> Bracket<T> {
        debug_assert!(*factor >= T::zero());
        Bracket::new(self.lo.clone() * factor.clone(), self.hi.clone() * factor.clone())
    }

    /// Reciprocal of a strictly positive bracket.
    pub fn recip_pos(&self) -> Bracket<T> {
        debug_assert!(self.lo > T::zero());
        Bracket::new(T::one() / self.hi.clone(), T::one() / self.lo.clone())
    }

    pub fn powi_nonneg(&self, exp: u32) -> Bracket<T> {
        Bracket::new(self.lo.powi(exp), self.hi.powi(exp))
    }
}

impl<T: Scalar> Add for Bracket<T> {
    type Output = Bracket<T>;
    fn add(self, rhs: Bracket<T>) -> Bracket<T> {
        Bracket::new(self.lo + rhs.lo, self.hi + rhs.hi)
    }
}

impl<T: Scalar> Mul for Bracket<T> {
    type Output = Bracket<T>;
    fn mul(self, rhs: Bracket<T>) -> Bracket<T> {
        self.mul_nonneg(&rhs)
    }
}
