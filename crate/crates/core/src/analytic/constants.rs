//! Certified rational enclosures of the transcendental constants.
//!
//! Each enclosure is the 30-digit truncation and that truncation plus one
//! unit in the last place, so the true value lies strictly inside.

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{decimal, Bracket, Scalar};

pub type RationalBracket = Bracket<BigRational>;

const E_DIGITS: &str = "2.718281828459045235360287471352";
const PI_DIGITS: &str = "3.141592653589793238462643383279";
const SQRT_2PI_DIGITS: &str = "2.506628274631000502415765284811";
const DIGITS: usize = 30;

fn enclose(truncated: &str) -> RationalBracket {
    let lo = decimal(truncated);
    let ulp = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10u32), DIGITS));
    let hi = &lo + ulp;
    Bracket::new(lo, hi)
}

pub fn e() -> RationalBracket {
    enclose(E_DIGITS)
}

pub fn pi() -> RationalBracket {
    enclose(PI_DIGITS)
}

pub fn sqrt_2pi() -> RationalBracket {
    enclose(SQRT_2PI_DIGITS)
}

/// Published two-sided bounds on `I_0(2)`.
pub fn published_i0_of_2() -> RationalBracket {
    Bracket::new(decimal("2.27958"), decimal("2.279586"))
}

/// Published two-sided bounds on `I_1(2)`.
pub fn published_i1_of_2() -> RationalBracket {
    Bracket::new(decimal("1.5906"), decimal("1.59064"))
}

/// Encloses `sqrt(n)` to `DIGITS` decimal places (exact for perfect squares).
pub fn sqrt_bracket(n: u64) -> RationalBracket {
    let root = n.sqrt();
    if root * root == n {
        return Bracket::point(BigRational::from_u64(root));
    }
    let scale = num_traits::pow(BigUint::from(10u32), DIGITS);
    let scaled = BigUint::from(n) * &scale * &scale;
    let floor = scaled.sqrt();
    let den = BigInt::from(scale);
    let lo = BigRational::new(BigInt::from(floor.clone()), den.clone());
    let hi = BigRational::new(BigInt::from(floor + 1u32), den);
    Bracket::new(lo, hi)
}

/// Encloses `exp(x)` for `0 <= x`, using `terms` Taylor terms and a geometric
/// bound on the tail. Requires `x < terms`.
pub fn exp_bracket(x: &BigRational, terms: u64) -> RationalBracket {
    assert!(*x >= BigRational::zero());
    assert!(*x < BigRational::from_u64(terms), "too few terms for exp({x})");
    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    for j in 0..terms {
        sum += &term;
        term = term * x / BigRational::from_u64(j + 1);
    }
    // `term` is now x^N/N!; later terms shrink by at most x/(N+1) each.
    let ratio = x / BigRational::from_u64(terms + 1);
    let tail = term / (BigRational::one() - ratio);
    let hi = &sum + tail;
    Bracket::new(sum, hi)
}

/// Encloses `exp(y)` for every `y` in a nonnegative bracket.
pub fn exp_of_bracket(x: &RationalBracket, terms: u64) -> RationalBracket {
    Bracket::new(exp_bracket(&x.lo, terms).lo, exp_bracket(&x.hi, terms).hi)
}

/// Encloses `(a / c)^k` where `c` ranges over a positive bracket.
pub fn power_of_quotient(a: &BigRational, c: &RationalBracket, k: u32) -> RationalBracket {
    Bracket::new((a / &c.hi).powi(k), (a / &c.lo).powi(k))
}
