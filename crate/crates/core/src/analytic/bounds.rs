//! Closed-form bound expressions, evaluated exactly or as certified brackets.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use super::constants::{self, power_of_quotient, RationalBracket};
use crate::error::{Error, Result};
use crate::scalar::{decimal, rational_from_biguint, Bracket, Scalar};
use crate::ExactCount;

pub fn factorial(n: u64) -> ExactCount {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Encloses `sqrt(2π) sqrt(n) (n/e)^n` (lower) and `e sqrt(n) (n/e)^n` (upper),
/// the simplified two-sided factorial bounds.
pub fn robbins_bounds(n: u64) -> Result<RationalBracket> {
    if n == 0 {
        return Err(Error::Domain("factorial bounds need n >= 1".into()));
    }
    let e = constants::e();
    let root_n = constants::sqrt_bracket(n);
    let power = power_of_quotient(&BigRational::from_u64(n), &e, n as u32);
    let lo = constants::sqrt_2pi().lo * &root_n.lo * &power.lo;
    let hi = e.hi * &root_n.hi * &power.hi;
    Ok(Bracket::new(lo, hi))
}

fn half_factorial_squared(m: u64) -> BigRational {
    let f = rational_from_biguint(&factorial(m));
    &f * &f
}

/// `2.44 (((n-2)/2)!)^2`: the bound on cycles through one edge, even `n`.
pub fn edge_cycle_bound_even(n: u64) -> Result<BigRational> {
    if n % 2 == 1 || n < 6 {
        return Err(Error::Domain(format!("even-order edge bound needs even n >= 6, got {n}")));
    }
    Ok(decimal("2.44") * half_factorial_squared((n - 2) / 2))
}

/// `n^2 + 0.976 n (((n-3)/2)!)^2`: the bound on cycles through an edge whose
/// second endpoint has degree at most `2n/5`, odd `n`.
pub fn edge_cycle_bound_odd(n: u64) -> Result<BigRational> {
    if n % 2 == 0 || n < 7 {
        return Err(Error::Domain(format!("odd-order edge bound needs odd n >= 7, got {n}")));
    }
    let nq = BigRational::from_u64(n);
    Ok(&nq * &nq + decimal("0.976") * &nq * half_factorial_squared((n - 3) / 2))
}

/// Encloses `e^2 (k/2e)^k`, the bound on Hamiltonian cycles in a
/// triangle-free graph on `k` vertices.
pub fn ham_bound(k: u64) -> Result<RationalBracket> {
    if k < 3 {
        return Err(Error::Domain(format!("Hamiltonian bound needs k >= 3, got {k}")));
    }
    let e = constants::e();
    let two_e = e.scale_nonneg(&BigRational::from_u64(2));
    let power = power_of_quotient(&BigRational::from_u64(k), &two_e, k as u32);
    Ok(e.powi_nonneg(2).mul_nonneg(&power))
}

/// Encloses `(2 e^(2e+2) / n) (n/2e)^n`, the bound on cycles avoiding a
/// fixed vertex.
pub fn non_x_cycles_bound(n: u64) -> Result<RationalBracket> {
    if n < 5 {
        return Err(Error::Domain(format!("avoiding-vertex bound needs n >= 5, got {n}")));
    }
    let e = constants::e();
    let two = BigRational::from_u64(2);
    let exponent = Bracket::new(&e.lo * &two + &two, &e.hi * &two + &two);
    let exp = constants::exp_of_bracket(&exponent, 80);
    let two_e = e.scale_nonneg(&two);
    let power = power_of_quotient(&BigRational::from_u64(n), &two_e, n as u32);
    let factor = two / BigRational::from_u64(n);
    Ok(exp.mul_nonneg(&power).scale_nonneg(&factor))
}

/// `(n/2e)^n` evaluated in any scalar type, given a value for `e`.
pub fn scaled_power<T: Scalar>(n: u64, e: &T) -> T {
    (T::from_u64(n) / (T::from_u64(2) * e.clone())).powi(n as u32)
}
