//! Closed-form cycle counts of complete bipartite graphs.
//!
//! `K_{a,b}` has `a! b! / (2k (a-k)! (b-k)!)` cycles of length `2k`: an
//! ordered `k`-tuple from each side interleaves into a cycle that starts on
//! the first side, and each cycle arises from `k` starting points times two
//! directions.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::analytic::bessel::{bessel_at_two, BesselOrder};
use crate::analytic::bounds::{factorial, scaled_power};
use crate::analytic::constants::{self, RationalBracket};
use crate::cycles::CycleSpectrum;
use crate::error::{Error, Result};
use crate::scalar::{decimal, rational_from_biguint, Bracket, Scalar};
use crate::ExactCount;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FormulaResult {
    pub a: usize,
    pub b: usize,
    pub spectrum: CycleSpectrum,
    #[serde(serialize_with = "crate::report::as_decimal_string")]
    pub total: ExactCount,
}

pub fn formula_spectrum(a: usize, b: usize) -> Result<FormulaResult> {
    if a == 0 || b == 0 {
        return Err(Error::Domain(format!("part sizes must be positive, got ({a}, {b})")));
    }
    let mut spectrum = CycleSpectrum::new();
    let mut falling_a = BigUint::one();
    let mut falling_b = BigUint::one();
    for k in 1..=a.min(b) {
        falling_a *= (a - k + 1) as u64;
        falling_b *= (b - k + 1) as u64;
        if k < 2 {
            continue;
        }
        let ordered = &falling_a * &falling_b;
        let (count, rem) = ordered.div_rem(&BigUint::from(2 * k as u64));
        assert!(rem.is_zero(), "non-integral 2k-cycle count for K_{{{a},{b}}}, k = {k}");
        spectrum.add(2 * k, count);
    }
    let total = spectrum.total();
    Ok(FormulaResult { a, b, spectrum, total })
}

fn check_order(n: u64, min: u64) -> Result<()> {
    if n < min {
        Err(Error::Domain(format!("n must be at least {min}, got {n}")))
    } else {
        Ok(())
    }
}

/// `c(K_{⌊n/2⌋,⌈n/2⌉})`.
pub fn balanced_total(n: u64) -> Result<ExactCount> {
    check_order(n, 4)?;
    let half = (n / 2) as usize;
    Ok(formula_spectrum(half, n as usize - half)?.total)
}

/// `⌊n/2⌋! ⌈n/2⌉! / (2⌊n/2⌋)`.
pub fn balanced_prefactor(n: u64) -> BigRational {
    let lo = n / 2;
    let hi = n - lo;
    rational_from_biguint(&(factorial(lo) * factorial(hi))) / BigRational::from_u64(2 * lo)
}

/// Prefactor times a certified lower bound on `I_0(2)` (even `n`) or
/// `I_1(2)` (odd `n`); stated for `n >= 12`.
pub fn balanced_lower_bound(n: u64) -> Result<BigRational> {
    check_order(n, 12)?;
    let bessel = bessel_at_two(BesselOrder::for_parity(n as usize));
    Ok(balanced_prefactor(n) * bessel.lo)
}

/// Encloses `π (n/2e)^n I(2)`, the Stirling-simplified form of the lower bound.
pub fn balanced_lower_bound_simplified(n: u64) -> Result<RationalBracket> {
    check_order(n, 12)?;
    asymptotic_estimate(n)
}

/// Prefactor times `2.302786` (even `n`) or `1.60067` (odd `n`); stated for
/// `n >= 140`.
pub fn balanced_upper_bound_141(n: u64) -> Result<BigRational> {
    check_order(n, 140)?;
    let constant = if n % 2 == 0 { decimal("2.302786") } else { decimal("1.60067") };
    Ok(balanced_prefactor(n) * constant)
}

/// Generic `I · π · (n/2e)^n` for caller-supplied values of the constants.
pub fn asymptotic_form<T: Scalar>(n: u64, bessel: &T, pi: &T, e: &T) -> T {
    bessel.clone() * pi.clone() * scaled_power(n, e)
}

/// Certified enclosure of `I(2) π (n/2e)^n`, `I = I_0` for even `n` and `I_1`
/// for odd `n`. Relative width is below `10^-25` for `n <= 200`.
pub fn asymptotic_estimate(n: u64) -> Result<RationalBracket> {
    check_order(n, 4)?;
    let bessel = bessel_at_two(BesselOrder::for_parity(n as usize));
    let pi = constants::pi();
    let e = constants::e();
    // increasing in I and π, decreasing in e
    let lo = asymptotic_form(n, &bessel.lo, &pi.lo, &e.hi);
    let hi = asymptotic_form(n, &bessel.hi, &pi.hi, &e.lo);
    Ok(Bracket::new(lo, hi))
}

pub fn asymptotic_estimate_f64(n: u64) -> Result<f64> {
    Ok(asymptotic_estimate(n)?.midpoint().to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::sequences::a_for_order;
    use num_bigint::BigInt;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    /// Independent term-by-term evaluation with full factorials.
    fn by_factorials(a: u64, b: u64) -> BTreeMapSpectrum {
        (2..=a.min(b))
            .map(|k| {
                let num = factorial(a) * factorial(b);
                let den = BigUint::from(2 * k) * factorial(a - k) * factorial(b - k);
                assert!((&num % &den).is_zero());
                (2 * k as usize, num / den)
            })
            .collect()
    }

    type BTreeMapSpectrum = std::collections::BTreeMap<usize, BigUint>;

    #[test]
    fn spectrum_examples() {
        let r = formula_spectrum(2, 2).unwrap();
        assert_eq!(r.spectrum.counts(), &[(4, big(1))].into_iter().collect());
        let r = formula_spectrum(3, 3).unwrap();
        assert_eq!(r.spectrum.counts(), &[(4, big(9)), (6, big(6))].into_iter().collect());
        assert_eq!(r.total, big(15));
        let r = formula_spectrum(4, 4).unwrap();
        assert_eq!(r.spectrum.counts(), &[(4, big(36)), (6, big(96)), (8, big(72))].into_iter().collect());
        assert_eq!(r.total, big(204));
        assert_eq!(formula_spectrum(6, 7).unwrap().total, big(526_155));
        assert!(formula_spectrum(0, 3).is_err());
        assert!(formula_spectrum(1, 5).unwrap().spectrum.is_empty());
    }

    #[test]
    fn running_products_match_factorial_terms() {
        for a in 1..=12u64 {
            for b in a..=14u64 {
                let ours = formula_spectrum(a as usize, b as usize).unwrap();
                assert_eq!(ours.spectrum.counts(), &by_factorials(a, b));
            }
        }
    }

    #[test]
    fn balanced_total_examples() {
        assert_eq!(balanced_total(4).unwrap(), big(1));
        assert_eq!(balanced_total(6).unwrap(), big(15));
        assert_eq!(balanced_total(13).unwrap(), big(526_155));
        assert!(balanced_total(3).is_err());
    }

    #[test]
    fn balanced_split_is_strict_maximum() {
        for n in 4..=10usize {
            let best = balanced_total(n as u64).unwrap();
            for a in 1..n / 2 {
                assert!(formula_spectrum(a, n - a).unwrap().total < best, "n = {n}, a = {a}");
            }
        }
    }

    #[test]
    fn prefactor_times_sequence_is_total() {
        for n in 4..=60u64 {
            let total = rational_from_biguint(&balanced_total(n).unwrap());
            let via_sequence = balanced_prefactor(n) * a_for_order::<BigRational>(n).unwrap();
            assert_eq!(total, via_sequence, "n = {n}");
        }
    }

    #[test]
    fn lower_bound_range_and_examples() {
        assert!(balanced_lower_bound(11).is_err());
        for n in [12u64, 13] {
            let total = rational_from_biguint(&balanced_total(n).unwrap());
            assert!(balanced_lower_bound(n).unwrap() <= total);
        }
        assert!(balanced_lower_bound(13).unwrap() <= BigRational::from_integer(BigInt::from(526_155)));
    }

    #[test]
    fn simplified_lower_bound_sits_below_factorial_form() {
        for n in 12..=141u64 {
            let simple = balanced_lower_bound_simplified(n).unwrap();
            assert!(simple.hi <= balanced_lower_bound(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn upper_bound_range() {
        assert!(balanced_upper_bound_141(100).is_err());
        for n in [140u64, 141] {
            let total = rational_from_biguint(&balanced_total(n).unwrap());
            assert!(total <= balanced_upper_bound_141(n).unwrap());
        }
    }

    #[test]
    fn asymptotic_ratio_converges_slowly_from_above() {
        let ratio = |n: u64| {
            let total = rational_from_biguint(&balanced_total(n).unwrap());
            (total / asymptotic_estimate(n).unwrap().midpoint()).to_f64()
        };
        let r40 = ratio(40);
        let r100 = ratio(100);
        assert!(0.9 < r40 && r40 < 1.1);
        // The correction is roughly 1.8/n, so n = 100 sits near 1.0178.
        assert!(1.0 < r100 && r100 < 1.02, "{r100}");
        assert!(r100 < r40);
    }

    #[test]
    fn asymptotic_estimate_precision_and_monotonicity() {
        let mut prev = asymptotic_estimate(12).unwrap();
        for n in 13..=141u64 {
            let b = asymptotic_estimate(n).unwrap();
            let rel = (b.width() / &b.lo).to_f64();
            assert!(rel < 1e-12);
            assert!(b.lo > prev.hi);
            prev = b;
        }
        let approx = asymptotic_form(40, &2.279585302336067f64, &std::f64::consts::PI, &std::f64::consts::E);
        assert!((asymptotic_estimate_f64(40).unwrap() / approx - 1.0).abs() < 1e-12);
    }
}
