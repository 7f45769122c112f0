//! Partial sums of the modified Bessel series
//! `I_ν(x) = Σ_k (x/2)^(2k+ν) / (k! (k+ν)!)` for `ν ∈ {0, 1}`.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::constants::RationalBracket;
use crate::error::{Error, Result};
use crate::scalar::{Bracket, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BesselOrder {
    Zero,
    One,
}

impl BesselOrder {
    pub fn nu(self) -> u64 {
        match self {
            BesselOrder::Zero => 0,
            BesselOrder::One => 1,
        }
    }

    /// `I_0` for even vertex counts, `I_1` for odd ones.
    pub fn for_parity(n: usize) -> Self {
        if n % 2 == 0 {
            BesselOrder::Zero
        } else {
            BesselOrder::One
        }
    }
}

/// A truncated series: the sum of the first terms and, when the term ratio
/// has dropped below one, a bound on everything omitted.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialSum<T> {
    pub sum: T,
    pub remainder_bound: Option<T>,
}

/// Sums the first `terms` terms of `I_order(x)` for `x > 0`.
///
/// The remainder bound is the next term divided by `1 - r`, where `r` is the
/// ratio of the term after it to the next term; successive ratios only
/// decrease, so the omitted tail is dominated by that geometric series.
pub fn bessel_partial<T: Scalar>(order: BesselOrder, x: &T, terms: usize) -> Result<PartialSum<T>> {
    if terms == 0 {
        return Err(Error::Domain("a partial sum needs at least one term".into()));
    }
    if *x <= T::zero() {
        return Err(Error::Domain("the series argument must be positive".into()));
    }
    let nu = order.nu();
    let half = x.clone() / T::from_u64(2);
    let quarter_sq = half.clone() * half.clone();
    // k = 0 term: (x/2)^ν / ν!
    let mut term = if nu == 0 { T::one() } else { half };
    let mut sum = T::zero();
    for k in 0..terms as u64 {
        sum = sum + term.clone();
        term = term * quarter_sq.clone() / T::from_u64((k + 1) * (k + 1 + nu));
    }
    let n = terms as u64;
    let ratio = quarter_sq / T::from_u64((n + 1) * (n + 1 + nu));
    let remainder_bound = if ratio < T::one() {
        Some(term / (T::one() - ratio))
    } else {
        None
    };
    Ok(PartialSum { sum, remainder_bound })
}

/// Certified enclosure `[S_N, S_N + R_N]` of `I_order(x)` for rational `x > 0`.
pub fn bessel_bracket(order: BesselOrder, x: &BigRational, terms: usize) -> Result<RationalBracket> {
    let p = bessel_partial(order, x, terms)?;
    let r = p
        .remainder_bound
        .ok_or_else(|| Error::Domain(format!("{terms} terms are too few for a tail bound")))?;
    let hi = &p.sum + r;
    Ok(Bracket::new(p.sum, hi))
}

/// Certified enclosure of `I_0(2)` or `I_1(2)` (width below `10^-40`).
pub fn bessel_at_two(order: BesselOrder) -> RationalBracket {
    bessel_bracket(order, &BigRational::from_u64(2), 40).expect("40 terms suffice at x = 2")
}
