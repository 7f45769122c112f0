//! The normalized cycle-count sequences of the balanced complete bipartite
//! graphs. With `P(n) = ⌊n/2⌋! ⌈n/2⌉! / (2⌊n/2⌋)`:
//!
//! * `c(K_{ℓ,ℓ})   = P(2ℓ)   · a_even(ℓ)`, `a_even(ℓ) = Σ_{k=2}^{ℓ} ℓ / (k ((ℓ-k)!)²)`
//! * `c(K_{ℓ,ℓ+1}) = P(2ℓ+1) · a_odd(ℓ)`,  `a_odd(ℓ)  = Σ_{k=2}^{ℓ} ℓ / (k (ℓ-k)! (ℓ+1-k)!)`
//!
//! Both decrease toward `I_0(2)` and `I_1(2)` respectively.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn check_index(ell: u64) -> Result<()> {
    if ell < 2 {
        Err(Error::Domain(format!("sequence index must be at least 2, got {ell}")))
    } else {
        Ok(())
    }
}

pub fn a_even<T: Scalar>(ell: u64) -> Result<T> {
    check_index(ell)?;
    let l = T::from_u64(ell);
    let mut sum = T::zero();
    let mut fact = T::one();
    // i = ℓ - k runs over 0..=ℓ-2
    for i in 0..=ell - 2 {
        if i > 0 {
            fact = fact * T::from_u64(i);
        }
        sum = sum + l.clone() / (T::from_u64(ell - i) * fact.clone() * fact.clone());
    }
    Ok(sum)
}

pub fn a_odd<T: Scalar>(ell: u64) -> Result<T> {
    check_index(ell)?;
    let l = T::from_u64(ell);
    let mut sum = T::zero();
    let mut fact = T::one();
    for i in 0..=ell - 2 {
        if i > 0 {
            fact = fact * T::from_u64(i);
        }
        let next = fact.clone() * T::from_u64(i + 1);
        sum = sum + l.clone() / (T::from_u64(ell - i) * fact.clone() * next);
    }
    Ok(sum)
}

/// The sequence governing `n` vertices: `a_even(n/2)` or `a_odd((n-1)/2)`.
pub fn a_for_order<T: Scalar>(n: u64) -> Result<T> {
    if n % 2 == 0 {
        a_even(n / 2)
    } else {
        a_odd((n - 1) / 2)
    }
}

/// Upper bound `3/(ℓ-3) + e/ℓ` on the gap between `a_even(ℓ)` and its
/// series part, valid for `ℓ >= 4`. `e_upper` must bound `e` from above.
pub fn tail_gap_bound<T: Scalar>(ell: u64, e_upper: &T) -> Result<T> {
    if ell < 4 {
        return Err(Error::Domain(format!("tail bound needs ℓ >= 4, got {ell}")));
    }
    Ok(T::ratio(3, ell - 3) + e_upper.clone() / T::from_u64(ell))
}
