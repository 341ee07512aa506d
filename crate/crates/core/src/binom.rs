//! Binomial coefficients in machine and arbitrary precision.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// C(n, k) in u64, computed through u128 intermediates. Panics on overflow,
/// which cannot happen for the vertex counts this crate enumerates.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc * (n as u128 - (k as u128 - i)) / i;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// C(n, k) as a big integer, exact for any range.
pub fn big_binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - (k - i)) / BigInt::from(i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(4, 3), 4);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(54, 4), 316_251);
    }

    #[test]
    fn big_matches_machine() {
        for n in 0..40u64 {
            for k in 0..=n {
                assert_eq!(big_binomial(n, k), BigInt::from(binomial(n, k)));
            }
        }
    }
}
