//! Exact integer arithmetic for the edge-count bound formulas and the power
//! inequality underlying the complete-graph Lagrangian comparison.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::binom::big_binomial;
use crate::error::{HgError, Result};

fn pow2(exp: u32) -> BigInt {
    BigInt::one() << exp
}

fn big_to_string<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Exact m-range bounds for the clique dichotomy at a given (r, t): the
/// common lower bound C(t-1, r), two upper bounds obtained by subtracting
/// coefficient multiples of C(t-2, r-2) - 1 from C(t-1, r) + C(t-2, r-1),
/// and whether the stronger range is nonempty.
#[derive(Debug, Clone, Serialize)]
pub struct BoundSummary {
    pub r: u64,
    pub t: u64,
    #[serde(serialize_with = "big_to_string")]
    pub lower: BigInt,
    #[serde(serialize_with = "big_to_string")]
    pub upper_17: BigInt,
    #[serde(serialize_with = "big_to_string")]
    pub upper_19: BigInt,
    #[serde(serialize_with = "big_to_string")]
    pub coeff_17: BigInt,
    #[serde(serialize_with = "big_to_string")]
    pub coeff_19: BigInt,
    pub nonempty_19: bool,
}

/// Coefficient 2^{r-3} - 1.
pub fn coeff_weak(r: u64) -> BigInt {
    pow2(r as u32 - 3) - 1
}

/// Coefficient (2r-6) * 2^{r-1} + 2^{r-3} + (r-4)(2r-7) - 1.
pub fn coeff_strong(r: u64) -> BigInt {
    BigInt::from(2 * r - 6) * pow2(r as u32 - 1) + pow2(r as u32 - 3)
        + BigInt::from((r - 4) as i64 * (2 * r as i64 - 7))
        - 1
}

pub fn theorem_bounds(r: u64, t: u64) -> Result<BoundSummary> {
    if r < 4 {
        return Err(HgError::InvalidArgument(format!(
            "bound formulas require r >= 4, got {r}"
        )));
    }
    if t < r + 1 {
        return Err(HgError::InvalidArgument(format!(
            "bound formulas require t >= r + 1, got t = {t}, r = {r}"
        )));
    }
    let lower = big_binomial(t - 1, r);
    let width = big_binomial(t - 2, r - 1);
    let unit = big_binomial(t - 2, r - 2) - 1;
    let coeff_17 = coeff_weak(r);
    let coeff_19 = coeff_strong(r);
    let upper_17 = &lower + &width - &coeff_17 * &unit;
    let upper_19 = &lower + &width - &coeff_19 * &unit;
    let nonempty_19 = upper_19 >= lower;
    Ok(BoundSummary {
        r,
        t,
        lower,
        upper_17,
        upper_19,
        coeff_17,
        coeff_19,
        nonempty_19,
    })
}

/// Summaries for t = r+1 ..= t_max, plus the minimal t whose strong range
/// is nonempty, when one exists in the scanned window.
pub fn bounds_scan(r: u64, t_max: u64) -> Result<(Vec<BoundSummary>, Option<u64>)> {
    let mut rows = Vec::new();
    let mut first_nonempty = None;
    for t in (r + 1)..=t_max {
        let row = theorem_bounds(r, t)?;
        if row.nonempty_19 && first_nonempty.is_none() {
            first_nonempty = Some(t);
        }
        rows.push(row);
    }
    Ok((rows, first_nonempty))
}

#[derive(Debug, Clone, Serialize)]
pub struct PowerInequalityReport {
    pub r_min: u64,
    pub r_max: u64,
    pub t_max: u64,
    pub checked: u64,
    pub counterexamples: Vec<(u64, u64)>,
}

impl PowerInequalityReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Exact verification of (t-r)^{r-2} (t-1) < (t-r+1)^{r-1} over the full
/// (r, t) window.
pub fn check_power_inequality(r_min: u64, r_max: u64, t_max: u64) -> Result<PowerInequalityReport> {
    if r_min < 4 {
        return Err(HgError::InvalidArgument(format!(
            "power inequality scan requires r >= 4, got {r_min}"
        )));
    }
    if r_max < r_min {
        return Err(HgError::InvalidArgument("empty uniformity range".into()));
    }
    let mut checked = 0u64;
    let mut counterexamples = Vec::new();
    for r in r_min..=r_max {
        for t in r..=t_max {
            let lhs = if t == r {
                // 0^{r-2} (t-1) = 0
                BigInt::zero()
            } else {
                BigInt::from(t - r).pow(r as u32 - 2) * BigInt::from(t - 1)
            };
            let rhs = BigInt::from(t - r + 1).pow(r as u32 - 1);
            checked += 1;
            if lhs >= rhs {
                counterexamples.push((r, t));
            }
        }
    }
    Ok(PowerInequalityReport {
        r_min,
        r_max,
        t_max,
        checked,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_values() {
        assert_eq!(coeff_strong(4), BigInt::from(17));
        assert_eq!(coeff_strong(5), BigInt::from(70));
        assert_eq!(coeff_weak(4), BigInt::from(1));
        assert_eq!(coeff_weak(5), BigInt::from(3));
    }

    #[test]
    fn bound_rows_at_r4() {
        let row = theorem_bounds(4, 55).unwrap();
        assert_eq!(row.lower, BigInt::from(316_251));
        assert_eq!(row.upper_19, BigInt::from(316_268));
        assert!(row.nonempty_19);

        let row = theorem_bounds(4, 54).unwrap();
        assert!(!row.nonempty_19);
    }

    #[test]
    fn scan_finds_minimal_t() {
        let (_, first) = bounds_scan(4, 100).unwrap();
        assert_eq!(first, Some(55));
    }

    #[test]
    fn upper_19_never_exceeds_upper_17() {
        for r in 4..=8u64 {
            for t in (r + 2)..=40 {
                let row = theorem_bounds(r, t).unwrap();
                assert!(row.upper_19 <= row.upper_17, "r={r} t={t}");
                assert!(
                    row.upper_17 <= big_binomial(t - 1, r) + big_binomial(t - 2, r - 1),
                    "r={r} t={t}"
                );
            }
        }
    }

    #[test]
    fn power_inequality_examples() {
        // t=6, r=4: 2^2 * 5 = 20 < 3^3 = 27
        let rep = check_power_inequality(4, 4, 6).unwrap();
        assert!(rep.holds());
        let rep = check_power_inequality(4, 4, 4).unwrap();
        assert!(rep.holds());
        assert!(check_power_inequality(3, 4, 10).is_err());
    }
}
