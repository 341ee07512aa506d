//! r-element vertex sets, the colex order on them, and the descendant
//! partial order used by edge compression.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::binom::binomial;
use crate::error::{HgError, Result};

/// A strictly increasing sequence of positive vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RSet(Vec<u32>);

impl RSet {
    /// Builds an r-set from arbitrary labels; sorts and rejects duplicates
    /// and non-positive labels.
    pub fn new(mut labels: Vec<u32>) -> Result<Self> {
        labels.sort_unstable();
        if labels.first().is_some_and(|&v| v == 0) {
            return Err(HgError::InvalidArgument(
                "vertex labels are 1-based positive integers".into(),
            ));
        }
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(HgError::InvalidArgument(format!(
                "duplicate label in edge {labels:?}"
            )));
        }
        Ok(RSet(labels))
    }

    /// Shorthand for literals in tests and constructions.
    pub fn of(labels: &[u32]) -> Self {
        RSet::new(labels.to_vec()).expect("valid r-set literal")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn max_label(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&v| v as u64).sum()
    }

    /// The set with `v` inserted. Errors if `v` is already present.
    pub fn with(&self, v: u32) -> Result<RSet> {
        let mut labels = self.0.clone();
        labels.push(v);
        RSet::new(labels)
    }

    /// The set with `v` removed. Errors if `v` is absent.
    pub fn without(&self, v: u32) -> Result<RSet> {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                let mut labels = self.0.clone();
                labels.remove(pos);
                Ok(RSet(labels))
            }
            Err(_) => Err(HgError::InvalidArgument(format!(
                "label {v} not in {self}"
            ))),
        }
    }

    /// True if self is coordinatewise <= other (same cardinality assumed).
    pub fn dominated_by(&self, other: &RSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for RSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Colex comparison: A < B iff max(A triangle B) lies in B. For sorted sets
/// this is lexicographic comparison of the reversed label sequences.
pub fn colex_compare(a: &RSet, b: &RSet) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(HgError::InvalidArgument(format!(
            "colex comparison requires equal cardinality, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.0.iter().rev().cmp(b.0.iter().rev()))
}

/// 0-based position of `a` in the colex order of all |a|-subsets of the
/// positive integers: sum over positions k = 1..r of C(a_k - 1, k).
pub fn colex_rank(a: &RSet) -> u64 {
    a.0.iter()
        .enumerate()
        .map(|(idx, &v)| binomial(v as u64 - 1, idx as u64 + 1))
        .sum()
}

/// Inverse of [`colex_rank`]: the r-set at position `k` in colex order.
pub fn colex_unrank(r: usize, k: u64) -> RSet {
    let mut labels = vec![0u32; r];
    let mut rem = k;
    for pos in (1..=r as u64).rev() {
        // largest label v with C(v - 1, pos) <= rem
        let mut v = pos;
        while binomial(v, pos) <= rem {
            v += 1;
        }
        rem -= binomial(v - 1, pos);
        labels[pos as usize - 1] = v as u32;
    }
    RSet(labels)
}

/// How `e` relates to `f` under the coordinatewise descendant order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescendantRelation {
    None,
    Descendant,
    DirectDescendant,
    Ancestor,
    DirectAncestor,
    Equal,
}

/// `e` is a descendant of `f` iff e_s <= f_s for all s and sum(e) < sum(f);
/// direct when the sums differ by exactly one.
pub fn descendant_relation(e: &RSet, f: &RSet) -> Result<DescendantRelation> {
    if e.len() != f.len() {
        return Err(HgError::InvalidArgument(format!(
            "descendant relation requires equal cardinality, got {} and {}",
            e.len(),
            f.len()
        )));
    }
    if e == f {
        return Ok(DescendantRelation::Equal);
    }
    if e.dominated_by(f) {
        return Ok(if f.sum() == e.sum() + 1 {
            DescendantRelation::DirectDescendant
        } else {
            DescendantRelation::Descendant
        });
    }
    if f.dominated_by(e) {
        return Ok(if e.sum() == f.sum() + 1 {
            DescendantRelation::DirectAncestor
        } else {
            DescendantRelation::Ancestor
        });
    }
    Ok(DescendantRelation::None)
}
