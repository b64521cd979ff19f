//! Integer partitions and the ε statistic.
//!
//! A [`Partition`] is stored as its weakly decreasing list of parts. Multiplicities
//! and support are computed on demand; at the sizes used here part lists are short.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition parts must be positive, got {0}")]
    NonPositivePart(i64),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is lexicographic on the part list, so within a fixed size `(2,1) < (3)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Canonicalizes an arbitrary multiset of parts.
    pub fn new(values: &[i64]) -> Result<Self, PartitionError> {
        let mut parts = Vec::with_capacity(values.len());
        for &v in values {
            if v <= 0 {
                return Err(PartitionError::NonPositivePart(v));
            }
            let v = u32::try_from(v).map_err(|_| PartitionError::Parse(v.to_string()))?;
            parts.push(v);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// Builds a partition from positive parts in any order.
    ///
    /// Panics if a part is zero; use [`Partition::new`] for untrusted input.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The one-part partition `(n)`.
    pub fn single(n: u32) -> Self {
        Self::from_parts(vec![n])
    }

    /// `k` copies of the part `j`.
    pub fn repeated(j: u32, k: usize) -> Self {
        Self::from_parts(vec![j; k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |λ|
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// ℓ(λ)
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// m_j(λ)
    pub fn multiplicity(&self, j: u32) -> usize {
        self.0.iter().filter(|&&p| p == j).count()
    }

    /// Distinct part values in decreasing order.
    pub fn support(&self) -> Vec<u32> {
        let mut s = self.0.clone();
        s.dedup();
        s
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn contains(&self, a: u32) -> bool {
        self.0.contains(&a)
    }

    /// λ − a: one copy of `a` removed, or `None` when `a` is not a part.
    pub fn remove_part(&self, a: u32) -> Option<Partition> {
        let idx = self.0.iter().position(|&p| p == a)?;
        let mut parts = self.0.clone();
        parts.remove(idx);
        Some(Partition(parts))
    }

    /// λ ∪ μ
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] >= other.0[j] {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.0[i..]);
        parts.extend_from_slice(&other.0[j..]);
        Partition(parts)
    }

    /// Adds a single part.
    pub fn with_part(&self, a: u32) -> Partition {
        self.union(&Partition(vec![a]))
    }

    /// Compares by size first, then lexicographically. This is the rendering order
    /// of e-expansions.
    pub fn graded_cmp(&self, other: &Partition) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Comma-separated parts; the empty partition renders as `0`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let values = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| PartitionError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(&values)
    }
}

/// Exact binomial coefficient via the multiplicative formula.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// ε(λ) = ℓ(λ)! ∏_j (j−1)^{m_j} / m_j!, with ε(∅) = 1.
///
/// The multinomial ℓ!/∏ m_j! is accumulated as a product of binomials so every
/// intermediate value is an integer.
pub fn epsilon(lambda: &Partition) -> BigInt {
    if lambda.contains(1) {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    let mut placed = 0usize;
    for (j, m) in lambda.multiplicities() {
        placed += m;
        acc *= binomial(placed, m);
        acc *= BigInt::from(j - 1).pow(m as u32);
    }
    acc
}

/// ε(λ − a), taken to be zero when `a` is not a part of λ.
pub fn epsilon_without(lambda: &Partition, a: u32) -> BigInt {
    lambda.remove_part(a).map_or_else(BigInt::zero, |mu| epsilon(&mu))
}

/// ε((λ − a) − b), zero unless both removals are possible.
pub fn epsilon_without2(lambda: &Partition, a: u32, b: u32) -> BigInt {
    lambda
        .remove_part(a)
        .and_then(|mu| mu.remove_part(b))
        .map_or_else(BigInt::zero, |nu| epsilon(&nu))
}

/// All partitions of `n` in reverse-lexicographic order, starting from `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part as u32);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// All partitions of every size `0..=max`, grouped by size.
pub fn partitions_up_to(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: usize) -> BigInt {
        (1..=n).fold(BigInt::one(), |acc, k| acc * k)
    }

    /// ε from the closed form, dividing at the end.
    #[test]
    fn epsilon_matches_factorial_form() {
        for n in 0..=12 {
            for l in partitions_of(n) {
                let mut num = factorial(l.len());
                let mut den = BigInt::one();
                for (j, m) in l.multiplicities() {
                    num *= BigInt::from(j as i64 - 1).pow(m as u32);
                    den *= factorial(m);
                }
                assert_eq!(epsilon(&l), num / den, "{l:?}");
            }
        }
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts.to_vec())
    }

    #[test]
    fn canonical_form() {
        assert_eq!(Partition::new(&[2, 3, 2]).unwrap(), p(&[3, 2, 2]));
        assert_eq!(Partition::new(&[]).unwrap(), Partition::empty());
        assert_eq!(Partition::new(&[5, 2]).unwrap(), p(&[5, 2]));
        let once = Partition::new(&[1, 4, 2]).unwrap();
        let parts: Vec<i64> = once.parts().iter().map(|&x| x as i64).collect();
        assert_eq!(Partition::new(&parts).unwrap(), once);
    }

    #[test]
    fn rejects_non_positive() {
        assert_eq!(Partition::new(&[3, 0]), Err(PartitionError::NonPositivePart(0)));
        assert_eq!(Partition::new(&[-1]), Err(PartitionError::NonPositivePart(-1)));
        assert!("3,-2".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
    }

    #[test]
    fn accessors() {
        let l = p(&[3, 2, 2, 1]);
        assert_eq!(l.size(), 8);
        assert_eq!(l.len(), 4);
        assert_eq!(l.multiplicity(2), 2);
        assert_eq!(l.multiplicity(4), 0);
        assert_eq!(l.support(), vec![3, 2, 1]);
        let total: usize = l.support().iter().map(|&j| l.multiplicity(j)).sum();
        assert_eq!(total, l.len());
        assert_eq!(Partition::empty().size(), 0);
        assert_eq!(Partition::empty().len(), 0);
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(&p(&[5, 2])), BigInt::from(8));
        assert_eq!(epsilon(&p(&[3, 3, 2])), BigInt::from(12));
        assert_eq!(epsilon(&p(&[4, 1])), BigInt::zero());
        assert_eq!(epsilon(&p(&[2, 2, 2, 2])), BigInt::one());
        assert_eq!(epsilon(&Partition::empty()), BigInt::one());
    }

    #[test]
    fn epsilon_single_part_and_twos() {
        for n in 1..20u32 {
            assert_eq!(epsilon(&Partition::single(n)), BigInt::from(n - 1));
        }
        for k in 1..12 {
            assert_eq!(epsilon(&Partition::repeated(2, k)), BigInt::one());
        }
    }

    #[test]
    fn remove_and_union() {
        assert_eq!(p(&[5, 2]).remove_part(2), Some(p(&[5])));
        assert_eq!(p(&[5, 2]).remove_part(3), None);
        assert_eq!(p(&[2, 2]).remove_part(2), Some(p(&[2])));
        assert_eq!(p(&[3, 2]).union(&p(&[2])), p(&[3, 2, 2]));
        assert_eq!(Partition::empty().union(&p(&[4])), p(&[4]));
        assert_eq!(p(&[5]).union(&p(&[5])), p(&[5, 5]));
        assert_eq!(epsilon_without(&p(&[5, 2]), 3), BigInt::zero());
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn partition_count_matches_nested_loops() {
        // Independent count: partitions of 8 as multiplicity vectors m_1..m_8.
        let mut count = 0;
        for m8 in 0..=1 {
            for m7 in 0..=1 {
                for m6 in 0..=1 {
                    for m5 in 0..=1 {
                        for m4 in 0..=2 {
                            for m3 in 0..=2 {
                                for m2 in 0..=4 {
                                    let used = 8 * m8 + 7 * m7 + 6 * m6 + 5 * m5 + 4 * m4 + 3 * m3 + 2 * m2;
                                    if used <= 8 {
                                        count += 1; // m1 fills the remainder
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(count, 22);
        assert_eq!(partitions_of(8).len(), count);
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(p(&[5, 2]).to_string(), "5,2");
        assert_eq!(Partition::empty().to_string(), "0");
        assert_eq!("2, 5".parse::<Partition>().unwrap(), p(&[5, 2]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}
