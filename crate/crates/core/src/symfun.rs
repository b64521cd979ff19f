//! Symmetric functions in the elementary basis.
//!
//! [`SymE`] is a sparse integer combination of monomials `e_λ = e_{λ1} e_{λ2} ...`.
//! Multiplication of monomials is union of partitions, so the ring is just the
//! polynomial ring in `e_1, e_2, ...` with arbitrary-precision coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::partitions::{binomial, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymEError {
    #[error("cannot parse e-expansion: {0}")]
    Parse(String),
}

/// Finite sum `Σ c_λ e_λ` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymE {
    terms: BTreeMap<Partition, BigInt>,
}

impl SymE {
    pub fn zero() -> Self {
        SymE::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Partition::empty())
    }

    /// `e_i`, with `e_0 = 1`.
    pub fn e(i: u32) -> Self {
        if i == 0 {
            Self::one()
        } else {
            Self::term(1, Partition::single(i))
        }
    }

    /// `c · e_i`.
    pub fn ce(c: impl Into<BigInt>, i: u32) -> Self {
        if i == 0 {
            Self::constant(c)
        } else {
            Self::term(c, Partition::single(i))
        }
    }

    /// `c · e_λ`.
    pub fn term(c: impl Into<BigInt>, lambda: Partition) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(lambda, c);
        }
        SymE { terms }
    }

    /// Builds from `(parts, coefficient)` pairs; duplicate keys are summed.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut out = SymE::zero();
        for (lambda, c) in iter {
            out.add_term(lambda, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in rendering order: by degree, then lexicographically.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.graded_cmp(b.0));
        v
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> SymE {
        let c = c.into();
        if c.is_zero() {
            return SymE::zero();
        }
        SymE {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * &c)).collect(),
        }
    }

    /// Divides every coefficient by `d`, or returns `None` if some coefficient is
    /// not a multiple of `d`.
    pub fn div_exact(&self, d: impl Into<BigInt>) -> Option<SymE> {
        let d = d.into();
        if d.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            if !(v % &d).is_zero() {
                return None;
            }
            terms.insert(k.clone(), v / &d);
        }
        Some(SymE { terms })
    }

    /// The first term with a negative coefficient, if any.
    pub fn negative_witness(&self) -> Option<(Partition, BigInt)> {
        self.terms
            .iter()
            .find(|(_, c)| c.is_negative())
            .map(|(k, c)| (k.clone(), c.clone()))
    }

    pub fn is_e_positive(&self) -> bool {
        self.negative_witness().is_none()
    }

    /// Every term has degree `d`. The zero function is homogeneous of any degree.
    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|k| k.size() == d)
    }

    /// Largest degree of a term, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.size()).max()
    }

    /// The part of `self` of degree exactly `d`.
    pub fn homogeneous_part(&self, d: usize) -> SymE {
        SymE {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.size() == d)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Sum of the absolute values of all coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }

    /// Specializes at a finite alphabet: `e_i ↦ e_i(x_1, ..., x_k)`.
    pub fn evaluate(&self, xs: &[BigInt]) -> BigInt {
        let values = elementary_values(xs);
        self.evaluate_with(|i| values.get(i as usize).cloned().unwrap_or_default())
    }

    /// Specializes at `x_1 = ... = x_k = 1`, where `e_i ↦ binom(k, i)`.
    pub fn evaluate_at_ones(&self, k: usize) -> BigInt {
        self.evaluate_with(|i| binomial(k, i as usize))
    }

    fn evaluate_with(&self, e_value: impl Fn(u32) -> BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (lambda, c) in &self.terms {
            let mut v = c.clone();
            for &part in lambda.parts() {
                v *= e_value(part);
                if v.is_zero() {
                    break;
                }
            }
            total += v;
        }
        total
    }

    /// Parses the JSON list-of-terms rendering.
    pub fn from_json(s: &str) -> Result<SymE, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("SymE serializes infallibly")
    }
}

/// `[e_0, e_1, ..., e_k]` evaluated at `xs`.
pub fn elementary_values(xs: &[BigInt]) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); xs.len() + 1];
    e[0] = BigInt::one();
    for (seen, x) in xs.iter().enumerate() {
        for i in (1..=seen + 1).rev() {
            let prev = &e[i - 1] * x;
            e[i] += prev;
        }
    }
    e
}

static POWER_SUMS: RwLock<Vec<SymE>> = RwLock::new(Vec::new());

/// `p_n` in the e-basis via Newton's identity
/// `p_n = Σ_{i=1}^{n-1} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n`.
///
/// `p_0` is taken to be 1. Results are memoized process-wide.
pub fn power_sum_to_e(n: u32) -> SymE {
    if n == 0 {
        return SymE::one();
    }
    if let Some(v) = POWER_SUMS.read().expect("power-sum memo poisoned").get(n as usize) {
        return v.clone();
    }
    let mut memo = POWER_SUMS.write().expect("power-sum memo poisoned");
    if memo.is_empty() {
        memo.push(SymE::one());
    }
    while memo.len() <= n as usize {
        let m = memo.len() as u32;
        let mut p = SymE::zero();
        for i in 1..m {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            p += &(&SymE::ce(sign, i) * &memo[(m - i) as usize]);
        }
        let sign: i64 = if m % 2 == 1 { 1 } else { -1 };
        p += &SymE::ce(sign * i64::from(m), m);
        memo.push(p);
    }
    memo[n as usize].clone()
}

/// `p_λ = ∏ p_{λ_i}` in the e-basis.
pub fn power_sum_lambda_to_e(lambda: &Partition) -> SymE {
    lambda
        .parts()
        .iter()
        .fold(SymE::one(), |acc, &part| &acc * &power_sum_to_e(part))
}

impl fmt::Debug for SymE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymE({self})")
    }
}

/// Canonical text form, e.g. `e[2,1] + 3*e[3]`.
impl fmt::Display for SymE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.sorted_terms().into_iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if lambda.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "e[{lambda}]")?;
            } else {
                write!(f, "{mag}*e[{lambda}]")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SymE {
    type Err = SymEError;

    /// Accepts the canonical text form; terms may appear in any order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || SymEError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut out = SymE::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body
                .char_indices()
                .skip(1)
                .find(|&(_, c)| c == '+' || c == '-')
                .map_or(body.len(), |(i, _)| i);
            let (token, tail) = body.split_at(end);
            rest = tail;
            let (coef, lambda) = match token.find("e[") {
                None => (token.parse::<BigInt>().map_err(|_| err())?, Partition::empty()),
                Some(pos) => {
                    let coef = match &token[..pos] {
                        "" => BigInt::one(),
                        c => c.strip_suffix('*').ok_or_else(err)?.parse::<BigInt>().map_err(|_| err())?,
                    };
                    let inner = token[pos + 2..].strip_suffix(']').ok_or_else(err)?;
                    (coef, inner.parse::<Partition>().map_err(|_| err())?)
                }
            };
            out.add_term(lambda, coef * sign);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    partition: Vec<u32>,
    coeff: String,
}

impl Serialize for SymE {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self
            .sorted_terms()
            .into_iter()
            .map(|(k, c)| JsonTerm {
                partition: k.parts().to_vec(),
                coeff: c.to_string(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymE {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(deserializer)?;
        let mut out = SymE::zero();
        for t in terms {
            if t.partition.contains(&0) {
                return Err(D::Error::custom("partition parts must be positive"));
            }
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            out.add_term(Partition::from_parts(t.partition), c);
        }
        Ok(out)
    }
}

impl AddAssign<&SymE> for SymE {
    fn add_assign(&mut self, rhs: &SymE) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl SubAssign<&SymE> for SymE {
    fn sub_assign(&mut self, rhs: &SymE) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), -v);
        }
    }
}

impl Add for &SymE {
    type Output = SymE;
    fn add(self, rhs: &SymE) -> SymE {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SymE {
    type Output = SymE;
    fn add(mut self, rhs: SymE) -> SymE {
        self += &rhs;
        self
    }
}

impl Sub for &SymE {
    type Output = SymE;
    fn sub(self, rhs: &SymE) -> SymE {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for SymE {
    type Output = SymE;
    fn sub(mut self, rhs: SymE) -> SymE {
        self -= &rhs;
        self
    }
}

impl Neg for &SymE {
    type Output = SymE;
    fn neg(self) -> SymE {
        SymE {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl Neg for SymE {
    type Output = SymE;
    fn neg(self) -> SymE {
        -&self
    }
}

impl Mul for &SymE {
    type Output = SymE;
    fn mul(self, rhs: &SymE) -> SymE {
        let mut out = SymE::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }
}

impl Mul for SymE {
    type Output = SymE;
    fn mul(self, rhs: SymE) -> SymE {
        &self * &rhs
    }
}

impl MulAssign<&SymE> for SymE {
    fn mul_assign(&mut self, rhs: &SymE) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for SymE {
    fn sum<I: Iterator<Item = SymE>>(iter: I) -> SymE {
        iter.fold(SymE::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> std::iter::Sum<&'a SymE> for SymE {
    fn sum<I: Iterator<Item = &'a SymE>>(iter: I) -> SymE {
        iter.fold(SymE::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}
