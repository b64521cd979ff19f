//! Truncated power series in `z` with [`SymE`] coefficients.
//!
//! A series of truncation `N` keeps the coefficients of `z^0 ..= z^N`. Binary
//! operations on series with different truncations work at the smaller one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::json;
use thiserror::Error;

use crate::partitions::Partition;
use crate::symfun::SymE;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series constant term must be exactly 1 to invert, found {0}")]
    NotUnit(String),
    #[error("index z^{index} is beyond truncation degree {trunc}")]
    OutOfRange { index: usize, trunc: usize },
    #[error("series family {name} needs k >= 2, got k = {k}")]
    BadIndex { name: &'static str, k: u32 },
    #[error("unknown series name {0:?}")]
    UnknownName(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<SymE>,
}

impl Series {
    pub fn zero(trunc: usize) -> Self {
        Series {
            coeffs: vec![SymE::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        Self::constant(SymE::one(), trunc)
    }

    pub fn constant(c: SymE, trunc: usize) -> Self {
        Self::monomial(c, 0, trunc)
    }

    /// `c · z^degree`, or zero when the degree is past the truncation.
    pub fn monomial(c: SymE, degree: usize, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if degree <= trunc {
            s.coeffs[degree] = c;
        }
        s
    }

    /// Builds a series from an explicit coefficient list (its length fixes `N + 1`).
    pub fn from_coeffs(coeffs: Vec<SymE>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least the z^0 coefficient");
        Series { coeffs }
    }

    /// `Σ_{i=lo}^{hi} w(i) e_i z^i`, with `hi` defaulting to the truncation.
    pub fn weighted_e(trunc: usize, lo: u32, hi: Option<u32>, w: impl Fn(u32) -> i64) -> Self {
        let mut s = Self::zero(trunc);
        let hi = hi.map_or(trunc, |h| (h as usize).min(trunc));
        for i in lo as usize..=hi {
            s.coeffs[i] = SymE::ce(w(i as u32), i as u32);
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[SymE] {
        &self.coeffs
    }

    /// Coefficient of `z^d`; zero past the truncation.
    pub fn coeff(&self, d: usize) -> SymE {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn extract(&self, n: usize) -> Result<SymE, SeriesError> {
        self.coeffs.get(n).cloned().ok_or(SeriesError::OutOfRange {
            index: n,
            trunc: self.trunc(),
        })
    }

    pub fn truncate(&self, trunc: usize) -> Series {
        let mut coeffs: Vec<SymE> = self.coeffs.iter().take(trunc + 1).cloned().collect();
        coeffs.resize(trunc + 1, SymE::zero());
        Series { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SymE::is_zero)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Series {
        let c = c.into();
        Series {
            coeffs: self.coeffs.iter().map(|x| x.scale(c.clone())).collect(),
        }
    }

    /// Multiplies every coefficient by a symmetric function.
    pub fn mul_sym(&self, f: &SymE) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|x| x * f).collect(),
        }
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Series {
        let n = self.trunc();
        let mut out = Series::zero(n);
        for d in 0..=n {
            if d >= k {
                out.coeffs[d] = self.coeffs[d - k].clone();
            }
        }
        out
    }

    /// Multiplies by `c · z^k`.
    pub fn mul_monomial(&self, c: &SymE, k: usize) -> Series {
        self.shift(k).mul_sym(c)
    }

    /// Exact coefficient-wise division, used to take halves and quarters.
    pub fn div_exact(&self, d: i64) -> Option<Series> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.div_exact(d))
            .collect::<Option<Vec<_>>>()?;
        Some(Series { coeffs })
    }

    /// Inverse of a series whose constant term is 1, as `Σ_{i≥0} (1 − f)^i`.
    pub fn invert_unit(&self) -> Result<Series, SeriesError> {
        if self.coeffs[0] != SymE::one() {
            return Err(SeriesError::NotUnit(self.coeffs[0].to_string()));
        }
        let n = self.trunc();
        let gap = &Series::one(n) - self;
        let mut power = Series::one(n);
        let mut total = Series::one(n);
        for _ in 0..n {
            power = &power * &gap;
            if power.is_zero() {
                break;
            }
            total = &total + &power;
        }
        Ok(total)
    }

    /// Each `z^d` coefficient is homogeneous of degree `d`.
    pub fn is_graded(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(d, c)| c.is_homogeneous_of(d))
    }

    /// The first `(degree, λ, coefficient)` with a negative coefficient.
    pub fn negative_witness(&self) -> Option<(usize, Partition, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .find_map(|(d, c)| c.negative_witness().map(|(l, v)| (d, l, v)))
    }

    pub fn is_e_positive(&self) -> bool {
        self.negative_witness().is_none()
    }

    /// `{"trunc": N, "coeffs": [SymE json, ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "trunc": self.trunc(),
            "coeffs": self.coeffs.iter().map(SymE::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[N={}](", self.trunc())?;
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "; ")?;
            }
            first = false;
            write!(f, "z^{d}: {c}")?;
        }
        write!(f, ")")
    }
}

/// One line per nonzero coefficient: `[z^d] <e-expansion>`.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if any {
                writeln!(f)?;
            }
            any = true;
            write!(f, "[z^{d}] {c}")?;
        }
        if !any {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn zip_with(a: &Series, b: &Series, op: impl Fn(&SymE, &SymE) -> SymE) -> Series {
    let n = a.trunc().min(b.trunc());
    Series {
        coeffs: (0..=n).map(|d| op(&a.coeffs[d], &b.coeffs[d])).collect(),
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Cauchy product cut at the smaller truncation.
impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let n = self.trunc().min(rhs.trunc());
        let mut out = Series::zero(n);
        for i in 0..=n {
            let a = &self.coeffs[i];
            if a.is_zero() {
                continue;
            }
            for j in 0..=n - i {
                let b = &rhs.coeffs[j];
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// The named series built from `e_i` with integer weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Named {
    /// `E = Σ_{i≥0} e_i z^i`
    E,
    /// `D = E − zE' = 1 − Σ_{i≥2} (i−1) e_i z^i`
    D,
    /// `G = 1 − D`
    G,
    /// `K = Σ_{i≥2} i e_i z^i`
    K,
    /// `Σ_{i≥3} i(i−2) e_i z^i`
    F1,
    /// `Σ_{i≥3} (2i²−5i) e_i z^i`
    F2,
    /// `Σ_{i≥4} (i−1)(i−3) e_i z^i`
    F3,
    EGeq(u32),
    KGeq(u32),
    GGeq(u32),
    GLeq(u32),
}

impl Named {
    pub fn series(self, trunc: usize) -> Result<Series, SeriesError> {
        let check = |name: &'static str, k: u32| {
            if k < 2 {
                Err(SeriesError::BadIndex { name, k })
            } else {
                Ok(k)
            }
        };
        let s = match self {
            Named::E => Series::weighted_e(trunc, 0, None, |_| 1),
            Named::D => &Series::one(trunc) - &Named::G.series(trunc)?,
            Named::G => Series::weighted_e(trunc, 2, None, |i| i64::from(i) - 1),
            Named::K => Series::weighted_e(trunc, 2, None, i64::from),
            Named::F1 => Series::weighted_e(trunc, 3, None, |i| {
                let i = i64::from(i);
                i * (i - 2)
            }),
            Named::F2 => Series::weighted_e(trunc, 3, None, |i| {
                let i = i64::from(i);
                2 * i * i - 5 * i
            }),
            Named::F3 => Series::weighted_e(trunc, 4, None, |i| {
                let i = i64::from(i);
                (i - 1) * (i - 3)
            }),
            Named::EGeq(k) => Series::weighted_e(trunc, check("E_geq", k)?, None, |_| 1),
            Named::KGeq(k) => Series::weighted_e(trunc, check("K_geq", k)?, None, i64::from),
            Named::GGeq(k) => Series::weighted_e(trunc, check("G_geq", k)?, None, |i| i64::from(i) - 1),
            Named::GLeq(k) => Series::weighted_e(trunc, 2, Some(check("G_leq", k)?), |i| i64::from(i) - 1),
        };
        Ok(s)
    }
}

impl FromStr for Named {
    type Err = SeriesError;

    /// Plain names `E, D, G, K, F1, F2, F3`, or `E_geq:k`, `K_geq:k`, `G_geq:k`, `G_leq:k`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || SeriesError::UnknownName(s.to_string());
        let (head, k) = match s.split_once(':') {
            Some((h, k)) => (h, Some(k.parse::<u32>().map_err(|_| unknown())?)),
            None => (s, None),
        };
        let named = match (head.to_ascii_lowercase().replace('-', "_").as_str(), k) {
            ("e", None) => Named::E,
            ("d", None) => Named::D,
            ("g", None) => Named::G,
            ("k", None) => Named::K,
            ("f1", None) => Named::F1,
            ("f2", None) => Named::F2,
            ("f3", None) => Named::F3,
            ("e_geq", Some(k)) => Named::EGeq(k),
            ("k_geq", Some(k)) => Named::KGeq(k),
            ("g_geq", Some(k)) => Named::GGeq(k),
            ("g_leq", Some(k)) => Named::GLeq(k),
            _ => return Err(unknown()),
        };
        Ok(named)
    }
}

/// Shorthand for a named series that cannot fail (all `k ≥ 2`).
pub fn named(name: Named, trunc: usize) -> Series {
    name.series(trunc).expect("named series index must be at least 2")
}

/// `zE'(z) = Σ_{i≥1} i e_i z^i`
pub fn z_e_prime(trunc: usize) -> Series {
    Series::weighted_e(trunc, 1, None, i64::from)
}

/// `z²E''(z) = Σ_{i≥2} i(i−1) e_i z^i`
pub fn z2_e_double_prime(trunc: usize) -> Series {
    Series::weighted_e(trunc, 2, None, |i| {
        let i = i64::from(i);
        i * (i - 1)
    })
}

/// `1 / D(z)`
pub fn inverse_d(trunc: usize) -> Series {
    named(Named::D, trunc)
        .invert_unit()
        .expect("D has constant term 1")
}

/// Path generating function `Σ X_{P_n} z^n = E / D`.
pub fn path_gf(trunc: usize) -> Series {
    &named(Named::E, trunc) * &inverse_d(trunc)
}

/// Cycle generating function `Σ_{n≥2} X_{C_n} z^n = z²E'' / D`.
pub fn cycle_gf(trunc: usize) -> Series {
    &z2_e_double_prime(trunc) * &inverse_d(trunc)
}

/// `c · e_i z^i`, a common building block.
pub fn e_mono(c: i64, i: u32, trunc: usize) -> Series {
    Series::monomial(SymE::ce(c, i), i as usize, trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{epsilon, partitions_up_to};

    const N: usize = 12;

    fn s(text: &str) -> SymE {
        text.parse().unwrap()
    }

    #[test]
    fn ring_arithmetic() {
        let a = &Series::one(2) + &e_mono(1, 1, 2);
        let b = &Series::one(2) - &e_mono(1, 1, 2);
        let prod = &a * &b;
        assert_eq!(prod.coeff(0), SymE::one());
        assert!(prod.coeff(1).is_zero());
        assert_eq!(prod.coeff(2), s("-e[1,1]"));
        let sum = &named(Named::D, N) + &named(Named::G, N);
        assert_eq!(sum, Series::one(N));
    }

    #[test]
    fn mismatched_truncation_uses_smaller() {
        let a = named(Named::E, 5);
        let b = named(Named::E, 9);
        assert_eq!((&a + &b).trunc(), 5);
        assert_eq!((&a * &b).trunc(), 5);
    }

    #[test]
    fn path_three_from_e_over_d() {
        let x = &named(Named::E, N) * &inverse_d(N);
        assert_eq!(x.coeff(3), s("e[2,1] + 3*e[3]"));
    }

    #[test]
    fn inversion() {
        let inv = inverse_d(N);
        assert_eq!(inv.coeff(5).coefficient(&Partition::from_parts(vec![3, 2])), BigInt::from(4));
        assert_eq!(Series::one(N).invert_unit().unwrap(), Series::one(N));
        assert_eq!(&inv * &named(Named::D, N), Series::one(N));
        assert!(matches!(named(Named::E, 3).scale(2).invert_unit(), Err(SeriesError::NotUnit(_))));
        assert!(matches!(named(Named::G, 3).invert_unit(), Err(SeriesError::NotUnit(_))));
    }

    #[test]
    fn inverse_d_coefficients_are_epsilon() {
        let inv = inverse_d(10);
        for lambda in partitions_up_to(10) {
            assert_eq!(inv.coeff(lambda.size()).coefficient(&lambda), epsilon(&lambda), "{lambda:?}");
        }
    }

    #[test]
    fn named_values() {
        assert_eq!(named(Named::G, N).coeff(3), SymE::ce(2, 3));
        assert_eq!(named(Named::F2, N).coeff(3), SymE::ce(3, 3));
        assert!(named(Named::GGeq(4), N).coeff(3).is_zero());
        assert_eq!(named(Named::E, N).coeff(2), SymE::e(2));
        assert!(named(Named::D, N).coeff(1).is_zero());
        for k in 2..8 {
            let split = &named(Named::GLeq(k), N) + &named(Named::GGeq(k + 1), N);
            assert_eq!(split, named(Named::G, N));
        }
        assert!(matches!(Named::GGeq(1).series(4), Err(SeriesError::BadIndex { .. })));
        assert!(matches!(Named::EGeq(0).series(4), Err(SeriesError::BadIndex { .. })));
    }

    #[test]
    fn generating_functions() {
        let p = path_gf(N);
        assert_eq!(p.coeff(0), SymE::one());
        assert_eq!(p.extract(1).unwrap(), SymE::e(1));
        let c = cycle_gf(N);
        assert_eq!(c.coeff(3), SymE::ce(6, 3));
        assert!(matches!(p.extract(13), Err(SeriesError::OutOfRange { index: 13, trunc: 12 })));
    }

    #[test]
    fn grading() {
        for name in [Named::E, Named::D, Named::G, Named::K, Named::F1, Named::F2, Named::F3, Named::GLeq(4)] {
            assert!(named(name, N).is_graded(), "{name:?}");
        }
        assert!(path_gf(N).is_graded());
        assert!(cycle_gf(N).is_graded());
        assert!(inverse_d(N).is_graded());
    }

    #[test]
    fn parse_names() {
        assert_eq!("F2".parse::<Named>().unwrap(), Named::F2);
        assert_eq!("G_geq:3".parse::<Named>().unwrap(), Named::GGeq(3));
        assert_eq!("g-leq:4".parse::<Named>().unwrap(), Named::GLeq(4));
        assert!("Q".parse::<Named>().is_err());
    }

    #[test]
    fn shift_and_scale() {
        let e = named(Named::E, 4);
        let sh = e.shift(2);
        assert_eq!(sh.coeff(2), SymE::one());
        assert_eq!(sh.coeff(4), SymE::e(2));
        assert!(sh.coeff(1).is_zero());
        assert_eq!(e.scale(4).div_exact(4), Some(e.clone()));
        assert_eq!(e.scale(3).div_exact(2), None);
    }
}
