//! The path twinned at a leaf, `P_{n,v}`, on `n + 1` vertices.

use num_bigint::BigInt;

use super::{ej, out_of_range, path_seq, reassemble, FamilyError, FamilyTag, Method, SeqCache};
use crate::partitions::{epsilon_without2, Partition};
use crate::powerseries::{inverse_d, named, path_gf, Named, Series};
use crate::symfun::SymE;

static LEAF: SeqCache = SeqCache::new();

fn e1z(trunc: usize) -> Series {
    Series::monomial(SymE::e(1), 1, trunc)
}

/// `𝒳_{P_v} = Σ_{n≥1} X_{P_{n,v}} z^{n+1}` as `2(1 − e_2 z²)𝒳_P − 2 − 2e_1 z`.
pub fn leaf_gf_from_path(trunc: usize) -> Series {
    let one_minus = &Series::one(trunc) - &Series::monomial(SymE::e(2), 2, trunc);
    let head = &Series::one(trunc) + &e1z(trunc);
    (&(&one_minus * &path_gf(trunc)) - &head).scale(2)
}

/// `½𝒳_{P_v} = (K + e_1 z G)·G_{≥3}/D + e_2 z² + Σ_{i≥3} i e_i z^i + e_1 z·G_{≥3}`.
pub fn leaf_gf_half(trunc: usize) -> Series {
    let k = named(Named::K, trunc);
    let g = named(Named::G, trunc);
    let g3 = named(Named::GGeq(3), trunc);
    let inv = inverse_d(trunc);
    let e1z = e1z(trunc);
    let front = &(&k + &(&e1z * &g)) * &(&g3 * &inv);
    let tail = &(&Series::monomial(SymE::e(2), 2, trunc) + &named(Named::KGeq(3), trunc)) + &(&e1z * &g3);
    &front + &tail
}

/// `½𝒳_{P_v} = 𝒳_P·G_{≥3} + Σ_{i≥2} e_i z^i`.
pub fn leaf_gf_half_path(trunc: usize) -> Series {
    &(&path_gf(trunc) * &named(Named::GGeq(3), trunc)) + &named(Named::EGeq(2), trunc)
}

fn check(n: usize) -> Result<(), FamilyError> {
    if n < 1 {
        return Err(out_of_range("twin-path-leaf", "n = 0, need n >= 1"));
    }
    Ok(())
}

pub fn twin_path_leaf(n: usize, method: Method) -> Result<SymE, FamilyError> {
    check(n)?;
    let trunc = n + 2;
    Ok(match method {
        Method::Identity => identity(n),
        Method::Gf => leaf_gf_half(trunc).coeff(n + 1).scale(2),
        Method::EposGf => leaf_gf_half_path(trunc).coeff(n + 1).scale(2),
        Method::Recurrence => recurrence(n),
        Method::Coefficients => reassemble(n + 1, twin_path_leaf_coeff)?,
        Method::Oracle => return super::compute(FamilyTag::TwinPathLeaf, n, 0, Method::Oracle),
    })
}

/// `X_{P_{n,v}} = 2X_{P_{n+1}} − 2e_2 X_{P_{n−1}}`.
pub(crate) fn identity(n: usize) -> SymE {
    (&path_seq(n + 1) - &(&SymE::e(2) * &path_seq(n - 1))).scale(2)
}

/// `X_{P_{n,v}} = 2(n+1)e_{n+1} + 2Σ_{j=3}^{n} (j−1) e_j X_{P_{n+1−j}}`, valid for `n ≥ 2`.
pub fn twin_path_leaf_expansion(n: usize) -> Result<SymE, FamilyError> {
    if n < 2 {
        return Err(out_of_range("twin-path-leaf", "expansion needs n >= 2"));
    }
    let mut x = ej(2 * (n as i64 + 1), n + 1);
    for j in 3..=n {
        x += &(&ej(2 * (j as i64 - 1), j) * &path_seq(n + 1 - j));
    }
    Ok(x)
}

fn recurrence(n: usize) -> SymE {
    LEAF.get((FamilyTag::TwinPathLeaf, 0), n, |prev, m| match m {
        0 => SymE::zero(),
        1 => ej(2, 2),
        2 => ej(6, 3),
        3 => &ej(8, 4) + &(&ej(4, 3) * &SymE::e(1)),
        _ => {
            let mi = m as i64;
            let mut x = ej(2 * (mi + 1), m + 1);
            x += &(&ej(2 * (mi - 1), m) * &SymE::e(1));
            x += &(&ej(2 * (mi - 3), m - 1) * &SymE::e(2));
            for j in 2..=m - 2 {
                x += &(&ej(j as i64 - 1, j) * &prev[m - j]);
            }
            x
        }
    })
}

/// Coefficient of `e_λ` in `X_{P_{|λ|−1, v}}`, for `|λ| ≥ 2`.
///
/// One-part and `(k−1, 1)` shapes have closed values; a shape `1 ∪ μ` with
/// `ℓ(μ) ≥ 2` is `2Σ (a−1)(b−1) ε(μ−a−b)` and any other shape is
/// `2Σ a(b−1) ε(λ−a−b)`, both over part values `a ≥ 2`, `b ≥ 3` of the
/// relevant partition (removing two copies when `a = b`).
pub fn twin_path_leaf_coeff(lambda: &Partition) -> Result<BigInt, FamilyError> {
    let k = lambda.size();
    if k < 2 {
        return Err(out_of_range("twin-path-leaf-coeff", format!("|λ| = {k}, need |λ| >= 2")));
    }
    let ki = k as i64;
    if lambda.len() == 1 {
        return Ok(BigInt::from(if k == 2 { 2 } else { 2 * ki }));
    }
    if lambda.len() == 2 && lambda.parts()[1] == 1 {
        return Ok(BigInt::from(if k >= 4 { 2 * (ki - 2) } else { 0 }));
    }
    let pair_sum = |mu: &Partition, w: fn(i64, i64) -> i64| -> BigInt {
        let support = mu.support();
        let mut total = BigInt::from(0);
        for &a in support.iter().filter(|&&a| a >= 2) {
            for &b in support.iter().filter(|&&b| b >= 3) {
                total += w(i64::from(a), i64::from(b)) * epsilon_without2(mu, a, b);
            }
        }
        2 * total
    };
    if lambda.contains(1) {
        let mu = lambda.remove_part(1).expect("contains a 1");
        Ok(pair_sum(&mu, |a, b| (a - 1) * (b - 1)))
    } else {
        Ok(pair_sum(lambda, |a, b| a * (b - 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> SymE {
        s.parse().unwrap()
    }

    #[test]
    fn printed_values() {
        for m in [Method::Identity, Method::Gf, Method::EposGf, Method::Recurrence, Method::Coefficients] {
            assert_eq!(twin_path_leaf(1, m).unwrap(), sym("2*e[2]"), "{m}");
            assert_eq!(twin_path_leaf(2, m).unwrap(), sym("6*e[3]"), "{m}");
            assert_eq!(twin_path_leaf(3, m).unwrap(), sym("4*e[3,1] + 8*e[4]"), "{m}");
            assert_eq!(twin_path_leaf(4, m).unwrap(), sym("8*e[3,2] + 6*e[4,1] + 10*e[5]"), "{m}");
        }
        assert!(twin_path_leaf(0, Method::Identity).is_err());
    }

    #[test]
    fn methods_agree() {
        for n in 1..=10 {
            let id = identity(n);
            assert_eq!(recurrence(n), id, "n = {n}");
            assert_eq!(twin_path_leaf(n, Method::Gf).unwrap(), id, "n = {n}");
            assert_eq!(twin_path_leaf(n, Method::Coefficients).unwrap(), id, "n = {n}");
            if n >= 2 {
                assert_eq!(twin_path_leaf_expansion(n).unwrap(), id, "n = {n}");
            }
        }
    }

    #[test]
    fn coefficient_cases() {
        let c = |s: &str| twin_path_leaf_coeff(&s.parse().unwrap()).unwrap();
        assert_eq!(c("5"), BigInt::from(10));
        assert_eq!(c("2"), BigInt::from(2));
        assert_eq!(c("3,2,2"), BigInt::from(8));
        assert_eq!(c("3,2,2,1"), BigInt::from(4));
        assert_eq!(c("2,2,2"), BigInt::from(0));
        assert_eq!(c("2,2,1"), BigInt::from(0));
        assert_eq!(c("5,1"), BigInt::from(8));
        assert_eq!(c("5,2"), BigInt::from(16));
        assert_eq!(c("5,3"), BigInt::from(2 * (2 * 15 - 5 - 3)));
        assert_eq!(c("4,4"), BigInt::from(24));
    }
}
