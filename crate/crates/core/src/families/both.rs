//! The path twinned at both leaves, `P_{n,v,w}`, on `n + 2` vertices.

use num_bigint::BigInt;

use super::{ej, out_of_range, path_seq, FamilyError, FamilyTag, Method, SeqCache};
use crate::partitions::Partition;
use crate::powerseries::{inverse_d, named, path_gf, Named, Series};
use crate::symfun::SymE;

static BOTH: SeqCache = SeqCache::new();

fn e_prod(c: i64, parts: &[u32]) -> SymE {
    SymE::term(c, Partition::from_parts(parts.to_vec()))
}

/// `α = 2e_2²z⁴ − (8e_4 z⁴ + 4e_3e_1 z⁴ + 6e_3 z³ + 2e_2 z²)`: the low-order
/// correction relating `Σ_{n≥3} X_{P_{n,v,w}} z^{n+2}` to `2(1 − e_2z²)𝒳_{P_v}`.
pub fn alpha(trunc: usize) -> Series {
    let mut coeffs = vec![SymE::zero(); trunc + 1];
    let mut put = |d: usize, x: SymE| {
        if d <= trunc {
            coeffs[d] += &x;
        }
    };
    put(4, e_prod(2, &[2, 2]));
    put(4, -e_prod(8, &[4]));
    put(4, -e_prod(4, &[3, 1]));
    put(3, -e_prod(6, &[3]));
    put(2, -e_prod(2, &[2]));
    Series::from_coeffs(coeffs)
}

/// `Σ_{i≥lo} (i − 2) e_i z^i`
fn weighted_minus_two(trunc: usize, lo: u32) -> Series {
    Series::weighted_e(trunc, lo, None, |i| i64::from(i) - 2)
}

/// `¼Σ_{n≥3} X_{P_{n,v,w}} z^{n+2}` as
/// `(K + e_1zG)·G_{≥3}²/D + e_1z·G_{≥3}² + G_{≥3}·Σ_{i≥3} i e_i z^i
///  + e_1z·Σ_{i≥4}(i−1)e_i z^i + e_2z²·Σ_{i≥3}(i−2)e_i z^i + Σ_{i≥5} i e_i z^i`.
pub fn both_leaves_gf_quarter(trunc: usize) -> Series {
    let k = named(Named::K, trunc);
    let g = named(Named::G, trunc);
    let g3 = named(Named::GGeq(3), trunc);
    let g3sq = &g3 * &g3;
    let e1z = Series::monomial(SymE::e(1), 1, trunc);
    let e2z2 = Series::monomial(SymE::e(2), 2, trunc);
    let mut s = &(&k + &(&e1z * &g)) * &(&g3sq * &inverse_d(trunc));
    s = &s + &(&e1z * &g3sq);
    s = &s + &(&g3 * &named(Named::KGeq(3), trunc));
    s = &s + &(&e1z * &named(Named::GGeq(4), trunc));
    s = &s + &(&e2z2 * &weighted_minus_two(trunc, 3));
    &s + &named(Named::KGeq(5), trunc)
}

/// The same series as `𝒳_P·G_{≥3}² + K_{≥5} + G_{≥3}·Σ_{i≥3} e_i z^i + e_1z·G_{≥4}
/// + e_2z²·Σ_{i≥3}(i−2)e_i z^i`.
pub fn both_leaves_gf_quarter_path(trunc: usize) -> Series {
    let g3 = named(Named::GGeq(3), trunc);
    let e1z = Series::monomial(SymE::e(1), 1, trunc);
    let e2z2 = Series::monomial(SymE::e(2), 2, trunc);
    let mut s = &path_gf(trunc) * &(&g3 * &g3);
    s = &s + &named(Named::KGeq(5), trunc);
    s = &s + &(&g3 * &named(Named::EGeq(3), trunc));
    s = &s + &(&e1z * &named(Named::GGeq(4), trunc));
    &s + &(&e2z2 * &weighted_minus_two(trunc, 3))
}

fn check(n: usize) -> Result<(), FamilyError> {
    if n < 2 {
        return Err(out_of_range("twin-path-both", format!("n = {n}, need n >= 2")));
    }
    Ok(())
}

pub fn twin_path_both(n: usize, method: Method) -> Result<SymE, FamilyError> {
    check(n)?;
    if n == 2 {
        // K_4: the series below only start at n = 3
        return match method {
            Method::Identity | Method::Recurrence => Ok(ej(24, 4)),
            Method::Oracle => super::compute(FamilyTag::TwinPathBoth, n, 0, method),
            _ => Err(FamilyError::MethodUnavailable {
                family: "twin-path-both",
                method,
            }),
        };
    }
    let trunc = n + 3;
    Ok(match method {
        Method::Identity => identity(n),
        Method::Gf => both_leaves_gf_quarter(trunc).coeff(n + 2).scale(4),
        Method::EposGf => both_leaves_gf_quarter_path(trunc).coeff(n + 2).scale(4),
        Method::Recurrence => recurrence(n),
        Method::Oracle => return super::compute(FamilyTag::TwinPathBoth, n, 0, method),
        Method::Coefficients => {
            return Err(FamilyError::MethodUnavailable {
                family: "twin-path-both",
                method,
            })
        }
    })
}

/// `X_{P_{n,v,w}} = 4(X_{P_{n+2}} − 2e_2 X_{P_n} + e_2² X_{P_{n−2}})` for `n ≥ 3`.
fn identity(n: usize) -> SymE {
    let e2 = SymE::e(2);
    let x = &(&path_seq(n + 2) - &(&e2 * &path_seq(n)).scale(2)) + &(&(&e2 * &e2) * &path_seq(n - 2));
    x.scale(4)
}

/// `X_{P_{n,v,w}} = 2X_{P_{n+1,v}} − 2e_2 X_{P_{n−1,v}}` for `n ≥ 3`.
pub fn both_leaves_from_leaf_twins(n: usize) -> Result<SymE, FamilyError> {
    if n < 3 {
        return Err(out_of_range("twin-path-both", "leaf-twin form needs n >= 3"));
    }
    let leaf = super::leaf::identity;
    Ok((&leaf(n + 1) - &(&SymE::e(2) * &leaf(n - 1))).scale(2))
}

fn recurrence(n: usize) -> SymE {
    BOTH.get((FamilyTag::TwinPathBoth, 0), n, |prev, m| match m {
        0 | 1 => SymE::zero(),
        2 => ej(24, 4),
        3 => SymE::from_terms([
            (Partition::from_parts(vec![3, 2]), 4),
            (Partition::from_parts(vec![4, 1]), 12),
            (Partition::from_parts(vec![5]), 20),
        ]),
        4 => SymE::from_terms([
            (Partition::from_parts(vec![3, 3]), 24),
            (Partition::from_parts(vec![4, 2]), 8),
            (Partition::from_parts(vec![5, 1]), 16),
            (Partition::from_parts(vec![6]), 24),
        ]),
        5 => SymE::from_terms([
            (Partition::from_parts(vec![3, 3, 1]), 16),
            (Partition::from_parts(vec![4, 3]), 68),
            (Partition::from_parts(vec![5, 2]), 12),
            (Partition::from_parts(vec![6, 1]), 20),
            (Partition::from_parts(vec![7]), 28),
        ]),
        _ => {
            let mi = m as i64;
            let m32 = m as u32;
            let mut x = SymE::zero();
            for j in 3..=m - 3 {
                x += &(&ej(j as i64 - 1, j) * &prev[m - j]);
            }
            // four times the non-recursive terms
            x += &e_prod(4 * (mi + 2), &[m32 + 2]);
            x += &e_prod(4 * mi, &[m32 + 1, 1]);
            x += &e_prod(12 * (mi - 2), &[m32 - 1, 3]);
            x += &e_prod(8 * (mi - 3), &[m32 - 2, 3, 1]);
            x += &e_prod(16 * (mi - 3), &[m32 - 2, 4]);
            let mut bracket = prev[m - 2].clone();
            bracket -= &e_prod(8, &[m32]);
            bracket -= &e_prod(4 * (mi - 4), &[m32 - 2, 2]);
            bracket -= &e_prod(4 * (mi - 2), &[m32 - 1, 1]);
            x += &(&SymE::e(2) * &bracket);
            x
        }
    })
}

/// Coefficient of `e_λ` in `X_{P_{|λ|−2, v, w}}` from the closed cases:
/// one- and two-part shapes, three-part shapes `(i, j, 1)`, shapes with
/// two or more 1s, and `(3, 3, 2^{k+1})` with or without a trailing 1.
/// Anything else is [`FamilyError::NotCovered`].
pub fn twin_path_both_coeff(lambda: &Partition) -> Result<BigInt, FamilyError> {
    let size = lambda.size();
    if size < 5 {
        return Err(out_of_range("twin-path-both-coeff", format!("|λ| = {size}, need |λ| >= 5")));
    }
    let p = lambda.parts();
    let value = |v: i64| Ok(BigInt::from(v));
    if lambda.multiplicity(1) >= 2 {
        return value(0);
    }
    match p.len() {
        1 => return value(4 * size as i64),
        2 => {
            let (i, j) = (i64::from(p[0]), i64::from(p[1]));
            return match j {
                1 => value(4 * (i - 1)),
                2 => value(4 * (i - 2)),
                _ if i == j => value(4 * i * (i - 1)),
                _ => value(4 * (j - 1) * i + 4 * (i - 1) * j),
            };
        }
        3 if p[2] == 1 => {
            let (i, j) = (i64::from(p[0]), i64::from(p[1]));
            return if j < 3 {
                value(0)
            } else if i == j {
                value(4 * (i - 1) * (i - 1))
            } else {
                value(8 * (i - 1) * (j - 1))
            };
        }
        _ => {}
    }
    let ones = lambda.multiplicity(1);
    let twos = lambda.multiplicity(2);
    if lambda.multiplicity(3) == 2 && twos >= 1 && 2 + twos + ones == p.len() {
        return value(if ones == 1 { 16 } else { 32 });
    }
    Err(FamilyError::NotCovered(lambda.clone()))
}
