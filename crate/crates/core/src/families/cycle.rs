//! The cycle twinned at a vertex, `C_{n,v}`, on `n + 1` vertices, plus the
//! D-graph and tadpole met on the way.

use num_bigint::BigInt;

use super::{cycle_seq, ej, out_of_range, path_seq, reassemble, FamilyError, FamilyTag, Method, SeqCache};
use crate::partitions::{epsilon_without, epsilon_without2, Partition};
use crate::powerseries::{cycle_gf, inverse_d, named, path_gf, Named, Series};
use crate::symfun::SymE;

static TWIN_CYCLE: SeqCache = SeqCache::new();

fn e1z(trunc: usize) -> Series {
    Series::monomial(SymE::e(1), 1, trunc)
}

fn e2z2(trunc: usize) -> Series {
    Series::monomial(SymE::e(2), 2, trunc)
}

/// `𝒳_{C_v} = Σ_{n≥3} X_{C_{n,v}} z^{n+1}` as
/// `2(2 + e_1z)𝒳_C − 2(3 − e_2z²)𝒳_P + 6(1 + e_1z) + 2e_2z² − 6e_3z³`.
pub fn twin_cycle_gf_from_cycles(trunc: usize) -> Series {
    let one = Series::one(trunc);
    let two_e1z = &one.scale(2) + &e1z(trunc);
    let three_e2z2 = &one.scale(3) - &e2z2(trunc);
    let mut s = (&two_e1z * &cycle_gf(trunc)).scale(2);
    s = &s - &(&three_e2z2 * &path_gf(trunc)).scale(2);
    s = &s + &(&one + &e1z(trunc)).scale(6);
    s = &s + &e2z2(trunc).scale(2);
    &s - &Series::monomial(ej(6, 3), 3, trunc)
}

/// `½𝒳_{C_v} = [F_2 + e_1zF_3 + e_2z²(E − 1 − e_1z)]/D − e_2z²/D + e_2z² − 3e_3z³`.
pub fn twin_cycle_gf_half_rewritten(trunc: usize) -> Series {
    let inv = inverse_d(trunc);
    let e_ge2 = named(Named::EGeq(2), trunc);
    let mut num = named(Named::F2, trunc);
    num = &num + &(&e1z(trunc) * &named(Named::F3, trunc));
    num = &num + &(&e2z2(trunc) * &e_ge2);
    let mut s = &num * &inv;
    s = &s - &(&e2z2(trunc) * &inv);
    s = &s + &e2z2(trunc);
    &s - &Series::monomial(ej(3, 3), 3, trunc)
}

/// `½𝒳_{C_v} = Σ_{i≥4}(2i²−5i)e_iz^i
///  + [e_1zF_3 + F_2G_{≥3} + e_2z²Σ_{i≥3}(2i²−6i+2)e_iz^i]/D`.
pub fn twin_cycle_gf_half(trunc: usize) -> Series {
    let head = Series::weighted_e(trunc, 4, None, |i| {
        let i = i64::from(i);
        2 * i * i - 5 * i
    });
    let quad = Series::weighted_e(trunc, 3, None, |i| {
        let i = i64::from(i);
        2 * i * i - 6 * i + 2
    });
    let mut num = &e1z(trunc) * &named(Named::F3, trunc);
    num = &num + &(&named(Named::F2, trunc) * &named(Named::GGeq(3), trunc));
    num = &num + &(&e2z2(trunc) * &quad);
    &head + &(&num * &inverse_d(trunc))
}

/// `X_{D_{n+1}} = 2X_{C_{n+1}} + e_1X_{C_n} − 2X_{P_{n+1}}`, `n ≥ 3`.
pub fn dgraph(n: usize) -> Result<SymE, FamilyError> {
    if n < 3 {
        return Err(out_of_range("dgraph", format!("n = {n}, need n >= 3")));
    }
    Ok(&(&cycle_seq(n + 1).scale(2) + &(&SymE::e(1) * &cycle_seq(n))) - &path_seq(n + 1).scale(2))
}

/// `X_{Tad_{n+1}} = X_{C_{n+1}} + e_1X_{C_n} − X_{P_{n+1}}`, `n ≥ 3`.
pub fn tadpole(n: usize) -> Result<SymE, FamilyError> {
    if n < 3 {
        return Err(out_of_range("tadpole", format!("n = {n}, need n >= 3")));
    }
    Ok(&(&cycle_seq(n + 1) + &(&SymE::e(1) * &cycle_seq(n))) - &path_seq(n + 1))
}

/// `X_{C_{n,v}}`. For `n ∈ {1, 2}` no graph exists; the values `2e_2` and
/// `6e_3` are the conventions that start the recurrence.
pub fn twin_cycle(n: usize, method: Method) -> Result<SymE, FamilyError> {
    if n < 1 {
        return Err(out_of_range("twin-cycle", "n = 0, need n >= 1"));
    }
    let unavailable = || FamilyError::MethodUnavailable {
        family: "twin-cycle",
        method,
    };
    if method == Method::Oracle {
        return super::compute(FamilyTag::TwinCycle, n, 0, method);
    }
    if n < 3 {
        return match method {
            Method::Identity | Method::Recurrence => Ok(recurrence(n)),
            Method::Coefficients if n == 2 => Ok(reassemble(3, twin_cycle_coeff)?.scale(2)),
            _ => Err(unavailable()),
        };
    }
    Ok(match method {
        Method::Identity => identity(n),
        Method::Gf => twin_cycle_gf_half(n + 2).coeff(n + 1).scale(2),
        Method::Recurrence => recurrence(n),
        Method::Coefficients => reassemble(n + 1, twin_cycle_coeff)?.scale(2),
        _ => return Err(unavailable()),
    })
}

/// `X_{C_{n,v}} = 4X_{C_{n+1}} + 2e_1X_{C_n} − 6X_{P_{n+1}} + 2e_2X_{P_{n−1}}`, `n ≥ 3`.
fn identity(n: usize) -> SymE {
    let mut x = cycle_seq(n + 1).scale(4);
    x += &(&SymE::e(1) * &cycle_seq(n)).scale(2);
    x -= &path_seq(n + 1).scale(6);
    x += &(&SymE::e(2) * &path_seq(n - 1)).scale(2);
    x
}

fn recurrence(n: usize) -> SymE {
    TWIN_CYCLE.get((FamilyTag::TwinCycle, 0), n, |prev, m| match m {
        0 => SymE::zero(),
        1 => ej(2, 2),
        2 => ej(6, 3),
        3 => ej(24, 4),
        4 => SymE::from_terms([
            (Partition::from_parts(vec![5]), 50),
            (Partition::from_parts(vec![4, 1]), 6),
            (Partition::from_parts(vec![3, 2]), 4),
        ]),
        _ => {
            let mi = m as i64;
            let mut x = SymE::zero();
            for k in 3..=m - 2 {
                x += &(&ej(k as i64 - 1, k) * &prev[m - k]);
            }
            x += &ej(2 * (mi + 1) * (2 * mi - 3), m + 1);
            x += &(&ej(2 * (mi - 1) * (mi - 3), m) * &SymE::e(1));
            let bracket = &prev[m - 2] - &ej(2 * (mi - 3), m - 1);
            x += &(&SymE::e(2) * &bracket);
            x
        }
    })
}

/// Coefficient of `e_λ` in `½X_{C_{|λ|−1, v}}`, for `|λ| ≥ 3`.
///
/// The pair sum in the mixed case runs over ordered pairs of part values
/// `a, b ≥ 3`, where `a = b` needs two copies of `a` (handled by removing both).
pub fn twin_cycle_coeff(lambda: &Partition) -> Result<BigInt, FamilyError> {
    let k = lambda.size();
    if k < 3 {
        return Err(out_of_range("twin-cycle-coeff", format!("|λ| = {k}, need |λ| >= 3")));
    }
    let quad = |a: u32| {
        let a = i64::from(a);
        2 * a * a - 5 * a
    };
    if lambda.len() == 1 {
        return Ok(BigInt::from(quad(k as u32)));
    }
    let m1 = lambda.multiplicity(1);
    let m2 = lambda.multiplicity(2);
    if m1 > 1 {
        return Ok(BigInt::from(0));
    }
    if m1 == 1 {
        let mu = lambda.remove_part(1).expect("contains a 1");
        return Ok(mu
            .support()
            .into_iter()
            .filter(|&i| i >= 4)
            .map(|i| (i64::from(i) - 1) * (i64::from(i) - 3) * epsilon_without(&mu, i))
            .sum());
    }
    if m2 == 0 {
        return Ok(lambda
            .support()
            .into_iter()
            .map(|a| quad(a) * epsilon_without(lambda, a))
            .sum());
    }
    if m2 == lambda.len() {
        return Ok(BigInt::from(0));
    }
    let big: Vec<u32> = lambda.support().into_iter().filter(|&a| a >= 3).collect();
    let mut total = BigInt::from(0);
    for &a in &big {
        for &b in &big {
            total += quad(a) * (i64::from(b) - 1) * epsilon_without2(lambda, a, b);
        }
    }
    for &c in &big {
        let c64 = i64::from(c);
        total += (2 * c64 * c64 - 6 * c64 + 2) * epsilon_without2(lambda, c, 2);
    }
    Ok(total)
}
