use num_bigint::BigInt;

use super::{ej, reassemble, FamilyError, FamilyTag, Method, SeqCache};
use crate::partitions::{epsilon_without, Partition};
use crate::powerseries::{inverse_d, named, path_gf, cycle_gf, Named, Series};
use crate::symfun::SymE;

static PATHS: SeqCache = SeqCache::new();

/// `X_{P_n}` from `X_{P_n} = n e_n + Σ_{j=2}^{n−1} (j−1) e_j X_{P_{n−j}}`, `X_{P_0} = 1`.
pub fn path_seq(n: usize) -> SymE {
    PATHS.get((FamilyTag::Path, 0), n, |prev, m| {
        if m == 0 {
            return SymE::one();
        }
        let mut x = ej(m as i64, m);
        for j in 2..m {
            x += &(&ej(j as i64 - 1, j) * &prev[m - j]);
        }
        x
    })
}

/// `X_{C_n}` from `X_{C_n} = n(n−1) e_n + Σ_{j=2}^{n−2} (j−1) e_j X_{C_{n−j}}`.
///
/// `X_{C_1} = 0` and `X_{C_2} = 2e_2` are the conventions that make the
/// recurrence start; `n = 0` gives 0.
pub fn cycle_seq(n: usize) -> SymE {
    PATHS.get((FamilyTag::Cycle, 0), n, |prev, m| {
        if m == 0 {
            return SymE::zero();
        }
        let mut x = ej((m * (m - 1)) as i64, m);
        for j in 2..m.saturating_sub(1) {
            x += &(&ej(j as i64 - 1, j) * &prev[m - j]);
        }
        x
    })
}

pub(crate) fn path_by(n: usize, method: Method) -> Result<SymE, FamilyError> {
    match method {
        Method::Gf => Ok(path_gf(n + 1).coeff(n)),
        Method::Coefficients => reassemble(n, |l| path_cycle_coeff(FamilyTag::Path, l)),
        _ => Ok(path_seq(n)),
    }
}

pub(crate) fn cycle_by(n: usize, method: Method) -> Result<SymE, FamilyError> {
    if n == 0 {
        return Err(super::out_of_range("cycle", "n = 0"));
    }
    match method {
        Method::Gf => Ok(cycle_gf(n + 1).coeff(n)),
        Method::Coefficients => reassemble(n, |l| path_cycle_coeff(FamilyTag::Cycle, l)),
        _ => Ok(cycle_seq(n)),
    }
}

/// Coefficient of `e_λ` in `X_{P_{|λ|}}` (`Σ_a a·ε(λ−a)`) or in `X_{C_{|λ|}}`
/// (`Σ_a a(a−1)·ε(λ−a)`), summing over distinct parts `a`.
pub fn path_cycle_coeff(tag: FamilyTag, lambda: &Partition) -> Result<BigInt, FamilyError> {
    let weight: fn(i64) -> i64 = match tag {
        FamilyTag::Path => |a| a,
        FamilyTag::Cycle => |a| a * (a - 1),
        other => {
            return Err(super::out_of_range(
                "path-cycle-coeff",
                format!("family must be path or cycle, got {other}"),
            ))
        }
    };
    if lambda.is_empty() {
        return Err(super::out_of_range("path-cycle-coeff", "empty partition"));
    }
    Ok(lambda
        .support()
        .into_iter()
        .map(|a| weight(i64::from(a)) * epsilon_without(lambda, a))
        .sum())
}

/// The path generating function split as `K/D + e_1 z·G/D + (1 + e_1 z)`.
pub fn path_gf_split(trunc: usize) -> Series {
    let inv = inverse_d(trunc);
    let k = named(Named::K, trunc);
    let g = named(Named::G, trunc);
    let e1z = Series::monomial(SymE::e(1), 1, trunc);
    let one_e1z = &Series::one(trunc) + &e1z;
    &(&(&k * &inv) + &(&(&e1z * &g) * &inv)) + &one_e1z
}

/// One instance of a closed-form coefficient statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialCheck {
    pub case: String,
    pub expected: BigInt,
    pub actual: BigInt,
}

impl SpecialCheck {
    pub fn holds(&self) -> bool {
        self.expected == self.actual
    }
}

/// Closed-form coefficients of paths and cycles:
/// `[e_n]X_{P_n} = n`, `[e_{n−1}e_1]X_{P_n} = n−2`, `[e_n]X_{C_n} = n(n−1)` for `n ≥ 2`;
/// `[e_{n−2}e_2]X_{P_n} = 3n−8`, `[e_{n−2}e_2]X_{C_n} = n(n−3)` for `n ≥ 5`;
/// `[e_k^r]X_{P_{kr}} = k(k−1)^{r−1}`, `[e_k^r]X_{C_{kr}} = k(k−1)^r`;
/// `[e_2^2]X_{C_4} = 2`.
pub fn coeff_specials_check(max_n: usize, max_kr: usize) -> Vec<SpecialCheck> {
    let mut out = Vec::new();
    let mut push = |case: String, expected: i64, x: &SymE, parts: Vec<u32>| {
        out.push(SpecialCheck {
            case,
            expected: BigInt::from(expected),
            actual: x.coefficient(&Partition::from_parts(parts)),
        });
    };
    for n in 2..=max_n {
        let (p, c) = (path_seq(n), cycle_seq(n));
        let m = n as u32;
        let ni = n as i64;
        push(format!("[e_{n}]X_P{n}"), ni, &p, vec![m]);
        push(format!("[e_{}e_1]X_P{n}", n - 1), ni - 2, &p, vec![m - 1, 1]);
        push(format!("[e_{n}]X_C{n}"), ni * (ni - 1), &c, vec![m]);
        if n >= 5 {
            push(format!("[e_{}e_2]X_P{n}", n - 2), 3 * ni - 8, &p, vec![m - 2, 2]);
            push(format!("[e_{}e_2]X_C{n}", n - 2), ni * (ni - 3), &c, vec![m - 2, 2]);
        }
    }
    for k in 2..=max_kr {
        for r in 1..=max_kr / k {
            let ki = k as i64;
            let parts = vec![k as u32; r];
            push(
                format!("[e_{k}^{r}]X_P{}", k * r),
                ki * (ki - 1).pow(r as u32 - 1),
                &path_seq(k * r),
                parts.clone(),
            );
            push(
                format!("[e_{k}^{r}]X_C{}", k * r),
                ki * (ki - 1).pow(r as u32),
                &cycle_seq(k * r),
                parts,
            );
        }
    }
    push("[e_2^2]X_C4".into(), 2, &cycle_seq(4), vec![2, 2]);
    out
}
