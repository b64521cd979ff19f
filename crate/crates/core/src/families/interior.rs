//! Paths twinned at an interior vertex, and the flagpole / triangle-path
//! graphs that the triple-deletion argument passes through.

use super::{ej, leaf, out_of_range, path_seq, FamilyError, FamilyTag, Method, SeqCache};
use crate::powerseries::{named, path_gf, Named, Series};
use crate::symfun::SymE;

static INTERIOR: SeqCache = SeqCache::new();

fn p(n: usize) -> SymE {
    path_seq(n)
}

/// `X_{F_{n,ℓ}} = X_{P_{n+1}} + e_1 X_{P_n} − X_{P_ℓ} X_{P_{n−ℓ+1}}`, for `1 ≤ ℓ ≤ n`.
pub fn flagpole(n: usize, ell: usize) -> Result<SymE, FamilyError> {
    if n < 1 || ell < 1 || ell > n {
        return Err(out_of_range("flagpole", format!("n = {n}, ell = {ell}")));
    }
    Ok(&(&p(n + 1) + &(&SymE::e(1) * &p(n))) - &(&p(ell) * &p(n - ell + 1)))
}

/// Left shift: `X_{T̃_{n,ℓ}} = X_{F_{n,ℓ}} + X_{P_{n+1}} − X_{P_{ℓ+1}} X_{P_{n−ℓ}}`, for `1 ≤ ℓ ≤ n−1`.
pub fn triangle_path(n: usize, ell: usize) -> Result<SymE, FamilyError> {
    if n < 2 || ell < 1 || ell > n - 1 {
        return Err(out_of_range("triangle-path", format!("n = {n}, ell = {ell}")));
    }
    Ok(&(&flagpole(n, ell)? + &p(n + 1)) - &(&p(ell + 1) * &p(n - ell)))
}

/// Right shift: `X_{T̃_{n,ℓ}} = X_{F_{n,ℓ+1}} + X_{P_{n+1}} − X_{P_ℓ} X_{P_{n−ℓ+1}}`.
pub fn triangle_path_right_shift(n: usize, ell: usize) -> Result<SymE, FamilyError> {
    if n < 2 || ell < 1 || ell > n - 1 {
        return Err(out_of_range("triangle-path", format!("n = {n}, ell = {ell}")));
    }
    Ok(&(&flagpole(n, ell + 1)? + &p(n + 1)) - &(&p(ell) * &p(n - ell + 1)))
}

fn check(n: usize, ell: usize) -> Result<(), FamilyError> {
    if n < 3 || ell < 2 || ell > n - 1 {
        return Err(out_of_range("twin-path-interior", format!("n = {n}, ell = {ell}")));
    }
    Ok(())
}

pub fn twin_path_interior(n: usize, ell: usize, method: Method) -> Result<SymE, FamilyError> {
    check(n, ell)?;
    let trunc = n + 2;
    Ok(match method {
        Method::Identity => identity(n, ell),
        Method::Gf => interior_gf(ell, trunc).coeff(n + 1),
        Method::EposGf => interior_gf_half_positive(ell, trunc).coeff(n + 1).scale(2),
        Method::Recurrence => recurrence(n, ell),
        Method::Oracle => return super::compute(FamilyTag::TwinPathInterior, n, ell, method),
        Method::Coefficients => {
            return Err(FamilyError::MethodUnavailable {
                family: "twin-path-interior",
                method,
            })
        }
    })
}

/// The six-term expansion
/// `X_{P_{n,ℓ}} = 4X_{P_{n+1}} + 2e_1X_{P_n} − 2X_{P_{ℓ−1}}X_{P_{n−ℓ+2}} − 2X_{P_ℓ}X_{P_{n−ℓ+1}}
///  − 2X_{P_{ℓ+1}}X_{P_{n−ℓ}} + 2e_2X_{P_{ℓ−1}}X_{P_{n−ℓ}}`.
fn identity(n: usize, ell: usize) -> SymE {
    let mut x = p(n + 1).scale(4);
    x += &(&SymE::e(1) * &p(n)).scale(2);
    x -= &(&p(ell - 1) * &p(n - ell + 2)).scale(2);
    x -= &(&p(ell) * &p(n - ell + 1)).scale(2);
    x -= &(&p(ell + 1) * &p(n - ell)).scale(2);
    x += &(&(&SymE::e(2) * &p(ell - 1)) * &p(n - ell)).scale(2);
    x
}

/// `X_{P_{n,ℓ}} = 2X_{T̃_{n,ℓ−1}} − X_{T̃_{ℓ,ℓ−1}} X_{P_{n−ℓ}}`.
pub fn twin_path_interior_via_triangles(n: usize, ell: usize) -> Result<SymE, FamilyError> {
    check(n, ell)?;
    Ok(&triangle_path(n, ell - 1)?.scale(2) - &(&triangle_path(ell, ell - 1)? * &p(n - ell)))
}

fn recurrence(n: usize, ell: usize) -> SymE {
    INTERIOR.get((FamilyTag::TwinPathInterior, ell), n, |prev, m| {
        if m < ell + 1 {
            return SymE::zero();
        }
        if m < 4 {
            return identity(m, ell);
        }
        let mi = m as i64;
        let mut x = SymE::zero();
        for j in 2..m - ell {
            x += &(&ej(j as i64 - 1, j) * &prev[m - j]);
        }
        x += &ej(4 * (mi + 1), m + 1);
        x += &(&SymE::e(1) * &ej(2 * mi, m));
        let mut inner = SymE::zero();
        for j in m + 2 - ell..m {
            inner += &(&ej(j as i64 - 1, j) * &p(m - j));
        }
        x += &(&SymE::e(1) * &inner).scale(2);
        for j in m + 3 - ell..=m {
            x += &(&ej(4 * (j as i64 - 1), j) * &p(m + 1 - j));
        }
        for j in m + 1 - ell..=m + 2 - ell {
            x += &(&ej(2 * (j as i64 - 2), j) * &p(m + 1 - j));
        }
        x += &(&ej(mi - ell as i64 - 2, m - ell) * &leaf::identity(ell));
        x
    })
}

/// `Σ_{j=lo}^{hi} X_{P_j} z^j`, empty when `hi < lo`.
fn path_poly(lo: usize, hi: usize, trunc: usize) -> Series {
    let mut s = Series::zero(trunc);
    for j in lo..=hi.min(trunc) {
        s = &s + &Series::monomial(p(j), j, trunc);
    }
    s
}

/// `f_ℓ = 2 + e_1z − X_{P_{ℓ−1}}z^{ℓ−1}(1 − e_2z²) − X_{P_ℓ}z^ℓ − X_{P_{ℓ+1}}z^{ℓ+1}`.
pub fn f_ell(ell: usize, trunc: usize) -> Series {
    assert!(ell >= 2, "f_ell needs ell >= 2");
    let mono = |c: SymE, d: usize| Series::monomial(c, d, trunc);
    let mut s = &mono(SymE::constant(2), 0) + &mono(SymE::e(1), 1);
    s = &s - &mono(p(ell - 1), ell - 1);
    s = &s + &mono(&SymE::e(2) * &p(ell - 1), ell + 1);
    s = &s - &mono(p(ell), ell);
    &s - &mono(p(ell + 1), ell + 1)
}

/// `g_ℓ = −Σ_{j=0}^{ℓ} X_{P_j}z^j − (1 + e_1z)Σ_{j=0}^{ℓ−2} X_{P_j}z^j − (X_{P_{ℓ+1}} − e_2X_{P_{ℓ−1}})z^{ℓ+1}`.
pub fn g_ell(ell: usize, trunc: usize) -> Series {
    assert!(ell >= 2, "g_ell needs ell >= 2");
    let one_e1z = &Series::one(trunc) + &Series::monomial(SymE::e(1), 1, trunc);
    let top = &p(ell + 1) - &(&SymE::e(2) * &p(ell - 1));
    let s = -&path_poly(0, ell, trunc);
    let s = &s - &(&one_e1z * &path_poly(0, ell - 2, trunc));
    &s - &Series::monomial(top, ell + 1, trunc)
}

/// `Σ_{n≥ℓ+1} X_{P_{n,ℓ}} z^{n+1} = 2𝒳_P f_ℓ + 2g_ℓ`.
pub fn interior_gf(ell: usize, trunc: usize) -> Series {
    (&(&path_gf(trunc) * &f_ell(ell, trunc)) + &g_ell(ell, trunc)).scale(2)
}

/// `f_ℓ = Σ_{i=3}^{ℓ+1}(i−2)e_iz^i + 2(D + G_{≥ℓ+2}) + Σ_{i=1}^{ℓ−2}(D + G_{≥ℓ+2−i})X_{P_i}z^i`.
pub fn f_ell_expanded(ell: usize, trunc: usize) -> Series {
    assert!(ell >= 2, "f_ell needs ell >= 2");
    let d = named(Named::D, trunc);
    let tail = |k: usize| &d + &named(Named::GGeq(k as u32), trunc);
    let mut s = Series::weighted_e(trunc, 3, Some(ell as u32 + 1), |i| i64::from(i) - 2);
    s = &s + &tail(ell + 2).scale(2);
    for i in 1..=ell.saturating_sub(2) {
        s = &s + &(&tail(ell + 2 - i) * &Series::monomial(p(i), i, trunc));
    }
    s
}

/// `𝒳_P f_ℓ = 𝒳_PΣ_{i=3}^{ℓ+1}(i−2)e_iz^i + 2(E + 𝒳_PG_{≥ℓ+2}) + Σ_{i=1}^{ℓ−2}(E + 𝒳_PG_{≥ℓ+2−i})X_{P_i}z^i`.
pub fn interior_path_times_f_ell(ell: usize, trunc: usize) -> Series {
    assert!(ell >= 2, "f_ell needs ell >= 2");
    let xp = path_gf(trunc);
    let e = named(Named::E, trunc);
    let tail = |k: usize| &e + &(&xp * &named(Named::GGeq(k as u32), trunc));
    let mut s = &xp * &Series::weighted_e(trunc, 3, Some(ell as u32 + 1), |i| i64::from(i) - 2);
    s = &s + &tail(ell + 2).scale(2);
    for i in 1..=ell.saturating_sub(2) {
        s = &s + &(&tail(ell + 2 - i) * &Series::monomial(p(i), i, trunc));
    }
    s
}

/// The cancellation-free expansion of `½Σ_{n≥ℓ+1} X_{P_{n,ℓ}} z^{n+1}`:
///
/// ```text
///   ℓe_{ℓ+1}z^{ℓ+1}·Σ_{i=1}^{ℓ−2}X_{P_i}z^i
/// + Σ_{i=3}^{ℓ}(i−1)e_iz^i·Σ_{j=0}^{i−4}X_{P_{ℓ−2−j}}z^{ℓ−2−j}
/// + E_{≥ℓ+2} + E_{≥ℓ+2}·Σ_{i=0}^{ℓ−2}X_{P_i}z^i
/// + (Σ_{i≥ℓ−1}X_{P_i}z^i)·Σ_{i=2}^{ℓ+1}(i−2)e_iz^i
/// + 2𝒳_PG_{≥ℓ+2} + 𝒳_PΣ_{i=1}^{ℓ−2}G_{≥ℓ+2−i}X_{P_i}z^i
/// ```
pub fn interior_gf_half_positive(ell: usize, trunc: usize) -> Series {
    assert!(ell >= 2, "needs ell >= 2");
    let xp = path_gf(trunc);
    let e_hi = named(Named::EGeq(ell as u32 + 2), trunc);
    let mut s = &Series::monomial(ej(ell as i64, ell + 1), ell + 1, trunc) * &path_poly(1, ell.saturating_sub(2), trunc);
    for i in 3..=ell {
        let mut inner = Series::zero(trunc);
        for j in 0..(i - 3) {
            inner = &inner + &Series::monomial(p(ell - 2 - j), ell - 2 - j, trunc);
        }
        s = &s + &(&Series::monomial(ej(i as i64 - 1, i), i, trunc) * &inner);
    }
    s = &s + &e_hi;
    s = &s + &(&e_hi * &path_poly(0, ell - 2, trunc));
    let upper = path_poly(ell - 1, trunc, trunc);
    s = &s + &(&upper * &Series::weighted_e(trunc, 2, Some(ell as u32 + 1), |i| i64::from(i) - 2));
    s = &s + &(&xp * &named(Named::GGeq(ell as u32 + 2), trunc)).scale(2);
    let mut mixed = Series::zero(trunc);
    for i in 1..=ell.saturating_sub(2) {
        mixed = &mixed + &(&named(Named::GGeq((ell + 2 - i) as u32), trunc) * &Series::monomial(p(i), i, trunc));
    }
    &s + &(&xp * &mixed)
}

/// `X_{P_{n,ℓ,v}} = 2(X_{P_{n+1,ℓ}} − e_2X_{P_{n−1,ℓ}})`: twinned at `ℓ`, then at the leaf `n`.
pub fn twin_interior_then_leaf(n: usize, ell: usize) -> Result<SymE, FamilyError> {
    if n < 4 || ell < 2 || ell > n - 2 {
        return Err(out_of_range("twin-interior-then-leaf", format!("n = {n}, ell = {ell}")));
    }
    Ok((&identity(n + 1, ell) - &(&SymE::e(2) * &identity(n - 1, ell))).scale(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flagpole_ends_are_paths() {
        for n in 1..8 {
            assert_eq!(flagpole(n, 1).unwrap(), p(n + 1));
            assert_eq!(flagpole(n, n).unwrap(), p(n + 1));
        }
        assert!(flagpole(3, 0).is_err());
        assert!(flagpole(3, 4).is_err());
    }

    #[test]
    fn shifts_agree() {
        for n in 2..9 {
            for ell in 1..n {
                assert_eq!(triangle_path(n, ell).unwrap(), triangle_path_right_shift(n, ell).unwrap(), "{n},{ell}");
            }
        }
        // the triangle at the end of the path is the leaf twin
        for n in 2..9 {
            assert_eq!(triangle_path(n, 1).unwrap(), leaf::identity(n));
        }
    }

    #[test]
    fn methods_agree() {
        for n in 3..=10 {
            for ell in 2..n {
                let id = identity(n, ell);
                assert_eq!(recurrence(n, ell), id, "recurrence {n},{ell}");
                assert_eq!(twin_path_interior(n, ell, Method::Gf).unwrap(), id, "gf {n},{ell}");
                assert_eq!(twin_path_interior(n, ell, Method::EposGf).unwrap(), id, "epos {n},{ell}");
                assert_eq!(twin_path_interior_via_triangles(n, ell).unwrap(), id, "triangles {n},{ell}");
            }
        }
    }

    #[test]
    fn f_ell_forms() {
        for ell in 2..=8 {
            let trunc = ell + 2;
            assert_eq!(f_ell(ell, trunc), f_ell_expanded(ell, trunc), "ell = {ell}");
        }
    }

    #[test]
    fn interior_then_leaf_is_positive() {
        assert!(twin_interior_then_leaf(5, 3).unwrap().is_e_positive());
        assert!(twin_interior_then_leaf(4, 3).is_err());
    }
}
