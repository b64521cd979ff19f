//! The moose graph `A_{n+2}`: a cycle on `n` vertices with a pendant vertex
//! hung on each of two adjacent cycle vertices. At `n = 2` the "cycle" is a
//! single edge and `A_4` is the path `P_4`.

use super::{ej, out_of_range, FamilyError, FamilyTag, SeqCache};
use crate::partitions::Partition;
use crate::symfun::SymE;

static MOOSE: SeqCache = SeqCache::new();

fn term(c: i64, parts: &[u32]) -> SymE {
    SymE::term(c, Partition::from_parts(parts.to_vec()))
}

/// `X_{A_{n+2}}` for `n ≥ 2`, from
/// `Σ_{j=2}^{n−2} (j−1)e_j X_{A_{n+2−j}} + (n+2)(n−1)e_{n+2}
///  + 2(n²−n−1)e_{n+1}e_1 + (n−1)(n−2)e_n e_1² + 2e_n e_2`.
pub fn moose(n: usize) -> Result<SymE, FamilyError> {
    if n < 2 {
        return Err(out_of_range("moose", format!("n = {n}, need n >= 2")));
    }
    Ok(MOOSE.get((FamilyTag::Moose, 0), n, |prev, m| match m {
        0 | 1 => SymE::zero(),
        2 => &(&term(2, &[2, 2]) + &term(2, &[3, 1])) + &ej(4, 4),
        3 => SymE::from_terms([
            (Partition::from_parts(vec![3, 1, 1]), 2),
            (Partition::from_parts(vec![3, 2]), 2),
            (Partition::from_parts(vec![4, 1]), 10),
            (Partition::from_parts(vec![5]), 10),
        ]),
        _ => {
            let mi = m as i64;
            let k = m as u32;
            let mut x = SymE::zero();
            for j in 2..=m - 2 {
                x += &(&ej(j as i64 - 1, j) * &prev[m - j]);
            }
            x += &ej((mi + 2) * (mi - 1), m + 2);
            x += &term(2 * (mi * mi - mi - 1), &[k + 1, 1]);
            x += &term((mi - 1) * (mi - 2), &[k, 1, 1]);
            x += &term(2, &[k, 2]);
            x
        }
    }))
}
