//! Brute-force chromatic symmetric functions.
//!
//! `X_G = Σ_{S ⊆ E} (−1)^{|S|} p_{λ(S)}`, where `λ(S)` lists the component
//! sizes of the spanning subgraph `(V, S)`. Each `p_λ` is rewritten in the
//! e-basis, so the result is exact and independent of every closed form in
//! [`crate::families`].

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::graphs::{Graph, GraphError};
use crate::partitions::Partition;
use crate::symfun::{power_sum_lambda_to_e, SymE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CsfError {
    #[error("graph has {vertices} vertices and {edges} edges; the oracle bound is {max_vertices} vertices / {max_edges} edges")]
    TooLarge {
        vertices: usize,
        edges: usize,
        max_vertices: usize,
        max_edges: usize,
    },
    #[error("{k}^{n} colorings is too many to enumerate")]
    TooManyColorings { n: usize, k: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Size limits for the subset enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBounds {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            max_vertices: 14,
            max_edges: 20,
        }
    }
}

impl OracleBounds {
    /// Defaults, with the vertex cap overridable through `CHROMASYM_MAX_N`.
    pub fn from_env() -> Self {
        let mut b = OracleBounds::default();
        if let Some(n) = std::env::var("CHROMASYM_MAX_N").ok().and_then(|s| s.trim().parse().ok()) {
            b.max_vertices = n;
        }
        b
    }

    fn admit(&self, g: &Graph) -> Result<(), CsfError> {
        if g.vertex_count() > self.max_vertices || g.edge_count() > self.max_edges {
            return Err(CsfError::TooLarge {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                max_vertices: self.max_vertices,
                max_edges: self.max_edges,
            });
        }
        Ok(())
    }
}

fn memo() -> &'static RwLock<HashMap<Vec<u8>, SymE>> {
    static MEMO: OnceLock<RwLock<HashMap<Vec<u8>, SymE>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `X_G` in the e-basis, within the default bounds (see [`OracleBounds::from_env`]).
pub fn csf(g: &Graph) -> Result<SymE, CsfError> {
    csf_bounded(g, &OracleBounds::from_env())
}

pub fn csf_bounded(g: &Graph, bounds: &OracleBounds) -> Result<SymE, CsfError> {
    bounds.admit(g)?;
    let key = g.canonical_bytes();
    if let Some(v) = memo().read().expect("csf memo poisoned").get(&key) {
        return Ok(v.clone());
    }
    let value = compute(g);
    // two threads may race to insert; both values are identical
    memo().write().expect("csf memo poisoned").insert(key, value.clone());
    Ok(value)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Signed count of edge subsets per component-size partition, for the
/// subsets whose bitmask lies in `range`.
fn tally(n: usize, edges: &[(usize, usize)], range: std::ops::Range<u64>) -> HashMap<Vec<u32>, i64> {
    let mut counts: HashMap<Vec<u32>, i64> = HashMap::new();
    let mut parent = vec![0usize; n];
    let mut size = vec![0u32; n];
    for mask in range {
        for v in 0..n {
            parent[v] = v;
            size[v] = 1;
        }
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (a, b) = edges[i];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[rb] = ra;
                size[ra] += size[rb];
            }
        }
        let mut shape: Vec<u32> = (0..n).filter(|&v| parent[v] == v).map(|v| size[v]).collect();
        shape.sort_unstable_by(|x, y| y.cmp(x));
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *counts.entry(shape).or_insert(0) += sign;
    }
    counts
}

fn compute(g: &Graph) -> SymE {
    let n = g.vertex_count();
    if n == 0 {
        return SymE::one();
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let total = 1u64 << edges.len();
    const CHUNK: u64 = 1 << 12;
    let counts = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| tally(n, &edges, c * CHUNK..((c + 1) * CHUNK).min(total)))
        .reduce(HashMap::new, |mut acc, part| {
            for (shape, c) in part {
                *acc.entry(shape).or_insert(0) += c;
            }
            acc
        });
    let mut out = SymE::zero();
    for (shape, c) in counts {
        if c != 0 {
            out += &power_sum_lambda_to_e(&Partition::from_parts(shape)).scale(c);
        }
    }
    out
}

/// Number of proper colorings of `g` from a palette of `k` colors, by enumeration.
pub fn count_colorings(g: &Graph, k: usize) -> Result<u64, CsfError> {
    let n = g.vertex_count();
    let limit = 10_000_000f64;
    if (k as f64).powi(n as i32) > limit {
        return Err(CsfError::TooManyColorings { n, k });
    }
    if k == 0 {
        return Ok(u64::from(n == 0));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut colors = vec![0usize; n];
    let mut count = 0u64;
    loop {
        if edges.iter().all(|&(a, b)| colors[a] != colors[b]) {
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                return Ok(count);
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Compares `X_G(1^k)` (each `e_i ↦ C(k, i)`) against a direct coloring count.
/// Returns both sides.
pub fn chromatic_counts(g: &Graph, k: usize) -> Result<(BigInt, BigInt), CsfError> {
    let brute = count_colorings(g, k)?;
    let specialized = csf(g)?.evaluate_at_ones(k);
    Ok((specialized, BigInt::from(brute)))
}

pub fn chromatic_count_check(g: &Graph, k: usize) -> Result<bool, CsfError> {
    let (a, b) = chromatic_counts(g, k)?;
    Ok(a == b)
}

/// `X_G = X_{G−ab} + X_{G−bc} − X_{G−{ab,bc}}` for a triangle `abc`.
pub fn triple_deletion_check(g: &Graph, (a, b, c): (usize, usize, usize)) -> Result<bool, CsfError> {
    for (u, v) in [(a, b), (b, c), (a, c)] {
        if !g.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v).into());
        }
    }
    let g1 = g.delete_edge(a, b)?;
    let g2 = g.delete_edge(b, c)?;
    let g12 = g1.delete_edge(b, c)?;
    Ok(csf(g)? == &(&csf(&g1)? + &csf(&g2)?) - &csf(&g12)?)
}

/// The variant for a path `v1 – v – v2` whose closing edge `v1v2` is absent:
/// `X_G = X_{(G−vv1)+v1v2} + X_{G−vv2} − X_{(G−{vv1,vv2})+v1v2}`.
pub fn almost_triangle_check(g: &Graph, v: usize, v1: usize, v2: usize) -> Result<bool, CsfError> {
    if g.has_edge(v1, v2) {
        return Err(GraphError::DuplicateEdge(v1, v2).into());
    }
    let g1 = g.delete_edge(v, v1)?.add_edge(v1, v2)?;
    let g2 = g.delete_edge(v, v2)?;
    let g12 = g.delete_edge(v, v1)?.delete_edge(v, v2)?.add_edge(v1, v2)?;
    Ok(csf(g)? == &(&csf(&g1)? + &csf(&g2)?) - &csf(&g12)?)
}

/// Hang a path `u – v – w` off vertex `u` of `h`; twinning the middle vertex
/// `v` of the two-edge pendant (before `w` is added) gives
/// `X_{H'_v} = 2 (X_{H''} − e_2 X_H)`. Returns `(lhs, rhs)`.
pub fn pendant_twin_sides(h: &Graph, u: usize) -> Result<(SymE, SymE), CsfError> {
    let (h1, v) = h.add_vertex();
    let h1 = h1.add_edge(u, v)?;
    let (h2, w) = h1.add_vertex();
    let h2 = h2.add_edge(v, w)?;
    let twinned = h1.twin(v)?;
    let lhs = csf(&twinned)?;
    let rhs = (&csf(&h2)? - &(&SymE::e(2) * &csf(h)?)).scale(2);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle, path, Family};

    fn sym(s: &str) -> SymE {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(csf(&path(3)).unwrap(), sym("e[2,1] + 3*e[3]"));
        assert_eq!(csf(&Graph::empty(0)).unwrap(), SymE::one());
        assert_eq!(csf(&path(2).twin(0).unwrap()).unwrap(), sym("6*e[3]"));
        assert_eq!(csf(&Family::TwinPathBoth { n: 2 }.graph().unwrap()).unwrap(), sym("24*e[4]"));
        assert_eq!(csf(&Graph::empty(3)).unwrap(), sym("e[1,1,1]"));
        assert_eq!(csf(&complete(4)).unwrap(), sym("24*e[4]"));
    }

    #[test]
    fn colorings() {
        assert_eq!(count_colorings(&path(3), 2).unwrap(), 2);
        assert_eq!(count_colorings(&cycle(3).unwrap(), 2).unwrap(), 0);
        assert_eq!(count_colorings(&cycle(4).unwrap(), 3).unwrap(), 18);
        assert!(chromatic_count_check(&path(3), 2).unwrap());
        assert!(chromatic_count_check(&cycle(3).unwrap(), 2).unwrap());
        assert_eq!(
            chromatic_counts(&cycle(4).unwrap(), 3).unwrap(),
            (BigInt::from(18), BigInt::from(18))
        );
        assert!(matches!(count_colorings(&path(12), 5), Err(CsfError::TooManyColorings { .. })));
    }

    #[test]
    fn bounds() {
        let tight = OracleBounds {
            max_vertices: 4,
            max_edges: 20,
        };
        assert!(matches!(csf_bounded(&path(5), &tight), Err(CsfError::TooLarge { .. })));
        assert!(csf_bounded(&path(4), &tight).is_ok());
    }

    #[test]
    fn triple_deletion() {
        let g = path(3).twin(0).unwrap();
        for t in g.triangles() {
            assert!(triple_deletion_check(&g, t).unwrap());
        }
        assert!(triple_deletion_check(&complete(4), (0, 1, 2)).unwrap());
        assert!(triple_deletion_check(&path(3), (0, 1, 2)).is_err());
        assert!(almost_triangle_check(&path(4), 1, 0, 2).unwrap());
        assert!(almost_triangle_check(&cycle(5).unwrap(), 0, 1, 4).unwrap());
    }

    #[test]
    fn pendant_twin() {
        let (l, r) = pendant_twin_sides(&path(3), 2).unwrap();
        assert_eq!(l, r);
    }
}
