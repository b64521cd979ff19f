//! Test-side ground truth that shares no code with the library's oracle:
//! X_G is evaluated at random points mod a prime, straight from the
//! edge-subset sum, and compared with e-expansions evaluated at the same
//! points. Two symmetric functions of degree n in n variables that agree at
//! a few random points mod 2^61 − 1 are equal with overwhelming probability.
#![allow(dead_code)]

use chromasym::{Graph, SymE};
use num_bigint::BigInt;

pub const P: u64 = (1 << 61) - 1;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn add(a: u64, b: u64) -> u64 {
    (a + b) % P
}

fn reduce(c: &BigInt) -> u64 {
    let p = BigInt::from(P);
    let r = ((c % &p) + &p) % &p;
    r.try_into().expect("reduced below 2^61")
}

/// Deterministic points from splitmix64.
pub fn points(vars: usize, count: usize, seed: u64) -> Vec<Vec<u64>> {
    let mut s = seed;
    let mut next = move || {
        s = s.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = s;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        (z ^ (z >> 31)) % P
    };
    (0..count).map(|_| (0..vars).map(|_| next()).collect()).collect()
}

/// `Σ_{S ⊆ E} (−1)^{|S|} Π_{components C of (V, S)} p_{|C|}(x)` mod P.
pub fn brute_value(g: &Graph, x: &[u64]) -> u64 {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    // p_k(x) for k = 0..=n
    let p: Vec<u64> = (0..=n)
        .map(|k| x.iter().fold(0, |acc, &xi| add(acc, (0..k).fold(1, |t, _| mul(t, xi)))))
        .collect();
    let mut total = 0u64;
    for mask in 0u64..(1u64 << edges.len()) {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
        let mut size = vec![0usize; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            size[r] += 1;
        }
        let term = size.iter().filter(|&&s| s > 0).fold(1, |t, &s| mul(t, p[s]));
        total = if mask.count_ones() % 2 == 0 { add(total, term) } else { add(total, P - term) };
    }
    total
}

/// An e-expansion evaluated at `x` mod P.
pub fn sym_value(f: &SymE, x: &[u64]) -> u64 {
    let top = f.iter().map(|(l, _)| l.parts().first().copied().unwrap_or(0) as usize).max().unwrap_or(0);
    // e_k(x) by the usual one-variable-at-a-time recurrence
    let mut e = vec![0u64; top.max(1) + 1];
    e[0] = 1;
    for &xi in x {
        for k in (1..=top).rev() {
            e[k] = add(e[k], mul(e[k - 1], xi));
        }
    }
    f.iter().fold(0, |acc, (l, c)| {
        let prod = l.parts().iter().fold(1, |t, &part| mul(t, e[part as usize]));
        add(acc, mul(reduce(c), prod))
    })
}

/// Does `f` equal X_G? Checked at three points in |V| variables.
pub fn matches_graph(g: &Graph, f: &SymE) -> bool {
    let n = g.vertex_count().max(1);
    points(n, 3, 0xC0FFEE ^ n as u64)
        .iter()
        .all(|x| brute_value(g, x) == sym_value(f, x))
}
