//! Simple labeled graphs and the constructions used for twinned paths and cycles.
//!
//! Vertices are `0..n`. Named families lay the path (or cycle) spine out on
//! `0..n` and append extra vertices in the order they are introduced, so
//! the usual 1-based vertex `ℓ` of `P_n` is vertex `ℓ - 1` here.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    Loop(usize),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),
    #[error("edge {0}-{1} is already present")]
    DuplicateEdge(usize, usize),
    #[error("{family}: parameters out of range ({detail})")]
    BadParameters { family: &'static str, detail: String },
    #[error("cannot parse graph spec {spec:?}: {reason}")]
    Parse { spec: String, reason: String },
}

/// A simple undirected graph; edges are stored as `(min, max)` pairs.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if !self.edges.insert(ordered(u, v)) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&ordered(u, v))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Degrees sorted in decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// All triangles `(a, b, c)` with `a < b < c`.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            for c in b + 1..self.n {
                if self.has_edge(a, c) && self.has_edge(b, c) {
                    out.push((a, b, c));
                }
            }
        }
        out
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        if !g.edges.remove(&ordered(u, v)) {
            return Err(GraphError::MissingEdge(u, v));
        }
        Ok(g)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Adds a new isolated vertex and returns its index alongside the graph.
    pub fn add_vertex(&self) -> (Graph, usize) {
        let mut g = self.clone();
        g.n += 1;
        (g, self.n)
    }

    /// `G ⊔ H`, with the vertices of `H` shifted by `n(G)`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        g.n += other.n;
        g.edges.extend(other.edges.iter().map(|&(a, b)| (a + self.n, b + self.n)));
        g
    }

    /// Adds a clone `v'` (index `n`) adjacent to `v` and to every neighbor of `v`.
    pub fn twin(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let neighbors = self.neighbors(v);
        let (mut g, clone) = self.add_vertex();
        g.edges.insert((v, clone));
        for u in neighbors {
            g.edges.insert(ordered(u, clone));
        }
        Ok(g)
    }

    /// Compact byte encoding of `(n, edges)`, used as a memo key.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(2 + 2 * self.edges.len());
        out.extend_from_slice(&(self.n as u16).to_le_bytes());
        for &(a, b) in &self.edges {
            out.push(a as u8);
            out.push(b as u8);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Explicit form `g:n=5;edges=0-1,1-2`.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "g:n={};edges={}", self.n, edges.join(","))
    }
}

/// `P_n` on vertices `0..n`.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.edges.insert((i - 1, i));
    }
    g
}

/// `C_n` for `n ≥ 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(bad("cycle", format!("n = {n}, need n >= 3")));
    }
    let mut g = path(n);
    g.edges.insert((0, n - 1));
    Ok(g)
}

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            g.edges.insert((a, b));
        }
    }
    g
}

fn bad(family: &'static str, detail: String) -> GraphError {
    GraphError::BadParameters { family, detail }
}

/// The graph families built from paths and cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `F_{n,ℓ}`: `P_n` plus a pendant vertex at `ℓ`; `n ≥ 1`, `1 ≤ ℓ ≤ n`.
    Flagpole { n: usize, ell: usize },
    /// `T̃_{n,ℓ}`: `P_n` plus a vertex adjacent to `ℓ` and `ℓ+1`; `n ≥ 2`, `1 ≤ ℓ ≤ n−1`.
    TrianglePath { n: usize, ell: usize },
    /// `D_{n+1}`: `C_{n,v}` without the edge `uv`; `n ≥ 3`.
    DGraph { n: usize },
    /// `Tad_{n+1}`: `C_{n,v}` without the edges `uv` and `vv'`; `n ≥ 3`.
    Tadpole { n: usize },
    /// `A_{n+2}`: `C_n` with a leaf on each end of one edge; `n ≥ 2`, where `A_4 = P_4`.
    Moose { n: usize },
    /// `P_{n,v}` twinned at the leaf `n`; `n ≥ 1`.
    TwinPathLeaf { n: usize },
    /// `P_{n,v,w}` twinned at both leaves; `n ≥ 2`.
    TwinPathBoth { n: usize },
    /// `P_{n,ℓ}` twinned at interior vertex `ℓ`; `n ≥ 3`, `2 ≤ ℓ ≤ n−1`.
    TwinPathInterior { n: usize, ell: usize },
    /// `C_{n,v}`; `n ≥ 3`.
    TwinCycle { n: usize },
    /// `P_{n,ℓ,v}`: twinned at `ℓ`, then at the leaf `n`; `n ≥ 4`, `2 ≤ ℓ ≤ n−2`.
    TwinInteriorThenLeaf { n: usize, ell: usize },
}

impl Family {
    /// Builds the graph.
    ///
    /// Labeling: spine `0..n`; the added vertex (or clone) is `n`, a second
    /// added vertex is `n + 1`. For the twinned cycle `v = 0`, `u = n−1`,
    /// `w = 1` and `v' = n`.
    pub fn graph(self) -> Result<Graph, GraphError> {
        match self {
            Family::Flagpole { n, ell } => {
                if n < 1 || ell < 1 || ell > n {
                    return Err(bad("flagpole", format!("n = {n}, ell = {ell}")));
                }
                let (g, x) = path(n).add_vertex();
                g.add_edge(ell - 1, x)
            }
            Family::TrianglePath { n, ell } => {
                if n < 2 || ell < 1 || ell > n - 1 {
                    return Err(bad("triangle-path", format!("n = {n}, ell = {ell}")));
                }
                let (g, x) = path(n).add_vertex();
                g.add_edge(ell - 1, x)?.add_edge(ell, x)
            }
            Family::DGraph { n } => {
                if n < 3 {
                    return Err(bad("dgraph", format!("n = {n}, need n >= 3")));
                }
                Family::TwinCycle { n }.graph()?.delete_edge(0, n - 1)
            }
            Family::Tadpole { n } => {
                if n < 3 {
                    return Err(bad("tadpole", format!("n = {n}, need n >= 3")));
                }
                Family::DGraph { n }.graph()?.delete_edge(0, n)
            }
            Family::Moose { n } => {
                if n < 2 {
                    return Err(bad("moose", format!("n = {n}, need n >= 2")));
                }
                let base = if n == 2 { path(2) } else { cycle(n)? };
                let (g, a) = base.add_vertex();
                let (g, b) = g.add_vertex();
                g.add_edge(0, a)?.add_edge(1, b)
            }
            Family::TwinPathLeaf { n } => {
                if n < 1 {
                    return Err(bad("twin-path-leaf", format!("n = {n}, need n >= 1")));
                }
                path(n).twin(n - 1)
            }
            Family::TwinPathBoth { n } => {
                if n < 2 {
                    return Err(bad("twin-path-both", format!("n = {n}, need n >= 2")));
                }
                path(n).twin(0)?.twin(n - 1)
            }
            Family::TwinPathInterior { n, ell } => {
                if n < 3 || ell < 2 || ell > n - 1 {
                    return Err(bad("twin-path-interior", format!("n = {n}, ell = {ell}")));
                }
                path(n).twin(ell - 1)
            }
            Family::TwinCycle { n } => cycle(n)
                .map_err(|_| bad("twin-cycle", format!("n = {n}, need n >= 3")))?
                .twin(0),
            Family::TwinInteriorThenLeaf { n, ell } => {
                if n < 4 || ell < 2 || ell > n - 2 {
                    return Err(bad("twin-interior-then-leaf", format!("n = {n}, ell = {ell}")));
                }
                path(n).twin(ell - 1)?.twin(n - 1)
            }
        }
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    /// Parses `path:7`, `cycle:6`, `complete:4`, `empty:3`, `moose:5`,
    /// `flagpole:9,4`, `twin(cycle:6,0)`, `g:n=5;edges=0-1,1-2`, and the other
    /// family names (`triangle-path`, `dgraph`, `tadpole`, `twin-path-leaf`,
    /// `twin-path-both`, `twin-path-interior`, `twin-cycle`,
    /// `twin-interior-then-leaf`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = SpecParser {
            src: &compact,
            pos: 0,
            original: s,
        };
        let g = parser.graph()?;
        if parser.pos != compact.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(g)
    }
}

struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
    original: &'a str,
}

impl SpecParser<'_> {
    fn error(&self, reason: &str) -> GraphError {
        GraphError::Parse {
            spec: self.original.to_string(),
            reason: reason.to_string(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), GraphError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {token:?}")))
        }
    }

    fn number(&mut self) -> Result<usize, GraphError> {
        let digits: String = self.rest().chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        self.pos += digits.len();
        digits.parse().map_err(|_| self.error("number too large"))
    }

    fn graph(&mut self) -> Result<Graph, GraphError> {
        if self.eat("twin(") {
            let inner = self.graph()?;
            self.expect(",")?;
            let v = self.number()?;
            self.expect(")")?;
            return inner.twin(v);
        }
        if self.eat("g:n=") {
            let n = self.number()?;
            let mut g = Graph::empty(n);
            if self.eat(";edges=") {
                loop {
                    if !self.rest().starts_with(|c: char| c.is_ascii_digit()) {
                        break;
                    }
                    let u = self.number()?;
                    self.expect("-")?;
                    let v = self.number()?;
                    g.insert_edge(u, v)?;
                    if !(self.rest().starts_with(',') && self.rest()[1..].starts_with(|c: char| c.is_ascii_digit())) {
                        break;
                    }
                    self.pos += 1;
                }
            }
            return Ok(g);
        }
        let name: String = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_alphabetic() || *c == '-' || *c == '_')
            .collect();
        if name.is_empty() {
            return Err(self.error("expected a graph name"));
        }
        self.pos += name.len();
        self.expect(":")?;
        let name = name.to_ascii_lowercase().replace('_', "-");
        let arity = match name.as_str() {
            "flagpole" | "triangle-path" | "twin-path-interior" | "twin-interior-then-leaf" => 2,
            _ => 1,
        };
        // fixed arity, so `twin(cycle:6,0)` splits unambiguously
        let mut args = vec![self.number()?];
        while args.len() < arity {
            self.expect(",")?;
            args.push(self.number()?);
        }
        let family = match name.as_str() {
            "path" => return Ok(path(args[0])),
            "cycle" => return cycle(args[0]),
            "complete" => return Ok(complete(args[0])),
            "empty" => return Ok(Graph::empty(args[0])),
            "flagpole" => Family::Flagpole { n: args[0], ell: args[1] },
            "triangle-path" => Family::TrianglePath { n: args[0], ell: args[1] },
            "dgraph" => Family::DGraph { n: args[0] },
            "tadpole" => Family::Tadpole { n: args[0] },
            "moose" => Family::Moose { n: args[0] },
            "twin-path-leaf" => Family::TwinPathLeaf { n: args[0] },
            "twin-path-both" => Family::TwinPathBoth { n: args[0] },
            "twin-path-interior" => Family::TwinPathInterior { n: args[0], ell: args[1] },
            "twin-cycle" | "twinned-cycle" => Family::TwinCycle { n: args[0] },
            "twin-interior-then-leaf" => Family::TwinInteriorThenLeaf { n: args[0], ell: args[1] },
            _ => return Err(self.error(&format!("unknown graph family {name:?}"))),
        };
        family.graph()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn paths_and_cycles() {
        assert_eq!(path(1).vertex_count(), 1);
        assert_eq!(path(1).edge_count(), 0);
        assert_eq!(edges(&path(4)), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(path(0).vertex_count(), 0);
        assert_eq!(cycle(3).unwrap(), complete(3));
        assert!(cycle(2).is_err());
        assert!(cycle(1).is_err());
    }

    #[test]
    fn twinning() {
        assert_eq!(path(2).twin(0).unwrap(), complete(3));
        assert_eq!(cycle(3).unwrap().twin(0).unwrap(), complete(4));
        assert_eq!(path(1).twin(0).unwrap(), path(2));
        assert!(matches!(path(3).twin(3), Err(GraphError::VertexOutOfRange { .. })));
    }

    #[test]
    fn twin_counts() {
        let graphs = [path(5), cycle(6).unwrap(), complete(4), Family::Moose { n: 4 }.graph().unwrap()];
        for g in graphs {
            for v in 0..g.vertex_count() {
                let t = g.twin(v).unwrap();
                assert_eq!(t.vertex_count(), g.vertex_count() + 1);
                assert_eq!(t.edge_count(), g.edge_count() + g.degree(v) + 1);
            }
        }
    }

    #[test]
    fn untwinning_recovers_graph_plus_isolated_vertex() {
        for g in [path(4), cycle(5).unwrap(), Family::Flagpole { n: 4, ell: 2 }.graph().unwrap()] {
            for v in 0..g.vertex_count() {
                let t = g.twin(v).unwrap();
                let clone = g.vertex_count();
                let mut h = t.delete_edge(v, clone).unwrap();
                for u in g.neighbors(v) {
                    h = h.delete_edge(u, clone).unwrap();
                }
                assert_eq!(h, g.disjoint_union(&Graph::empty(1)));
            }
        }
    }

    #[test]
    fn edit_operations() {
        assert_eq!(cycle(4).unwrap().delete_edge(0, 3).unwrap(), path(4));
        let u = path(2).disjoint_union(&path(1));
        assert_eq!((u.vertex_count(), u.edge_count()), (3, 1));
        assert_eq!(path(3).add_edge(0, 2).unwrap(), complete(3));
        assert_eq!(path(3).delete_edge(0, 2), Err(GraphError::MissingEdge(0, 2)));
        assert_eq!(path(3).add_edge(0, 1), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(path(3).add_edge(1, 1), Err(GraphError::Loop(1)));
        let shifted = path(2).disjoint_union(&path(2));
        assert_eq!(edges(&shifted), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn family_examples() {
        let f = Family::Flagpole { n: 3, ell: 1 }.graph().unwrap();
        assert_eq!(f.degree_sequence(), path(4).degree_sequence());
        assert_eq!(f.edge_count(), 3);
        let a6 = Family::Moose { n: 4 }.graph().unwrap();
        assert_eq!(a6.vertex_count(), 6);
        assert_eq!(a6.degree_sequence(), vec![3, 3, 2, 2, 1, 1]);
        assert_eq!(Family::TwinCycle { n: 3 }.graph().unwrap(), complete(4));
        assert_eq!(Family::TwinPathBoth { n: 2 }.graph().unwrap(), complete(4));
        assert_eq!(Family::Moose { n: 2 }.graph().unwrap().degree_sequence(), vec![2, 2, 1, 1]);
    }

    /// Degree-sequence checks written straight from each definition.
    #[test]
    fn family_degree_sequences() {
        for n in 4..9 {
            let a = Family::Moose { n }.graph().unwrap();
            let d = a.degree_sequence();
            assert_eq!(d.iter().filter(|&&x| x == 3).count(), 2);
            assert_eq!(d.iter().filter(|&&x| x == 1).count(), 2);
            assert_eq!(a.edge_count(), n + 2);
            assert_eq!(a.vertex_count(), n + 2);
        }
        for n in 3..9 {
            // twinned cycle: v and v' have degree 3, u and w degree 3, the rest 2
            let c = Family::TwinCycle { n }.graph().unwrap();
            let mut expect = vec![3, 3, 3, 3];
            expect.extend(std::iter::repeat_n(2, n - 3));
            if n == 3 {
                expect = vec![3, 3, 3, 3];
            }
            assert_eq!(c.degree_sequence(), expect, "C_{n},v");
            let d = Family::DGraph { n }.graph().unwrap();
            assert_eq!(d.edge_count(), n + 2);
            let t = Family::Tadpole { n }.graph().unwrap();
            assert_eq!(t.edge_count(), n + 1);
            assert_eq!(t.degree_sequence().iter().filter(|&&x| x == 1).count(), 1);
            assert_eq!(t.degree_sequence()[0], 3);
        }
        for n in 2..8 {
            for ell in 1..n {
                let t = Family::TrianglePath { n, ell }.graph().unwrap();
                assert_eq!(t.edge_count(), n + 1);
                assert_eq!(t.triangles().len(), 1);
            }
            for ell in 1..=n {
                let f = Family::Flagpole { n, ell }.graph().unwrap();
                assert_eq!(f.edge_count(), n);
                assert_eq!(f.vertex_count(), n + 1);
            }
        }
        for n in 3..8 {
            for ell in 2..n {
                let t = Family::TwinPathInterior { n, ell }.graph().unwrap();
                assert_eq!(t.edge_count(), n - 1 + 3);
                assert_eq!(t.triangles().len(), 2);
            }
        }
        for n in 2..8 {
            let l = Family::TwinPathLeaf { n }.graph().unwrap();
            assert_eq!(l.edge_count(), n + 1);
        }
    }

    #[test]
    fn family_ranges() {
        assert!(Family::TwinPathInterior { n: 4, ell: 1 }.graph().is_err());
        assert!(Family::TwinPathInterior { n: 4, ell: 4 }.graph().is_err());
        assert!(Family::TrianglePath { n: 4, ell: 0 }.graph().is_err());
        assert!(Family::TrianglePath { n: 4, ell: 4 }.graph().is_err());
        assert!(Family::Flagpole { n: 4, ell: 5 }.graph().is_err());
        assert!(Family::TwinCycle { n: 2 }.graph().is_err());
        assert!(Family::Moose { n: 1 }.graph().is_err());
        assert!(Family::TwinInteriorThenLeaf { n: 5, ell: 4 }.graph().is_err());
        assert!(Family::TwinPathBoth { n: 1 }.graph().is_err());
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("path:7".parse::<Graph>().unwrap(), path(7));
        assert_eq!("cycle:6".parse::<Graph>().unwrap(), cycle(6).unwrap());
        assert_eq!("twin(cycle:6,0)".parse::<Graph>().unwrap(), cycle(6).unwrap().twin(0).unwrap());
        assert_eq!("twin(twin(path:4,0),3)".parse::<Graph>().unwrap(), Family::TwinPathBoth { n: 4 }.graph().unwrap());
        assert_eq!("moose:5".parse::<Graph>().unwrap(), Family::Moose { n: 5 }.graph().unwrap());
        assert_eq!("flagpole:9,4".parse::<Graph>().unwrap(), Family::Flagpole { n: 9, ell: 4 }.graph().unwrap());
        let g: Graph = "g:n=5;edges=0-1,1-2,2-3".parse().unwrap();
        assert_eq!(g, path(4).disjoint_union(&Graph::empty(1)));
        assert_eq!(g.to_string().parse::<Graph>().unwrap(), g);
        assert_eq!("g:n=3".parse::<Graph>().unwrap(), Graph::empty(3));
        assert!("path:".parse::<Graph>().is_err());
        assert!("blob:3".parse::<Graph>().is_err());
        assert!("g:n=2;edges=0-0".parse::<Graph>().is_err());
        assert!("path:3junk".parse::<Graph>().is_err());
        assert!("flagpole:3".parse::<Graph>().is_err());
    }

    #[test]
    fn triangles_of_k4() {
        assert_eq!(complete(4).triangles().len(), 4);
        assert!(path(5).triangles().is_empty());
    }
}
