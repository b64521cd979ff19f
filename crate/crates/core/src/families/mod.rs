//! Closed forms for paths, cycles and their twins.
//!
//! Every family can be computed several ways — a triple-deletion identity in
//! terms of path and cycle values, coefficient extraction from a generating
//! function, an e-positive recurrence, a coefficient formula — none of which
//! touches the brute-force oracle in [`crate::csf`]. `Method::Oracle` is
//! available for comparison only.

mod both;
mod cycle;
mod interior;
mod leaf;
mod moose;
mod paths;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use thiserror::Error;

use crate::csf::{csf, CsfError};
use crate::graphs::{self, Family, GraphError};
use crate::partitions::{partitions_of, Partition};
use crate::symfun::SymE;

pub use both::{
    alpha, both_leaves_from_leaf_twins, both_leaves_gf_quarter, both_leaves_gf_quarter_path, twin_path_both,
    twin_path_both_coeff,
};
pub use cycle::{
    dgraph, tadpole, twin_cycle, twin_cycle_coeff, twin_cycle_gf_from_cycles, twin_cycle_gf_half,
    twin_cycle_gf_half_rewritten,
};
pub use interior::{
    f_ell, f_ell_expanded, flagpole, g_ell, interior_gf, interior_gf_half_positive, interior_path_times_f_ell,
    triangle_path, triangle_path_right_shift, twin_interior_then_leaf, twin_path_interior,
    twin_path_interior_via_triangles,
};
pub use leaf::{
    leaf_gf_from_path, leaf_gf_half, leaf_gf_half_path, twin_path_leaf, twin_path_leaf_coeff,
    twin_path_leaf_expansion,
};
pub use moose::moose;
pub use paths::{
    coeff_specials_check, cycle_seq, path_cycle_coeff, path_gf_split, path_seq, SpecialCheck,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: parameters out of range ({detail})")]
    OutOfRange { family: &'static str, detail: String },
    #[error("{family}: method {method} is not available for these parameters")]
    MethodUnavailable { family: &'static str, method: Method },
    #[error("partition {0:?} is outside the cases covered by the closed formula")]
    NotCovered(Partition),
    #[error("{0}")]
    Csf(#[from] CsfError),
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("unknown method {0:?}")]
    UnknownMethod(String),
}

pub(crate) fn out_of_range(family: &'static str, detail: impl Into<String>) -> FamilyError {
    FamilyError::OutOfRange {
        family,
        detail: detail.into(),
    }
}

/// How a family value is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Triple-deletion identity in terms of path/cycle values.
    Identity,
    /// Coefficient of a generating function built from the named series.
    Gf,
    /// Coefficient of the manifestly e-positive generating function.
    EposGf,
    /// The e-positive recurrence with its stored initial values.
    Recurrence,
    /// `Σ c_λ e_λ` reassembled from a coefficient formula.
    Coefficients,
    /// Brute force on the constructed graph.
    Oracle,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Identity,
        Method::Gf,
        Method::EposGf,
        Method::Recurrence,
        Method::Coefficients,
        Method::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Identity => "identity",
            Method::Gf => "gf",
            Method::EposGf => "epos-gf",
            Method::Recurrence => "recurrence",
            Method::Coefficients => "coefficients",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        Method::ALL
            .into_iter()
            .find(|m| m.name() == key || (key == "epos" && *m == Method::EposGf))
            .ok_or_else(|| FamilyError::UnknownMethod(s.to_string()))
    }
}

/// The families that can be computed by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    Path,
    Cycle,
    TwinPathLeaf,
    TwinPathBoth,
    TwinPathInterior,
    TwinInteriorThenLeaf,
    TwinCycle,
    Moose,
    Flagpole,
    TrianglePath,
    DGraph,
    Tadpole,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 12] = [
        FamilyTag::Path,
        FamilyTag::Cycle,
        FamilyTag::TwinPathLeaf,
        FamilyTag::TwinPathBoth,
        FamilyTag::TwinPathInterior,
        FamilyTag::TwinInteriorThenLeaf,
        FamilyTag::TwinCycle,
        FamilyTag::Moose,
        FamilyTag::Flagpole,
        FamilyTag::TrianglePath,
        FamilyTag::DGraph,
        FamilyTag::Tadpole,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Path => "path",
            FamilyTag::Cycle => "cycle",
            FamilyTag::TwinPathLeaf => "twin-path-leaf",
            FamilyTag::TwinPathBoth => "twin-path-both",
            FamilyTag::TwinPathInterior => "twin-path-interior",
            FamilyTag::TwinInteriorThenLeaf => "twin-interior-then-leaf",
            FamilyTag::TwinCycle => "twin-cycle",
            FamilyTag::Moose => "moose",
            FamilyTag::Flagpole => "flagpole",
            FamilyTag::TrianglePath => "triangle-path",
            FamilyTag::DGraph => "dgraph",
            FamilyTag::Tadpole => "tadpole",
        }
    }

    /// Whether the family takes a second parameter `ℓ`.
    pub fn takes_ell(self) -> bool {
        matches!(
            self,
            FamilyTag::TwinPathInterior | FamilyTag::TwinInteriorThenLeaf | FamilyTag::Flagpole | FamilyTag::TrianglePath
        )
    }

    /// Methods other than the oracle that this family implements.
    pub fn methods(self) -> &'static [Method] {
        use Method::*;
        match self {
            FamilyTag::Path | FamilyTag::Cycle => &[Recurrence, Gf, Coefficients],
            FamilyTag::TwinPathLeaf => &[Identity, Gf, EposGf, Recurrence, Coefficients],
            FamilyTag::TwinPathBoth => &[Identity, Gf, EposGf, Recurrence],
            FamilyTag::TwinPathInterior => &[Identity, Gf, EposGf, Recurrence],
            FamilyTag::TwinCycle => &[Identity, Gf, Recurrence, Coefficients],
            FamilyTag::Moose => &[Recurrence],
            FamilyTag::TwinInteriorThenLeaf
            | FamilyTag::Flagpole
            | FamilyTag::TrianglePath
            | FamilyTag::DGraph
            | FamilyTag::Tadpole => &[Identity],
        }
    }

    /// Number of vertices of the family graph with index `n`.
    pub fn vertex_count(self, n: usize) -> usize {
        match self {
            FamilyTag::Path | FamilyTag::Cycle => n,
            FamilyTag::TwinPathLeaf
            | FamilyTag::TwinPathInterior
            | FamilyTag::TwinCycle
            | FamilyTag::Flagpole
            | FamilyTag::TrianglePath
            | FamilyTag::DGraph
            | FamilyTag::Tadpole => n + 1,
            FamilyTag::TwinPathBoth | FamilyTag::TwinInteriorThenLeaf | FamilyTag::Moose => n + 2,
        }
    }

    /// Valid `(n, ℓ)` pairs with `n ≤ max_n` (`ℓ = 0` when unused).
    pub fn parameters(self, max_n: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for n in 0..=max_n {
            match self {
                FamilyTag::Path => out.push((n, 0)),
                FamilyTag::Cycle | FamilyTag::TwinPathLeaf | FamilyTag::TwinCycle if n >= 1 => out.push((n, 0)),
                FamilyTag::TwinPathBoth | FamilyTag::Moose if n >= 2 => out.push((n, 0)),
                FamilyTag::DGraph | FamilyTag::Tadpole if n >= 3 => out.push((n, 0)),
                FamilyTag::TwinPathInterior if n >= 3 => out.extend((2..n).map(|l| (n, l))),
                FamilyTag::TwinInteriorThenLeaf if n >= 4 => out.extend((2..n - 1).map(|l| (n, l))),
                FamilyTag::Flagpole if n >= 1 => out.extend((1..=n).map(|l| (n, l))),
                FamilyTag::TrianglePath if n >= 2 => out.extend((1..n).map(|l| (n, l))),
                _ => {}
            }
        }
        out
    }

    /// The graph whose chromatic symmetric function this family computes,
    /// or `None` for the degenerate small cases fixed by convention.
    pub fn graph(self, n: usize, ell: usize) -> Result<Option<graphs::Graph>, FamilyError> {
        let family = match self {
            FamilyTag::Path => return Ok(Some(graphs::path(n))),
            FamilyTag::Cycle if n < 3 => return Ok(None),
            FamilyTag::Cycle => return Ok(Some(graphs::cycle(n)?)),
            FamilyTag::TwinCycle if n < 3 => return Ok(None),
            FamilyTag::TwinPathLeaf => Family::TwinPathLeaf { n },
            FamilyTag::TwinPathBoth => Family::TwinPathBoth { n },
            FamilyTag::TwinPathInterior => Family::TwinPathInterior { n, ell },
            FamilyTag::TwinInteriorThenLeaf => Family::TwinInteriorThenLeaf { n, ell },
            FamilyTag::TwinCycle => Family::TwinCycle { n },
            FamilyTag::Moose => Family::Moose { n },
            FamilyTag::Flagpole => Family::Flagpole { n, ell },
            FamilyTag::TrianglePath => Family::TrianglePath { n, ell },
            FamilyTag::DGraph => Family::DGraph { n },
            FamilyTag::Tadpole => Family::Tadpole { n },
        };
        Ok(Some(family.graph()?))
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        let key = match key.as_str() {
            "twinned-cycle" => "twin-cycle",
            "leaf-twin" | "twinned-path-leaf" => "twin-path-leaf",
            "both-leaves" | "twinned-path-both" => "twin-path-both",
            "interior-twin" | "twinned-path-interior" => "twin-path-interior",
            "d-graph" => "dgraph",
            other => other,
        };
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name() == key)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// Computes a family value by the requested method.
pub fn compute(tag: FamilyTag, n: usize, ell: usize, method: Method) -> Result<SymE, FamilyError> {
    if method == Method::Oracle {
        return match tag.graph(n, ell)? {
            Some(g) => Ok(csf(&g)?),
            None => Err(FamilyError::MethodUnavailable {
                family: tag.name(),
                method,
            }),
        };
    }
    if !tag.methods().contains(&method) {
        return Err(FamilyError::MethodUnavailable {
            family: tag.name(),
            method,
        });
    }
    match tag {
        FamilyTag::Path => {
            if method == Method::Coefficients && n == 0 {
                return Ok(SymE::one());
            }
            paths::path_by(n, method)
        }
        FamilyTag::Cycle => paths::cycle_by(n, method),
        FamilyTag::TwinPathLeaf => twin_path_leaf(n, method),
        FamilyTag::TwinPathBoth => twin_path_both(n, method),
        FamilyTag::TwinPathInterior => twin_path_interior(n, ell, method),
        FamilyTag::TwinInteriorThenLeaf => twin_interior_then_leaf(n, ell),
        FamilyTag::TwinCycle => twin_cycle(n, method),
        FamilyTag::Moose => moose(n),
        FamilyTag::Flagpole => flagpole(n, ell),
        FamilyTag::TrianglePath => triangle_path(n, ell),
        FamilyTag::DGraph => dgraph(n),
        FamilyTag::Tadpole => tadpole(n),
    }
}

/// `c · e_j`.
pub(crate) fn ej(c: i64, j: usize) -> SymE {
    SymE::ce(c, j as u32)
}

/// `Σ_{λ ⊢ size} c(λ) e_λ`.
pub(crate) fn reassemble(
    size: usize,
    mut coeff: impl FnMut(&Partition) -> Result<BigInt, FamilyError>,
) -> Result<SymE, FamilyError> {
    let mut out = SymE::zero();
    for lambda in partitions_of(size) {
        let c = coeff(&lambda)?;
        out.add_term(lambda, c);
    }
    Ok(out)
}

type Tables = HashMap<(FamilyTag, usize), Vec<SymE>>;

/// Bottom-up memo tables for recurrences, one growing vector per key.
pub(crate) struct SeqCache {
    tables: OnceLock<RwLock<Tables>>,
}

impl SeqCache {
    pub(crate) const fn new() -> Self {
        SeqCache { tables: OnceLock::new() }
    }

    /// Value at index `n`, filling indices in order with `step(prefix, m)`,
    /// where `prefix[k]` holds the value at `k < m`.
    pub(crate) fn get(&self, key: (FamilyTag, usize), n: usize, step: impl Fn(&[SymE], usize) -> SymE) -> SymE {
        let tables = self.tables.get_or_init(Default::default);
        if let Some(v) = tables.read().expect("sequence cache poisoned").get(&key) {
            if let Some(x) = v.get(n) {
                return x.clone();
            }
        }
        let mut vals = tables
            .read()
            .expect("sequence cache poisoned")
            .get(&key)
            .cloned()
            .unwrap_or_default();
        while vals.len() <= n {
            let m = vals.len();
            let next = step(&vals, m);
            vals.push(next);
        }
        let out = vals[n].clone();
        let mut w = tables.write().expect("sequence cache poisoned");
        let slot = w.entry(key).or_default();
        if slot.len() < vals.len() {
            *slot = vals;
        }
        out
    }
}
