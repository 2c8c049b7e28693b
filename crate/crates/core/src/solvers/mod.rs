//! Exact solvers for the domination-type parameters of a single graph.
//!
//! Vertex-set parameters (γ, γ_t, γᵖ, ρ, ρ_o) are found by scanning subsets
//! in order of cardinality and, within a cardinality, in increasing bitmask
//! order, so the first feasible set is the canonical witness.
//!
//! Roman-type parameters only need a search over V₂. Once V₂ is fixed every
//! other vertex has a forced optimal weight: for an RDF a vertex gets 0 iff
//! it has a V₂-neighbour, for a PRDF iff it has exactly one. Each optimal
//! function is therefore determined by its V₂, and optimal functions
//! correspond one-to-one with optimal V₂ sets.

mod couples;
mod roman;
mod sets;
mod total_roman;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

pub use couples::{
    open_packing_profiles, zeta, zeta_couples, zeta_prime, OpenPackingProfile, ZetaCouple,
};
pub use roman::enumerate_optimal_v2;
pub(crate) use roman::completion;
pub use sets::{is_feasible, optimal_sets};

use crate::error::{Error, Result};
use crate::graph::{Graph, RomanAssignment, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParameterKind {
    /// Domination number γ.
    Gamma,
    /// Total domination number γ_t.
    GammaT,
    /// Perfect domination number γᵖ.
    GammaP,
    /// Packing number ρ.
    Rho,
    /// Open packing number ρ_o.
    RhoO,
    /// Roman domination number γ_R.
    GammaR,
    /// Perfect Roman domination number γ_Rᵖ.
    GammaRp,
    /// Total Roman domination number γ_tR.
    GammaTR,
}

impl ParameterKind {
    pub const ALL: [ParameterKind; 8] = [
        ParameterKind::Gamma,
        ParameterKind::GammaT,
        ParameterKind::GammaP,
        ParameterKind::Rho,
        ParameterKind::RhoO,
        ParameterKind::GammaR,
        ParameterKind::GammaRp,
        ParameterKind::GammaTR,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParameterKind::Gamma => "gamma",
            ParameterKind::GammaT => "gamma_t",
            ParameterKind::GammaP => "gamma_p",
            ParameterKind::Rho => "rho",
            ParameterKind::RhoO => "rho_o",
            ParameterKind::GammaR => "gamma_R",
            ParameterKind::GammaRp => "gamma_Rp",
            ParameterKind::GammaTR => "gamma_tR",
        }
    }

    pub fn is_set_kind(self) -> bool {
        !self.is_roman_kind()
    }

    pub fn is_roman_kind(self) -> bool {
        matches!(
            self,
            ParameterKind::GammaR | ParameterKind::GammaRp | ParameterKind::GammaTR
        )
    }

    /// Packing numbers are maxima; everything else is a minimum.
    pub fn is_maximum(self) -> bool {
        matches!(self, ParameterKind::Rho | ParameterKind::RhoO)
    }

    /// Total domination variants are undefined on graphs with isolated vertices.
    pub fn requires_no_isolated(self) -> bool {
        matches!(self, ParameterKind::GammaT | ParameterKind::GammaTR)
    }
}

impl fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParameterKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ParameterKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = ParameterKind::ALL.iter().map(|k| k.name()).collect();
                format!("unknown parameter {s:?}; expected one of {}", names.join(", "))
            })
    }
}

impl Serialize for ParameterKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Set(VertexSet),
    Roman(RomanAssignment),
}

impl Witness {
    pub fn as_set(&self) -> Option<VertexSet> {
        match self {
            Witness::Set(s) => Some(*s),
            Witness::Roman(_) => None,
        }
    }

    pub fn as_roman(&self) -> Option<&RomanAssignment> {
        match self {
            Witness::Roman(f) => Some(f),
            Witness::Set(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub kind: ParameterKind,
    pub value: usize,
    pub witness: Witness,
    /// Candidates or search nodes examined; diagnostic only.
    #[serde(skip)]
    pub explored: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest order accepted by the exact solvers.
    pub max_n: usize,
    /// Largest order for which every optimal function is enumerated.
    pub enumeration_max_n: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_n: 26,
            enumeration_max_n: 14,
        }
    }
}

impl SolverConfig {
    pub(crate) fn check(&self, g: &Graph, kind: ParameterKind) -> Result<()> {
        if g.order() > self.max_n {
            return Err(Error::SolverCap {
                kind,
                n: g.order(),
                cap: self.max_n,
            });
        }
        Ok(())
    }
}

pub(crate) fn check_no_isolated(g: &Graph, kind: ParameterKind) -> Result<()> {
    match g.first_isolated_vertex() {
        Some(vertex) => Err(Error::IsolatedVertex { kind, vertex }),
        None => Ok(()),
    }
}

/// Exact optimum of `kind` on `g` together with its canonical witness.
pub fn solve(g: &Graph, kind: ParameterKind, config: &SolverConfig) -> Result<SolveResult> {
    config.check(g, kind)?;
    if kind.requires_no_isolated() {
        check_no_isolated(g, kind)?;
    }
    match kind {
        ParameterKind::GammaR | ParameterKind::GammaRp => roman::solve_roman(g, kind),
        ParameterKind::GammaTR => total_roman::solve_total_roman(g),
        _ => sets::solve_set(g, kind),
    }
}

/// Convenience wrapper returning only the value.
pub fn value(g: &Graph, kind: ParameterKind, config: &SolverConfig) -> Result<usize> {
    solve(g, kind, config).map(|r| r.value)
}

/// Iterator over the `k`-subsets of `{0..n-1}` in increasing bitmask order.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    use crate::graph::Word;
    let limit = VertexSet::full(n).bits();
    let start: Option<Word> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(VertexSet::full(k).bits())
    };
    std::iter::successors(start, move |&x| {
        if x == 0 {
            return None;
        }
        let c = x & x.wrapping_neg();
        let r = x.checked_add(c)?;
        let next = (((r ^ x) >> 2) / c) | r;
        (next & !limit == 0).then_some(next)
    })
    .map(VertexSet::from_bits)
}
