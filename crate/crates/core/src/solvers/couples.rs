//! Dominating couples, ζ(G), ζ′(G) and open-packing profiles.
//!
//! For a dominating couple (A, B) with U = A ∪ B, every vertex outside U and
//! every vertex of A needs a neighbour in U, while B is unconstrained. Since
//! a vertex costs 3 in B and 2 in A, an optimal couple over a fixed U puts in
//! B exactly the vertices isolated in G[U], and U must dominate G. ζ is thus
//! a minimum over dominating sets U of 2|U| + |iso(G[U])|.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{check_no_isolated, ParameterKind, SolverConfig};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaCouple {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl ZetaCouple {
    pub fn weight(&self) -> usize {
        2 * self.a.len() + 3 * self.b.len()
    }
}

fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    let full = VertexSet::full(n).bits();
    std::iter::successors(Some(0 as crate::graph::Word), move |&m| (m != full).then(|| m + 1))
        .map(VertexSet::from_bits)
}

fn check_cap(g: &Graph, config: &SolverConfig) -> Result<()> {
    // Reported against γ since ζ has no kind of its own.
    config.check(g, ParameterKind::Gamma)
}

fn zeta_candidates(g: &Graph) -> impl Iterator<Item = ZetaCouple> + '_ {
    let all = g.vertices();
    all_subsets(g.order())
        .filter(move |&u| g.closed_neighborhood_of(u) == all)
        .map(move |u| {
            let b = g.isolated_in(u);
            ZetaCouple { a: u - b, b }
        })
}

/// ζ(G) with its minimising couple; ties go to the smallest A mask, then B.
pub fn zeta(g: &Graph, config: &SolverConfig) -> Result<(usize, ZetaCouple)> {
    check_cap(g, config)?;
    check_no_isolated(g, ParameterKind::Gamma)
        .map_err(|_| Error::Hypothesis("zeta is defined here for graphs without isolated vertices".into()))?;
    let best = zeta_candidates(g)
        .min_by_key(|c| (c.weight(), c.a, c.b))
        .expect("V(G) is a dominating set");
    Ok((best.weight(), best))
}

/// Every ζ(G)-couple, ordered by (A mask, B mask).
pub fn zeta_couples(g: &Graph, config: &SolverConfig) -> Result<Vec<ZetaCouple>> {
    let (value, _) = zeta(g, config)?;
    let mut couples: Vec<_> = zeta_candidates(g).filter(|c| c.weight() == value).collect();
    couples.sort_by_key(|c| (c.a, c.b));
    Ok(couples)
}

/// Shape of an open packing S: |S₀| (isolated in G[S]), |S₁| and |N[S]|.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OpenPackingProfile {
    pub isolated: usize,
    pub paired: usize,
    pub closed_neighborhood: usize,
}

/// Every open packing of `g`, by depth-first extension in vertex order.
fn open_packings(g: &Graph) -> Vec<VertexSet> {
    fn extend(g: &Graph, s: VertexSet, hit: VertexSet, from: usize, out: &mut Vec<VertexSet>) {
        out.push(s);
        for v in from..g.order() {
            // A vertex seen twice would break N(u) ∩ N(v) = ∅.
            if g.neighbors(v).is_disjoint(hit) {
                extend(g, s.with(v), hit | g.neighbors(v), v + 1, out);
            }
        }
    }
    let mut out = Vec::new();
    extend(g, VertexSet::EMPTY, VertexSet::EMPTY, 0, &mut out);
    out
}

/// Distinct open-packing profiles, each with its smallest-mask representative.
pub fn open_packing_profiles(
    g: &Graph,
    config: &SolverConfig,
) -> Result<BTreeMap<OpenPackingProfile, VertexSet>> {
    check_cap(g, config)?;
    let mut profiles = BTreeMap::new();
    for s in open_packings(g) {
        let isolated = g.isolated_in(s).len();
        let key = OpenPackingProfile {
            isolated,
            paired: s.len() - isolated,
            closed_neighborhood: g.closed_neighborhood_of(s).len(),
        };
        profiles
            .entry(key)
            .and_modify(|w: &mut VertexSet| *w = (*w).min(s))
            .or_insert(s);
    }
    Ok(profiles)
}

/// ζ′(G) = min 4|S₀| + 2|S₁| over dominating open packings, or `None` when
/// there is none. Ties go to the smallest mask.
pub fn zeta_prime(g: &Graph, config: &SolverConfig) -> Result<Option<(usize, VertexSet)>> {
    check_cap(g, config)?;
    let all = g.vertices();
    Ok(open_packings(g)
        .into_iter()
        .filter(|&s| g.closed_neighborhood_of(s) == all)
        .map(|s| {
            let s0 = g.isolated_in(s).len();
            (4 * s0 + 2 * (s.len() - s0), s)
        })
        .min())
}
