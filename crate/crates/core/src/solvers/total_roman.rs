//! γ_tR by a scan over V₂ with an exact inner completion.
//!
//! For a fixed V₂, V₁ must contain every vertex outside N[V₂]; the rest of
//! V₁ is the smallest set of V₂-dominated vertices that gives every vertex
//! still lacking a neighbour in V₁ ∪ V₂ such a neighbour.

use super::{combinations, ParameterKind, SolveResult, Witness};
use crate::error::Result;
use crate::graph::{Graph, RomanAssignment, VertexSet};

/// Smallest `x ⊆ pool` (first in mask order among the smallest) such that
/// every vertex of `needy` has a neighbour in `x`, or `None`.
fn min_cover(g: &Graph, needy: VertexSet, pool: VertexSet, limit: usize) -> Option<VertexSet> {
    let pool: Vec<usize> = (pool & g.open_neighborhood_of(needy)).to_vec();
    for k in 0..=pool.len().min(limit) {
        for pick in combinations(pool.len(), k) {
            let x: VertexSet = pick.iter().map(|i| pool[i]).collect();
            if needy.iter().all(|w| !g.neighbors(w).is_disjoint(x)) {
                return Some(x);
            }
        }
    }
    None
}

pub(super) fn solve_total_roman(g: &Graph) -> Result<SolveResult> {
    let n = g.order();
    let all = g.vertices();
    let mut explored = 0u64;
    // V₁ = V, V₂ = ∅ is a TRDF on any graph without isolated vertices.
    let mut best = (n, VertexSet::EMPTY, all);
    for twos in combinations_all(n) {
        explored += 1;
        let forced = all - g.closed_neighborhood_of(twos);
        let base = 2 * twos.len() + forced.len();
        if base >= best.0 {
            continue;
        }
        let positive = twos | forced;
        let needy: VertexSet = all
            .iter()
            .filter(|&w| g.neighbors(w).is_disjoint(positive))
            .collect();
        let pool = all - positive;
        if let Some(extra) = min_cover(g, needy, pool, best.0 - base - 1) {
            let cost = base + extra.len();
            if cost < best.0 {
                best = (cost, twos, forced | extra);
            }
        }
    }
    let (value, twos, ones) = best;
    let witness = RomanAssignment::new(n, ones, twos).expect("disjoint levels");
    debug_assert!(witness.is_total_roman_dominating(g));
    Ok(SolveResult {
        kind: ParameterKind::GammaTR,
        value,
        witness: Witness::Roman(witness),
        explored,
    })
}

/// All subsets of `{0..n-1}` in increasing mask order.
fn combinations_all(n: usize) -> impl Iterator<Item = VertexSet> {
    let full = VertexSet::full(n).bits();
    std::iter::successors(Some(0 as crate::graph::Word), move |&m| {
        (m != full).then(|| m + 1)
    })
    .map(VertexSet::from_bits)
}
