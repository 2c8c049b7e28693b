//! Branch and bound over V₂ for γ_R and γ_Rᵖ.
//!
//! A node fixes a set `twos` ⊆ V₂ and a set `excluded` of vertices kept out
//! of V₂. Branching picks a vertex that is not yet dominated by `twos` and
//! splits on the first vertex of its closed neighbourhood to enter V₂; the
//! last branch excludes the whole neighbourhood, which fixes that vertex at
//! weight 1. Branches therefore partition the V₂ sets, and a leaf (no
//! undominated vertex with a candidate left) stands for exactly one V₂ whose
//! forced completion is cheapest in its subtree.

use super::{ParameterKind, SolveResult, SolverConfig, Witness};
use crate::error::Result;
use crate::graph::{Graph, RomanAssignment, VertexSet};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rule {
    /// Every 0-vertex needs at least one 2-neighbour.
    Roman,
    /// Every 0-vertex needs exactly one 2-neighbour.
    Perfect,
}

impl Rule {
    fn of(kind: ParameterKind) -> Rule {
        match kind {
            ParameterKind::GammaR => Rule::Roman,
            ParameterKind::GammaRp => Rule::Perfect,
            other => unreachable!("{other} is not searched over V2"),
        }
    }
}

#[cfg(test)]
/// Weight of the forced completion of `twos`.
pub(crate) fn completion_weight(g: &Graph, twos: VertexSet, perfect: bool) -> usize {
    2 * twos.len() + forced_ones(g, twos, perfect).len()
}

/// Vertices outside `twos` that must carry weight 1.
pub(crate) fn forced_ones(g: &Graph, twos: VertexSet, perfect: bool) -> VertexSet {
    (g.vertices() - twos)
        .iter()
        .filter(|&v| {
            let k = (g.neighbors(v) & twos).len();
            if perfect {
                k != 1
            } else {
                k == 0
            }
        })
        .collect()
}

pub(crate) fn completion(g: &Graph, twos: VertexSet, perfect: bool) -> RomanAssignment {
    RomanAssignment::new(g.order(), forced_ones(g, twos, perfect), twos)
        .expect("forced ones are disjoint from twos")
}

enum Mode {
    /// Minimise (weight, V₂ mask) lexicographically.
    Optimise { cost: usize, mask: VertexSet },
    /// Collect every V₂ whose completion weighs exactly `target`.
    Collect { target: usize, found: Vec<VertexSet> },
}

struct Search<'g> {
    g: &'g Graph,
    rule: Rule,
    mode: Mode,
    explored: u64,
}

struct Node {
    /// Weight already committed: V₂ plus vertices whose weight is ≥ 1 in every completion.
    fixed: usize,
    /// Non-V₂ vertices with no V₂-neighbour that can still be dominated.
    undominated: VertexSet,
}

impl Search<'_> {
    fn evaluate(&self, twos: VertexSet, candidates: VertexSet) -> Node {
        let g = self.g;
        let mut fixed = 2 * twos.len();
        let mut undominated = VertexSet::EMPTY;
        for v in (g.vertices() - twos).iter() {
            let k = (g.neighbors(v) & twos).len();
            if k == 0 {
                if g.closed(v).is_disjoint(candidates) {
                    fixed += 1;
                } else {
                    undominated = undominated.with(v);
                }
            } else if k >= 2 && self.rule == Rule::Perfect {
                fixed += 1;
            }
        }
        Node { fixed, undominated }
    }

    /// Fractional covering bound on the extra weight needed for `undominated`.
    ///
    /// Each undominated vertex is paid for either by its own weight (≥ 1) or by
    /// a new V₂ vertex `u`, whose cost 2 (or 1 when `u` is already counted as a
    /// weight-1 vertex) is shared by at most |N[u] ∩ U| vertices.
    fn covering_bound(&self, twos: VertexSet, candidates: VertexSet, undominated: VertexSet) -> usize {
        let g = self.g;
        let mut total = 0.0f64;
        for v in undominated.iter() {
            let mut charge = 1.0f64;
            for u in (g.closed(v) & candidates).iter() {
                let cover = (g.closed(u) & undominated).len() as f64;
                let already = self.rule == Rule::Perfect && (g.neighbors(u) & twos).len() >= 2;
                let cost = if already { 1.0 } else { 2.0 };
                charge = charge.min(cost / cover);
            }
            total += charge;
        }
        (total - 1e-9).ceil().max(0.0) as usize
    }

    fn run(&mut self, twos: VertexSet, excluded: VertexSet) {
        self.explored += 1;
        let g = self.g;
        let candidates = g.vertices() - twos - excluded;
        let node = self.evaluate(twos, candidates);

        if node.undominated.is_empty() {
            let cost = node.fixed;
            match &mut self.mode {
                Mode::Optimise { cost: best, mask } => {
                    if (cost, twos) < (*best, *mask) {
                        *best = cost;
                        *mask = twos;
                    }
                }
                Mode::Collect { target, found } => {
                    if cost == *target {
                        found.push(twos);
                    }
                }
            }
            return;
        }

        let bound = node.fixed + self.covering_bound(twos, candidates, node.undominated);
        let prune = match &self.mode {
            // Every V₂ in this subtree contains `twos`, so its mask is at least as large.
            Mode::Optimise { cost, mask } => bound > *cost || (bound == *cost && twos >= *mask),
            Mode::Collect { target, .. } => bound > *target,
        };
        if prune {
            return;
        }

        let pivot = node
            .undominated
            .iter()
            .min_by_key(|&v| ((g.closed(v) & candidates).len(), v))
            .expect("nonempty");
        let mut options: Vec<usize> = (g.closed(pivot) & candidates).to_vec();
        options.sort_by_key(|&u| (std::cmp::Reverse((g.closed(u) & node.undominated).len()), u));

        let mut tried = VertexSet::EMPTY;
        for u in options {
            self.run(twos.with(u), excluded | tried);
            tried = tried.with(u);
        }
        self.run(twos, excluded | tried);
    }
}

pub(super) fn solve_roman(g: &Graph, kind: ParameterKind) -> Result<SolveResult> {
    let rule = Rule::of(kind);
    // V₂ = ∅ with every vertex at weight 1 is always feasible.
    let mut search = Search {
        g,
        rule,
        mode: Mode::Optimise {
            cost: g.order(),
            mask: VertexSet::EMPTY,
        },
        explored: 0,
    };
    search.run(VertexSet::EMPTY, VertexSet::EMPTY);
    let Mode::Optimise { cost, mask } = search.mode else {
        unreachable!()
    };
    let witness = completion(g, mask, rule == Rule::Perfect);
    debug_assert_eq!(witness.weight(), cost);
    Ok(SolveResult {
        kind,
        value: cost,
        witness: Witness::Roman(witness),
        explored: search.explored,
    })
}

/// Every V₂ set of an optimal RDF (γ_R) or PRDF (γ_Rᵖ), in increasing mask order.
pub fn enumerate_optimal_v2(
    g: &Graph,
    kind: ParameterKind,
    config: &SolverConfig,
) -> Result<Vec<VertexSet>> {
    let rule = match kind {
        ParameterKind::GammaR | ParameterKind::GammaRp => Rule::of(kind),
        other => return Err(crate::error::Error::Hypothesis(format!(
            "optimal V2 enumeration is defined for gamma_R and gamma_Rp, not {other}"
        ))),
    };
    config.check(g, kind)?;
    let target = solve_roman(g, kind)?.value;
    let mut search = Search {
        g,
        rule,
        mode: Mode::Collect {
            target,
            found: Vec::new(),
        },
        explored: 0,
    };
    search.run(VertexSet::EMPTY, VertexSet::EMPTY);
    let Mode::Collect { mut found, .. } = search.mode else {
        unreachable!()
    };
    found.sort();
    Ok(found)
}
