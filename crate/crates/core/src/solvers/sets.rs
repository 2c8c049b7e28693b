use super::{check_no_isolated, combinations, ParameterKind, SolveResult, SolverConfig, Witness};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Whether `s` satisfies the defining predicate of a vertex-set parameter.
pub fn is_feasible(g: &Graph, s: VertexSet, kind: ParameterKind) -> Result<bool> {
    if kind.is_roman_kind() {
        return Err(Error::NotASetKind(kind));
    }
    g.check_set(s)?;
    if kind.requires_no_isolated() {
        check_no_isolated(g, kind)?;
    }
    Ok(feasible(g, s, kind))
}

#[inline]
pub(crate) fn feasible(g: &Graph, s: VertexSet, kind: ParameterKind) -> bool {
    let all = g.vertices();
    match kind {
        ParameterKind::Gamma => (all - s)
            .iter()
            .all(|v| !g.neighbors(v).is_disjoint(s)),
        ParameterKind::GammaT => all.iter().all(|v| !g.neighbors(v).is_disjoint(s)),
        ParameterKind::GammaP => (all - s)
            .iter()
            .all(|v| (g.neighbors(v) & s).len() == 1),
        // N[u] ∩ N[v] ≠ ∅ for u, v ∈ S iff some N[w] holds both.
        ParameterKind::Rho => all.iter().all(|w| (g.closed(w) & s).len() <= 1),
        ParameterKind::RhoO => all.iter().all(|w| (g.neighbors(w) & s).len() <= 1),
        _ => unreachable!("roman kinds are rejected by the callers"),
    }
}

pub(super) fn solve_set(g: &Graph, kind: ParameterKind) -> Result<SolveResult> {
    let n = g.order();
    let mut explored = 0u64;
    if kind.is_maximum() {
        // Packings are hereditary: stop at the first size with no feasible set.
        let mut best = VertexSet::EMPTY;
        for k in 1..=n {
            let found = combinations(n, k).find(|&s| {
                explored += 1;
                feasible(g, s, kind)
            });
            match found {
                Some(s) => best = s,
                None => break,
            }
        }
        return Ok(SolveResult {
            kind,
            value: best.len(),
            witness: Witness::Set(best),
            explored,
        });
    }
    for k in 0..=n {
        let found = combinations(n, k).find(|&s| {
            explored += 1;
            feasible(g, s, kind)
        });
        if let Some(s) = found {
            return Ok(SolveResult {
                kind,
                value: k,
                witness: Witness::Set(s),
                explored,
            });
        }
    }
    unreachable!("V(G) is feasible for every minimisation kind on a valid input")
}

/// Every optimal set of a vertex-set parameter, in increasing bitmask order.
pub fn optimal_sets(g: &Graph, kind: ParameterKind, config: &SolverConfig) -> Result<Vec<VertexSet>> {
    if kind.is_roman_kind() {
        return Err(Error::NotASetKind(kind));
    }
    let best = super::solve(g, kind, config)?.value;
    Ok(combinations(g.order(), best)
        .filter(|&s| feasible(g, s, kind))
        .collect())
}
