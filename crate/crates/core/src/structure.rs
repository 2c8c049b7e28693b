//! Structural predicates on factor graphs: efficient open and closed
//! domination, the pair properties 𝒫₁/𝒫₂/𝒫₃, dominating couples and the
//! Roman and perfect-Roman graph classes.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solvers::{self, combinations, ParameterKind, SolverConfig};

/// Smallest-mask set of minimum size S with |N(v) ∩ S| = 1 for every vertex v.
///
/// Such an S is perfect dominating and G[S] is a perfect matching, so it is
/// exactly an efficient open dominating set. All of them share the size γ_t(G).
pub fn is_efficient_open_domination(g: &Graph, config: &SolverConfig) -> Result<Option<VertexSet>> {
    config.check(g, ParameterKind::GammaT)?;
    if g.first_isolated_vertex().is_some() {
        return Ok(None);
    }
    let n = g.order();
    for k in (2..=n).step_by(2) {
        if let Some(s) = combinations(n, k)
            .find(|&s| g.vertices().iter().all(|v| (g.neighbors(v) & s).len() == 1))
        {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Smallest-mask set that is both dominating and a packing.
///
/// Such a set has |N[v] ∩ S| = 1 for every v; its size is γ(G) = ρ(G).
pub fn is_efficient_closed_domination(g: &Graph, config: &SolverConfig) -> Result<Option<VertexSet>> {
    config.check(g, ParameterKind::Gamma)?;
    let n = g.order();
    for k in 1..=n {
        if let Some(s) = combinations(n, k)
            .find(|&s| g.vertices().iter().all(|v| (g.closed(v) & s).len() == 1))
        {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum HypothesisKind {
    P1,
    P2,
    P3,
}

impl HypothesisKind {
    pub const ALL: [HypothesisKind; 3] = [HypothesisKind::P1, HypothesisKind::P2, HypothesisKind::P3];
}

impl fmt::Display for HypothesisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for HypothesisKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "P1" => Ok(HypothesisKind::P1),
            "P2" => Ok(HypothesisKind::P2),
            "P3" => Ok(HypothesisKind::P3),
            _ => Err(format!("unknown property {s:?}; expected P1, P2 or P3")),
        }
    }
}

/// Outcome of a pair property together with the facts it was decided from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub kind: HypothesisKind,
    pub holds: bool,
    pub delta_h: usize,
    pub gamma_h: usize,
    /// Efficient open dominating set of G, for P1 and P3.
    pub eod: Option<VertexSet>,
    /// Efficient closed dominating set of G, for P2.
    pub ecd: Option<VertexSet>,
    /// γᵖ(G) and γ_t(G), for P3 only when G has no isolated vertex.
    pub gamma_p_g: Option<usize>,
    pub gamma_t_g: Option<usize>,
}

pub fn check_hypothesis(
    g: &Graph,
    h: &Graph,
    kind: HypothesisKind,
    config: &SolverConfig,
) -> Result<HypothesisCheck> {
    if g.is_trivial() || h.is_trivial() {
        return Err(Error::Hypothesis(format!("{kind} is defined for nontrivial factors only")));
    }
    let delta_h = h.min_degree();
    let gamma_h = solvers::value(h, ParameterKind::Gamma, config)?;
    let mut check = HypothesisCheck {
        kind,
        holds: false,
        delta_h,
        gamma_h,
        eod: None,
        ecd: None,
        gamma_p_g: None,
        gamma_t_g: None,
    };
    match kind {
        HypothesisKind::P1 | HypothesisKind::P3 => {
            check.eod = is_efficient_open_domination(g, config)?;
            check.holds = delta_h == 0 && check.eod.is_some();
            if kind == HypothesisKind::P3 {
                check.gamma_p_g = Some(solvers::value(g, ParameterKind::GammaP, config)?);
                if g.first_isolated_vertex().is_none() {
                    check.gamma_t_g = Some(solvers::value(g, ParameterKind::GammaT, config)?);
                }
                check.holds &= check.gamma_t_g.is_some() && check.gamma_p_g == check.gamma_t_g;
            }
        }
        HypothesisKind::P2 => {
            check.ecd = is_efficient_closed_domination(g, config)?;
            check.holds = gamma_h == 1 && check.ecd.is_some();
        }
    }
    Ok(check)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    /// γ_R(G) = 2γ(G).
    Roman,
    /// γ_Rᵖ(G) = 2γᵖ(G).
    PerfectRoman,
}

impl FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "roman" => Ok(GraphClass::Roman),
            "perfect_roman" => Ok(GraphClass::PerfectRoman),
            _ => Err(format!("unknown graph class {s:?}; expected roman or perfect_roman")),
        }
    }
}

pub fn graph_class(g: &Graph, which: GraphClass, config: &SolverConfig) -> Result<bool> {
    let (roman, plain) = match which {
        GraphClass::Roman => (ParameterKind::GammaR, ParameterKind::Gamma),
        GraphClass::PerfectRoman => (ParameterKind::GammaRp, ParameterKind::GammaP),
    };
    Ok(solvers::value(g, roman, config)? == 2 * solvers::value(g, plain, config)?)
}

/// Whether every vertex outside `b` has a neighbour in `a ∪ b`.
pub fn is_dominating_couple(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool> {
    g.check_set(a)?;
    g.check_set(b)?;
    if !a.is_disjoint(b) {
        return Err(Error::OverlappingSets { overlap: (a & b).to_vec() });
    }
    let u = a | b;
    Ok((g.vertices() - b).iter().all(|x| !g.neighbors(x).is_disjoint(u)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn efficient_open_domination_examples() {
        let cfg = SolverConfig::default();
        assert_eq!(is_efficient_open_domination(&path(4), &cfg).unwrap(), Some(set(&[1, 2])));
        assert_eq!(is_efficient_open_domination(&cycle(5), &cfg).unwrap(), None);
        assert_eq!(is_efficient_open_domination(&cycle(4), &cfg).unwrap(), Some(set(&[0, 1])));
        assert_eq!(is_efficient_open_domination(&Graph::empty(2).unwrap(), &cfg).unwrap(), None);
    }

    #[test]
    fn efficient_closed_domination_examples() {
        let cfg = SolverConfig::default();
        assert_eq!(is_efficient_closed_domination(&path(4), &cfg).unwrap(), Some(set(&[0, 3])));
        assert_eq!(is_efficient_closed_domination(&cycle(4), &cfg).unwrap(), None);
        assert_eq!(
            is_efficient_closed_domination(&Graph::complete(3).unwrap(), &cfg).unwrap(),
            Some(set(&[0]))
        );
    }

    #[test]
    fn pair_properties() {
        let cfg = SolverConfig::default();
        let n2 = Graph::empty(2).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let p1 = check_hypothesis(&path(4), &n2, HypothesisKind::P1, &cfg).unwrap();
        assert!(p1.holds);
        assert_eq!(p1.eod, Some(set(&[1, 2])));
        assert!(check_hypothesis(&path(4), &k2, HypothesisKind::P2, &cfg).unwrap().holds);
        let p3 = check_hypothesis(&path(4), &n2, HypothesisKind::P3, &cfg).unwrap();
        assert!(p3.holds);
        assert_eq!((p3.gamma_p_g, p3.gamma_t_g), (Some(2), Some(2)));
        assert!(!check_hypothesis(&path(4), &k2, HypothesisKind::P1, &cfg).unwrap().holds);
        assert!(matches!(
            check_hypothesis(&Graph::empty(1).unwrap(), &k2, HypothesisKind::P2, &cfg),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn graph_classes() {
        let cfg = SolverConfig::default();
        assert!(!graph_class(&path(4), GraphClass::Roman, &cfg).unwrap());
        assert!(graph_class(&Graph::complete(3).unwrap(), GraphClass::Roman, &cfg).unwrap());
    }

    #[test]
    fn dominating_couples() {
        assert!(is_dominating_couple(&path(4), set(&[1, 2]), VertexSet::EMPTY).unwrap());
        assert!(is_dominating_couple(&Graph::complete(2).unwrap(), VertexSet::EMPTY, set(&[0])).unwrap());
        assert!(!is_dominating_couple(&path(4), set(&[1]), VertexSet::EMPTY).unwrap());
        assert_eq!(
            is_dominating_couple(&path(4), set(&[1, 2]), set(&[2])),
            Err(Error::OverlappingSets { overlap: vec![2] })
        );
    }
}
