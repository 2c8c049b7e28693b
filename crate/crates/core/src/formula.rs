//! Theorem-indexed predictions for parameters of G ∘ H.
//!
//! Every statement is evaluated from a [`FactorProfile`] of G and the degree
//! data of H. A statement is emitted only when its hypotheses hold as
//! written; it then asserts an equality, a bound, or a characterization about
//! one product parameter. The same statements feed [`predict`] and the
//! verification harness, which resolves them against measured values instead.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, RomanAssignment, VertexSet};
use crate::product::{lex_product, ProductIndexMap};
use crate::solvers::{
    self, completion, enumerate_optimal_v2, open_packing_profiles, optimal_sets, zeta, zeta_couples,
    zeta_prime, OpenPackingProfile, ParameterKind, SolverConfig, Witness, ZetaCouple,
};
use crate::structure::{is_efficient_closed_domination, is_efficient_open_domination};

macro_rules! theorem_ids {
    ($($variant:ident => $name:literal,)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $($variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name,)*
                }
            }
        }
    };
}

theorem_ids! {
    GammaLex => "GAMMA_LEX",
    GammapLex => "GAMMAP_LEX",
    RomanLex => "ROMAN_LEX",
    RomanLb => "ROMAN_LB",
    RomanUb => "ROMAN_UB",
    RomanGraphCor => "ROMAN_GRAPH_COR",
    ZetaBounds => "ZETA_BOUNDS",
    PrUbCorona => "PR_UB_CORONA",
    PrUbFunctionI => "PR_UB_FUNCTION_I",
    PrUbFunctionII => "PR_UB_FUNCTION_II",
    PrUbFunctionIII => "PR_UB_FUNCTION_III",
    PrUbFunctionIV => "PR_UB_FUNCTION_IV",
    PrUbPacking => "PR_UB_PACKING",
    PrCorEod => "PR_COR_EOD",
    PrCorEcd => "PR_COR_ECD",
    PrGamma1I => "PR_GAMMA1_I",
    PrGamma1II => "PR_GAMMA1_II",
    PrLbGeneral => "PR_LB_GENERAL",
    PrExactEcd => "PR_EXACT_ECD",
    PrExactEod => "PR_EXACT_EOD",
    PrCorP2P3 => "PR_COR_P2P3",
    PrTrivialLb => "PR_TRIVIAL_LB",
    PrEqFactor => "PR_EQ_FACTOR",
    PrEq2Gamma => "PR_EQ_2GAMMA",
    PrIsolatedLayers => "PR_ISOLATED_LAYERS",
    PrPerfectromanChar => "PR_PERFECTROMAN_CHAR",
    PrEqRomanChar => "PR_EQ_ROMAN_CHAR",
    PrSandwich => "PR_SANDWICH",
    LemmaAb => "LEMMA_AB",
    LemmaLayers => "LEMMA_LAYERS",
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown theorem id {s:?}"))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Product parameters the engine predicts, in dependency order.
pub const PREDICTED_KINDS: [ParameterKind; 4] = [
    ParameterKind::Gamma,
    ParameterKind::GammaP,
    ParameterKind::GammaR,
    ParameterKind::GammaRp,
];

/// Exact parameters and witnesses of the left factor G.
#[derive(Clone, Debug, Serialize)]
pub struct FactorProfile {
    pub order: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub has_isolated: bool,
    pub gamma: usize,
    pub gamma_p: usize,
    pub rho: usize,
    pub rho_o: usize,
    pub gamma_r: usize,
    pub gamma_rp: usize,
    /// Absent when G has an isolated vertex.
    pub gamma_t: Option<usize>,
    pub gamma_tr: Option<usize>,
    pub gamma_set: VertexSet,
    pub gamma_t_set: Option<VertexSet>,
    pub gamma_p_sets: Vec<VertexSet>,
    pub eod: Option<VertexSet>,
    pub ecd: Option<VertexSet>,
    pub zeta: Option<(usize, ZetaCouple)>,
    pub zeta_couples: Vec<ZetaCouple>,
    pub zeta_prime: Option<(usize, VertexSet)>,
    #[serde(skip)]
    pub packings: BTreeMap<OpenPackingProfile, VertexSet>,
    /// Every γ_Rᵖ(G)-function, one per optimal V₂.
    pub optimal_prdfs: Vec<RomanAssignment>,
}

impl FactorProfile {
    pub fn new(g: &Graph, config: &SolverConfig) -> Result<Self> {
        use ParameterKind::*;
        let value = |kind| solvers::value(g, kind, config);
        let has_isolated = g.first_isolated_vertex().is_some();
        let gamma_result = solvers::solve(g, Gamma, config)?;
        let (gamma_t, gamma_t_set, gamma_tr, zeta_pair, couples) = if has_isolated {
            (None, None, None, None, Vec::new())
        } else {
            let t = solvers::solve(g, GammaT, config)?;
            (
                Some(t.value),
                t.witness.as_set(),
                Some(value(GammaTR)?),
                Some(zeta(g, config)?),
                zeta_couples(g, config)?,
            )
        };
        let optimal_prdfs = enumerate_optimal_v2(g, GammaRp, config)?
            .into_iter()
            .map(|twos| completion(g, twos, true))
            .collect();
        Ok(FactorProfile {
            order: g.order(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            connected: g.is_connected(),
            has_isolated,
            gamma: gamma_result.value,
            gamma_p: value(GammaP)?,
            rho: value(Rho)?,
            rho_o: value(RhoO)?,
            gamma_r: value(GammaR)?,
            gamma_rp: value(GammaRp)?,
            gamma_t,
            gamma_tr,
            gamma_set: gamma_result.witness.as_set().expect("set kind"),
            gamma_t_set,
            gamma_p_sets: optimal_sets(g, GammaP, config)?,
            eod: is_efficient_open_domination(g, config)?,
            ecd: is_efficient_closed_domination(g, config)?,
            zeta: zeta_pair,
            zeta_couples: couples,
            zeta_prime: zeta_prime(g, config)?,
            packings: open_packing_profiles(g, config)?,
            optimal_prdfs,
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

/// Degree data of the right factor H and the vertices the constructions use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RightFactor {
    pub order: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub min_degree_vertex: usize,
    pub max_degree_vertex: usize,
}

impl RightFactor {
    pub fn new(h: &Graph) -> Self {
        let by_degree = |best: fn(usize, usize) -> bool| {
            (0..h.order())
                .reduce(|a, b| if best(h.degree(b), h.degree(a)) { b } else { a })
                .expect("graphs are nonempty")
        };
        RightFactor {
            order: h.order(),
            min_degree: h.min_degree(),
            max_degree: h.max_degree(),
            min_degree_vertex: by_degree(|x, y| x < y),
            max_degree_vertex: by_degree(|x, y| x > y),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// γ(H) = 1 exactly when some vertex is universal.
    pub fn has_universal_vertex(&self) -> bool {
        self.max_degree + 1 == self.order
    }

    /// n(H) − Δ(H), the number of vertices a maximum-degree vertex misses plus one.
    pub fn codegree(&self) -> usize {
        self.order - self.max_degree
    }
}

/// Right-hand side of an assertion: a number, or a multiple of another product parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rhs {
    Value(usize),
    Product { kind: ParameterKind, factor: usize },
}

impl fmt::Display for Rhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rhs::Value(v) => write!(f, "{v}"),
            Rhs::Product { kind, factor: 1 } => write!(f, "{kind}(G∘H)"),
            Rhs::Product { kind, factor } => write!(f, "{factor}·{kind}(G∘H)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Assertion {
    Equals(Rhs),
    AtLeast(Rhs),
    AtMost(Rhs),
    /// target = rhs holds exactly when `condition` does.
    Iff { rhs: Rhs, condition: bool },
    /// target = rhs forces `condition`.
    OnlyIf { rhs: Rhs, condition: bool },
    /// No conclusion is available for target = rhs on this pair.
    Undecided { rhs: Rhs },
}

impl Assertion {
    pub fn rhs(&self) -> Rhs {
        match *self {
            Assertion::Equals(r) | Assertion::AtLeast(r) | Assertion::AtMost(r) => r,
            Assertion::Iff { rhs, .. } | Assertion::OnlyIf { rhs, .. } | Assertion::Undecided { rhs } => rhs,
        }
    }
}

/// One fired statement about a product parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Statement {
    pub theorem: TheoremId,
    pub part: &'static str,
    pub target: ParameterKind,
    pub assertion: Assertion,
}

impl Statement {
    pub fn label(&self) -> String {
        format!("{}:{}", self.theorem, self.part)
    }
}

/// Factor data shared by every statement about one pair.
pub struct PairContext<'a> {
    pub g: &'a Graph,
    pub h: &'a Graph,
    pub gp: &'a FactorProfile,
    pub hp: RightFactor,
}

impl<'a> PairContext<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph, gp: &'a FactorProfile) -> Self {
        PairContext { g, h, gp, hp: RightFactor::new(h) }
    }

    fn p1(&self) -> bool {
        self.hp.min_degree == 0 && self.gp.eod.is_some()
    }

    fn p2(&self) -> bool {
        self.hp.has_universal_vertex() && self.gp.ecd.is_some()
    }

    fn p3(&self) -> bool {
        self.p1() && Some(self.gp.gamma_p) == self.gp.gamma_t
    }

    fn pair_nontrivial(&self) -> bool {
        !self.gp.is_trivial() && !self.hp.is_trivial()
    }

    fn is_open_packing(&self, s: VertexSet) -> bool {
        self.g.vertices().iter().all(|w| (self.g.neighbors(w) & s).len() <= 1)
    }

    /// Every statement whose hypotheses hold, for one target parameter.
    pub fn statements(&self, target: ParameterKind) -> Vec<Statement> {
        let mut out = Vec::new();
        let mut emit = |theorem, part, assertion| {
            out.push(Statement { theorem, part, target, assertion });
        };
        match target {
            ParameterKind::Gamma => self.gamma_statements(&mut emit),
            ParameterKind::GammaP => self.gamma_p_statements(&mut emit),
            ParameterKind::GammaR => self.roman_statements(&mut emit),
            ParameterKind::GammaRp => self.perfect_roman_statements(&mut emit),
            _ => {}
        }
        out
    }

    fn gamma_statements(&self, emit: &mut impl FnMut(TheoremId, &'static str, Assertion)) {
        let gp = self.gp;
        if gp.has_isolated || self.hp.is_trivial() {
            return;
        }
        if self.hp.has_universal_vertex() {
            emit(TheoremId::GammaLex, "gamma(H)=1", Assertion::Equals(Rhs::Value(gp.gamma)));
        } else {
            let gt = gp.gamma_t.expect("no isolated vertex");
            emit(TheoremId::GammaLex, "gamma(H)>=2", Assertion::Equals(Rhs::Value(gt)));
        }
    }

    fn gamma_p_statements(&self, emit: &mut impl FnMut(TheoremId, &'static str, Assertion)) {
        let gp = self.gp;
        if !gp.connected || !self.pair_nontrivial() {
            return;
        }
        let (part, value) = if self.p1() {
            ("P1", gp.gamma_t.expect("connected and nontrivial"))
        } else if self.p2() {
            ("P2", gp.gamma)
        } else {
            ("otherwise", gp.order * self.hp.order)
        };
        emit(TheoremId::GammapLex, part, Assertion::Equals(Rhs::Value(value)));
    }

    fn roman_statements(&self, emit: &mut impl FnMut(TheoremId, &'static str, Assertion)) {
        let (gp, hp) = (self.gp, self.hp);
        if gp.has_isolated {
            return;
        }
        let gamma_t = gp.gamma_t.expect("no isolated vertex");
        let codegree = hp.codegree();
        if !hp.is_trivial() {
            let (part, value) = match codegree {
                1 => ("Delta=n-1", 2 * gp.gamma),
                2 => ("Delta=n-2", gp.zeta.expect("no isolated vertex").0),
                _ => ("Delta<=n-3", 2 * gamma_t),
            };
            emit(TheoremId::RomanLex, part, Assertion::Equals(Rhs::Value(value)));
            emit(TheoremId::RomanLb, "i", Assertion::AtLeast(Rhs::Value(2 * gp.gamma)));
            if codegree != 2 {
                let rhs = Rhs::Product { kind: ParameterKind::Gamma, factor: 2 };
                emit(TheoremId::RomanGraphCor, "i", Assertion::Equals(rhs));
            }
        }
        emit(TheoremId::RomanUb, "i", Assertion::AtMost(Rhs::Value(2 * gamma_t)));
        if codegree == 2 {
            let gamma_tr = gp.gamma_tr.expect("no isolated vertex");
            let lower = gamma_tr.max(gamma_t + gp.gamma);
            emit(TheoremId::ZetaBounds, "lower", Assertion::AtLeast(Rhs::Value(lower)));
            let upper = (3 * gp.gamma).min(2 * gamma_t);
            emit(TheoremId::ZetaBounds, "upper", Assertion::AtMost(Rhs::Value(upper)));
            if gamma_t == gp.gamma {
                emit(TheoremId::ZetaBounds, "tight:gamma_t=gamma", Assertion::Equals(Rhs::Value(2 * gamma_t)));
            }
            if gamma_t == 2 * gp.gamma {
                emit(TheoremId::ZetaBounds, "tight:gamma_t=2gamma", Assertion::Equals(Rhs::Value(3 * gp.gamma)));
            }
        }
    }

    fn perfect_roman_statements(&self, emit: &mut impl FnMut(TheoremId, &'static str, Assertion)) {
        use Assertion::*;
        use TheoremId::*;
        let (gp, hp) = (self.gp, self.hp);
        let nh = hp.order;
        let (delta, codegree) = (hp.min_degree, hp.codegree());

        emit(PrSandwich, "lower", AtLeast(Rhs::Product { kind: ParameterKind::GammaR, factor: 1 }));
        emit(PrSandwich, "upper", AtMost(Rhs::Product { kind: ParameterKind::GammaP, factor: 2 }));

        if !gp.has_isolated {
            let gamma_t = gp.gamma_t.expect("no isolated vertex");
            emit(PrUbCorona, "i", AtMost(Rhs::Value(gp.gamma_p * (nh + 1))));
            if let Some(bound) = self.function_bound_i() {
                emit(PrUbFunctionI, "i", AtMost(Rhs::Value(bound)));
            }
            if self.function_ii_witness().is_some() {
                emit(PrUbFunctionII, "ii", AtMost(Rhs::Value(gp.gamma_rp * nh - gp.gamma * (nh - 1))));
            }
            if let Some(bound) = self.function_bound_iii() {
                emit(PrUbFunctionIII, "iii", AtMost(Rhs::Value(bound)));
            }
            if self.function_iv_witness().is_some() {
                emit(PrUbFunctionIV, "iv", AtMost(Rhs::Value(gp.gamma_rp + gp.gamma_p * (nh - 1))));
            }
            let (bound, _) = self.packing_bound();
            emit(PrUbPacking, "i", AtMost(Rhs::Value(bound)));
            if gp.eod.is_some() {
                emit(PrCorEod, "i", AtMost(Rhs::Value(gamma_t * (2 + delta))));
            }
            if gp.ecd.is_some() {
                emit(PrCorEcd, "ii", AtMost(Rhs::Value(gp.gamma * (codegree + 1))));
            }
            if !hp.is_trivial() {
                let lower = gp.gamma * (codegree + 1).min(2 + delta);
                emit(PrLbGeneral, "i", AtLeast(Rhs::Value(lower)));
            }
            if gp.ecd.is_some() && nh >= 2 && nh <= hp.max_degree + delta + 1 {
                emit(PrExactEcd, "i", Equals(Rhs::Value(gp.gamma * (codegree + 1))));
            }
            if gp.eod.is_some()
                && gp.gamma_p == gamma_t
                && gamma_t == gp.gamma
                && !hp.is_trivial()
                && nh >= hp.max_degree + delta + 1
            {
                emit(PrExactEod, "ii", Equals(Rhs::Value(gp.gamma * (2 + delta))));
            }
            if !hp.is_trivial() {
                if self.p2() {
                    emit(PrCorP2P3, "i", Equals(Rhs::Value(2 * gp.gamma)));
                }
                if gp.gamma_p == gp.gamma && self.p3() {
                    emit(PrCorP2P3, "ii", Equals(Rhs::Value(2 * gp.gamma)));
                }
            }
            if gp.eod.is_some() && nh >= hp.max_degree + 2 * delta + 3 {
                emit(PrIsolatedLayers, "i", Equals(Rhs::Value(gamma_t * (2 + delta))));
            }
        }

        if !gp.is_trivial() && gp.gamma == 1 {
            if gp.min_degree >= 2 {
                emit(PrGamma1I, "i", Equals(Rhs::Value(codegree + 1)));
            } else if gp.min_degree == 1 {
                emit(PrGamma1II, "ii", Equals(Rhs::Value((2 * delta + 4).min(codegree + 1))));
            }
        }

        if self.pair_nontrivial() {
            let lower = gp.gamma_rp.max(2 * gp.gamma);
            emit(PrTrivialLb, "i", AtLeast(Rhs::Value(lower)));
            let p2_or_p3 = self.p2() || self.p3();
            let condition = gp.gamma_rp == 2 * gp.gamma_p && p2_or_p3;
            emit(PrEqFactor, "ii", Iff { rhs: Rhs::Value(gp.gamma_rp), condition });
            if nh >= 3 {
                let condition = gp.gamma_p == gp.gamma && p2_or_p3;
                emit(PrEq2Gamma, "iii", Iff { rhs: Rhs::Value(2 * gp.gamma), condition });
            }
        }

        if gp.connected && self.pair_nontrivial() {
            self.perfect_roman_product_char(emit);
            if nh >= 3 {
                self.roman_equality_char(emit);
            }
        }
    }

    fn perfect_roman_product_char(&self, emit: &mut impl FnMut(TheoremId, &'static str, Assertion)) {
        use Assertion::*;
        let gp = self.gp;
        let rhs = Rhs::Product { kind: ParameterKind::GammaP, factor: 2 };
        let id = TheoremId::PrPerfectromanChar;
        let gamma_t = gp.gamma_t.expect("connected and nontrivial");
        match self.hp.codegree() {
            1 => emit(id, "i", Iff { rhs, condition: self.p2() }),
            2 => {
                let packings_ok = self
                    .dominating_open_packings()
                    .all(|p| 2 * gamma_t <= 2 * p.paired + 3 * p.isolated);
                emit(id, "ii-a", OnlyIf { rhs, condition: self.p1() && packings_ok });
                if gp.gamma_rp == 2 * gamma_t || gamma_t == gp.gamma {
                    emit(id, "ii-b", Iff { rhs, condition: self.p1() });
                } else {
                    emit(id, "ii-gap", Undecided { rhs });
                }
            }
            _ => emit(id, "iii", Iff { rhs, condition: self.p1() }),
        }
    }

    fn roman_equality_char(&self, emit: &mut impl FnMut(TheoremId, &'static str, Assertion)) {
        use Assertion::*;
        let gp = self.gp;
        let rhs = Rhs::Product { kind: ParameterKind::GammaR, factor: 1 };
        let id = TheoremId::PrEqRomanChar;
        let gamma_t = gp.gamma_t.expect("connected and nontrivial");
        let delta = self.hp.min_degree;
        match self.hp.codegree() {
            1 => emit(id, "i", Iff { rhs, condition: self.p2() }),
            2 => {
                let condition = gp.zeta_couples.iter().any(|c| {
                    self.is_open_packing(c.a | c.b) && (delta == 0 || c.a.is_empty())
                });
                emit(id, "ii", Iff { rhs, condition });
            }
            3 => {
                let condition = if delta == 0 {
                    gp.zeta_prime.map(|(v, _)| v) == Some(2 * gamma_t)
                } else {
                    gamma_t == 2 * gp.gamma_p && gp.gamma_p == gp.rho
                };
                emit(id, "iii", Iff { rhs, condition });
            }
            _ => emit(id, "iv", Iff { rhs, condition: self.p1() }),
        }
    }

    fn dominating_open_packings(&self) -> impl Iterator<Item = &OpenPackingProfile> + '_ {
        let n = self.gp.order;
        self.gp.packings.keys().filter(move |p| p.closed_neighborhood == n)
    }

    /// Best bound of the open-packing family with its smallest-mask minimiser.
    pub fn packing_bound(&self) -> (usize, VertexSet) {
        let (gp, hp) = (self.gp, self.hp);
        gp.packings
            .iter()
            .map(|(p, &s)| {
                let cost = p.isolated * (hp.codegree() + 1)
                    + p.paired * (2 + hp.min_degree)
                    + hp.order * (gp.order - p.closed_neighborhood);
                (cost, s)
            })
            .min()
            .expect("the empty set is an open packing")
    }

    fn function_bound_i(&self) -> Option<usize> {
        self.best_prdf_for_i().map(|(bound, _)| bound)
    }

    fn best_prdf_for_i(&self) -> Option<(usize, &RomanAssignment)> {
        let gp = self.gp;
        gp.optimal_prdfs
            .iter()
            .map(|f| (gp.gamma_rp + (f.ones().len() + f.twos().len()) * (self.hp.order - 1), f))
            .min_by_key(|&(bound, f)| (bound, f.twos()))
    }

    fn function_ii_witness(&self) -> Option<&RomanAssignment> {
        let gp = self.gp;
        gp.optimal_prdfs.iter().find(|f| {
            f.twos().len() == gp.gamma && self.g.closed_neighborhood_of(f.twos()) == self.g.vertices()
        })
    }

    fn function_iv_witness(&self) -> Option<&RomanAssignment> {
        let gp = self.gp;
        gp.optimal_prdfs.iter().find(|f| gp.gamma_p_sets.contains(&(f.ones() | f.twos())))
    }

    /// PRDF on G with weight 1 on γᵖ-set vertices without external private
    /// neighbours and 2 on the others.
    fn epn_split(&self, s: VertexSet) -> RomanAssignment {
        let g = self.g;
        let lonely: VertexSet = s
            .iter()
            .filter(|&x| g.epn(x, s).expect("x ∈ s").is_empty())
            .collect();
        RomanAssignment::new(g.order(), lonely, s - lonely).expect("disjoint")
    }

    fn best_gamma_p_set_for_iii(&self) -> Option<(usize, VertexSet)> {
        let gp = self.gp;
        gp.gamma_p_sets
            .iter()
            .map(|&s| (self.epn_split(s).weight() + gp.gamma_p * (self.hp.order - 1), s))
            .min()
    }

    fn function_bound_iii(&self) -> Option<usize> {
        self.best_gamma_p_set_for_iii().map(|(bound, _)| bound)
    }
}

/// One contribution to a prediction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contribution {
    pub statement: String,
    pub effect: Effect,
    pub value: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Effect {
    Exact,
    Lower,
    Upper,
    Excludes,
    Undecided,
}

/// Exact value or closed interval for a product parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub kind: ParameterKind,
    pub lo: usize,
    pub hi: usize,
    pub contributions: Vec<Contribution>,
}

impl Prediction {
    pub fn exact(&self) -> Option<usize> {
        (self.lo == self.hi).then_some(self.lo)
    }

    pub fn contains(&self, value: usize) -> bool {
        self.lo <= value && value <= self.hi
    }

    /// Distinct statement labels, in firing order.
    pub fn provenance(&self) -> Vec<String> {
        let mut seen = BTreeSet::new();
        self.contributions
            .iter()
            .filter(|c| seen.insert(c.statement.clone()))
            .map(|c| c.statement.clone())
            .collect()
    }
}

impl Serialize for Prediction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("param", &self.kind)?;
        match self.exact() {
            Some(v) => map.serialize_entry("exact", &v)?,
            None => {
                map.serialize_entry("lo", &self.lo)?;
                map.serialize_entry("hi", &self.hi)?;
            }
        }
        map.serialize_entry("provenance", &self.provenance())?;
        map.serialize_entry("contributions", &self.contributions)?;
        map.end()
    }
}

/// Predictions for every kind in [`PREDICTED_KINDS`]; a failed kind keeps its error.
pub fn predict_all(ctx: &PairContext<'_>) -> BTreeMap<ParameterKind, Result<Prediction>> {
    let mut done: BTreeMap<ParameterKind, Result<Prediction>> = BTreeMap::new();
    for kind in PREDICTED_KINDS {
        let p = aggregate(ctx, kind, &done);
        done.insert(kind, p);
    }
    done
}

fn aggregate(
    ctx: &PairContext<'_>,
    kind: ParameterKind,
    done: &BTreeMap<ParameterKind, Result<Prediction>>,
) -> Result<Prediction> {
    let known = |k: ParameterKind| done.get(&k).and_then(|r| r.as_ref().ok());
    let resolve = |rhs: Rhs, need_exact: bool, upper: bool| -> Option<usize> {
        match rhs {
            Rhs::Value(v) => Some(v),
            Rhs::Product { kind, factor } => {
                let p = known(kind)?;
                if need_exact {
                    p.exact().map(|v| factor * v)
                } else if upper {
                    Some(factor * p.hi)
                } else {
                    Some(factor * p.lo)
                }
            }
        }
    };

    let mut contributions = Vec::new();
    let mut lower: Vec<(usize, String)> = Vec::new();
    let mut upper: Vec<(usize, String)> = Vec::new();
    let mut exact: Vec<(usize, String)> = Vec::new();
    let mut excluded = BTreeSet::new();
    for st in ctx.statements(kind) {
        let label = st.label();
        let (effect, value) = match st.assertion {
            Assertion::Equals(rhs) => match resolve(rhs, true, false) {
                Some(v) => (Effect::Exact, v),
                None => continue,
            },
            Assertion::AtLeast(rhs) => match resolve(rhs, false, false) {
                Some(v) => (Effect::Lower, v),
                None => continue,
            },
            Assertion::AtMost(rhs) => match resolve(rhs, false, true) {
                Some(v) => (Effect::Upper, v),
                None => continue,
            },
            Assertion::Iff { rhs, condition } => match resolve(rhs, true, false) {
                Some(v) if condition => (Effect::Exact, v),
                Some(v) => (Effect::Excludes, v),
                None => continue,
            },
            Assertion::OnlyIf { rhs, condition } => match resolve(rhs, true, false) {
                Some(v) if !condition => (Effect::Excludes, v),
                _ => continue,
            },
            Assertion::Undecided { rhs } => match resolve(rhs, true, false) {
                Some(v) => (Effect::Undecided, v),
                None => continue,
            },
        };
        match effect {
            Effect::Exact => exact.push((value, label.clone())),
            Effect::Lower => lower.push((value, label.clone())),
            Effect::Upper => upper.push((value, label.clone())),
            Effect::Excludes => {
                excluded.insert(value);
            }
            Effect::Undecided => {}
        }
        contributions.push(Contribution { statement: label, effect, value });
    }
    if contributions.is_empty() {
        return Err(Error::Hypothesis(format!(
            "no statement about {kind}(G∘H) applies to this pair"
        )));
    }

    if let Some((first, first_label)) = exact.first() {
        if let Some((other, other_label)) = exact.iter().find(|(v, _)| v != first) {
            return Err(Error::Inconsistent(format!(
                "{first_label} gives {kind} = {first} but {other_label} gives {other}"
            )));
        }
    }
    let mut lo = 0;
    let mut hi = ctx.gp.order * ctx.hp.order;
    for (v, _) in &lower {
        lo = lo.max(*v);
    }
    for (v, _) in &upper {
        hi = hi.min(*v);
    }
    if let Some((v, label)) = exact.first() {
        if *v < lo || *v > hi {
            return Err(Error::Inconsistent(format!(
                "{label} gives {kind} = {v} outside the bounds [{lo}, {hi}]"
            )));
        }
        lo = *v;
        hi = *v;
    }
    while lo <= hi && excluded.contains(&lo) {
        lo += 1;
    }
    while hi >= lo && excluded.contains(&hi) {
        if hi == 0 {
            break;
        }
        hi -= 1;
    }
    if lo > hi || excluded.contains(&lo) {
        return Err(Error::Inconsistent(format!(
            "the statements about {kind} leave no admissible value"
        )));
    }
    Ok(Prediction { kind, lo, hi, contributions })
}

/// Theorem-based prediction of `kind` on G ∘ H.
pub fn predict(g: &Graph, h: &Graph, kind: ParameterKind, config: &SolverConfig) -> Result<Prediction> {
    if !PREDICTED_KINDS.contains(&kind) {
        return Err(Error::Hypothesis(format!("{kind}(G∘H) has no product formula")));
    }
    let profile = FactorProfile::new(g, config)?;
    let ctx = PairContext::new(g, h, &profile);
    predict_all(&ctx).remove(&kind).expect("every predicted kind is present")
}

/// A product witness built from a theorem's proof, with the bound it attains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub theorem: TheoremId,
    pub target: ParameterKind,
    pub bound: usize,
    pub witness: Witness,
}

fn refuse(id: TheoremId, fact: &str) -> Error {
    Error::Hypothesis(format!("{id} needs {fact}"))
}

/// Builds the function or set that the proof of `id` exhibits on G ∘ H.
pub fn construct_witness(
    id: TheoremId,
    g: &Graph,
    h: &Graph,
    config: &SolverConfig,
) -> Result<Construction> {
    let profile = FactorProfile::new(g, config)?;
    construct_in(&PairContext::new(g, h, &profile), id)
}

/// As [`construct_witness`], reusing an existing factor profile.
pub fn construct_in(ctx: &PairContext<'_>, id: TheoremId) -> Result<Construction> {
    let (product, map) = lex_product(ctx.g, ctx.h)?;
    let built = Builder { ctx, map }.build(id)?;
    let valid = match (&built.witness, built.target) {
        (Witness::Set(s), kind @ (ParameterKind::Gamma | ParameterKind::GammaP)) => {
            solvers::is_feasible(&product, *s, kind)?
        }
        (Witness::Roman(f), ParameterKind::GammaR) => f.is_roman_dominating(&product),
        (Witness::Roman(f), ParameterKind::GammaRp) => f.is_perfect_roman_dominating(&product),
        _ => false,
    };
    let weight = match &built.witness {
        Witness::Set(s) => s.len(),
        Witness::Roman(f) => f.weight(),
    };
    if !valid || weight != built.bound {
        return Err(Error::Inconsistent(format!(
            "construction for {id} is not a valid {} witness of weight {} (weight {weight}, valid {valid})",
            built.target, built.bound
        )));
    }
    Ok(built)
}

/// Theorems with a product construction.
pub const CONSTRUCTIBLE: [TheoremId; 13] = [
    TheoremId::GammaLex,
    TheoremId::GammapLex,
    TheoremId::RomanLex,
    TheoremId::RomanUb,
    TheoremId::ZetaBounds,
    TheoremId::PrUbCorona,
    TheoremId::PrUbFunctionI,
    TheoremId::PrUbFunctionII,
    TheoremId::PrUbFunctionIII,
    TheoremId::PrUbFunctionIV,
    TheoremId::PrUbPacking,
    TheoremId::PrCorEod,
    TheoremId::PrCorEcd,
];

struct Builder<'c, 'a> {
    ctx: &'c PairContext<'a>,
    map: ProductIndexMap,
}

impl Builder<'_, '_> {
    fn all_h(&self) -> VertexSet {
        self.ctx.h.vertices()
    }

    fn roman(&self, ones: VertexSet, twos: VertexSet) -> RomanAssignment {
        RomanAssignment::new(self.map.order(), ones, twos).expect("constructions keep levels disjoint")
    }

    /// Lifts a Roman function on G: V₂ × {v} at 2 and the rest of those layers,
    /// plus every V₁ layer, at 1.
    fn lift(&self, f: &RomanAssignment) -> RomanAssignment {
        let v = VertexSet::singleton(0);
        let twos = self.map.cross(f.twos(), v);
        let ones = self.map.cross(f.twos(), self.all_h() - v) | self.map.cross(f.ones(), self.all_h());
        self.roman(ones, twos)
    }

    /// The open-packing construction: S₀ × {y₂} and S₁ × {y₁} at 2.
    fn from_packing(&self, s: VertexSet) -> RomanAssignment {
        let (g, h, hp) = (self.ctx.g, self.ctx.h, self.ctx.hp);
        let s0 = g.isolated_in(s);
        let s1 = s - s0;
        let y1 = VertexSet::singleton(hp.min_degree_vertex);
        let y2 = VertexSet::singleton(hp.max_degree_vertex);
        let twos = self.map.cross(s0, y2) | self.map.cross(s1, y1);
        let ones = self.map.cross(s0, self.all_h() - h.closed_neighborhood_of(y2))
            | self.map.cross(s1, h.open_neighborhood_of(y1))
            | self.map.cross(g.vertices() - g.closed_neighborhood_of(s), self.all_h());
        self.roman(ones, twos)
    }

    fn build(&self, id: TheoremId) -> Result<Construction> {
        use ParameterKind::*;
        let (h, gp, hp) = (self.ctx.h, self.ctx.gp, self.ctx.hp);
        let done = |target, bound, witness| Ok(Construction { theorem: id, target, bound, witness });
        let no_isolated = || {
            if gp.has_isolated {
                Err(refuse(id, "G without isolated vertices"))
            } else {
                Ok(())
            }
        };
        let nontrivial_h = || {
            if hp.is_trivial() {
                Err(refuse(id, "a nontrivial H"))
            } else {
                Ok(())
            }
        };
        let v = VertexSet::singleton(hp.max_degree_vertex);
        match id {
            TheoremId::GammaLex => {
                no_isolated()?;
                nontrivial_h()?;
                let base = if hp.has_universal_vertex() { gp.gamma_set } else { gp.gamma_t_set.expect("no isolated") };
                done(Gamma, base.len(), Witness::Set(self.map.cross(base, v)))
            }
            TheoremId::GammapLex => {
                if !gp.connected || gp.is_trivial() {
                    return Err(refuse(id, "a connected nontrivial G"));
                }
                nontrivial_h()?;
                let s = if let (true, Some(s)) = (hp.min_degree == 0, gp.eod) {
                    self.map.cross(s, VertexSet::singleton(hp.min_degree_vertex))
                } else if let (true, Some(s)) = (hp.has_universal_vertex(), gp.ecd) {
                    self.map.cross(s, v)
                } else {
                    VertexSet::full(self.map.order())
                };
                done(GammaP, s.len(), Witness::Set(s))
            }
            TheoremId::RomanLex | TheoremId::RomanUb | TheoremId::ZetaBounds => {
                no_isolated()?;
                let codegree = hp.codegree();
                let f = match id {
                    TheoremId::RomanLex if codegree == 1 => self.roman(VertexSet::EMPTY, self.map.cross(gp.gamma_set, v)),
                    TheoremId::RomanLex if codegree == 2 => {
                        let (_, c) = gp.zeta.expect("no isolated vertex");
                        let missed = h.vertices() - h.closed(hp.max_degree_vertex);
                        self.roman(self.map.cross(c.b, missed), self.map.cross(c.a | c.b, v))
                    }
                    TheoremId::ZetaBounds => {
                        if codegree != 2 {
                            return Err(refuse(id, "Δ(H) = n(H) − 2"));
                        }
                        let missed = h.vertices() - h.closed(hp.max_degree_vertex);
                        self.roman(self.map.cross(gp.gamma_set, missed), self.map.cross(gp.gamma_set, v))
                    }
                    _ => {
                        let s = gp.gamma_t_set.expect("no isolated vertex");
                        self.roman(VertexSet::EMPTY, self.map.cross(s, v))
                    }
                };
                if id == TheoremId::RomanLex {
                    nontrivial_h()?;
                }
                done(GammaR, f.weight(), Witness::Roman(f))
            }
            TheoremId::PrUbCorona => {
                no_isolated()?;
                let s = *gp.gamma_p_sets.first().expect("V(G) is perfect dominating");
                let ones = self.map.cross(s, self.all_h() - v);
                let f = self.roman(ones, self.map.cross(s, v));
                done(GammaRp, gp.gamma_p * (hp.order + 1), Witness::Roman(f))
            }
            TheoremId::PrUbFunctionI => {
                no_isolated()?;
                let (bound, f) = self.ctx.best_prdf_for_i().expect("a PRDF exists");
                done(GammaRp, bound, Witness::Roman(self.lift(f)))
            }
            TheoremId::PrUbFunctionII => {
                no_isolated()?;
                let f = self
                    .ctx
                    .function_ii_witness()
                    .ok_or_else(|| refuse(id, "a γ_Rᵖ(G)-function whose V₂ is a γ(G)-set"))?;
                let bound = gp.gamma_rp * hp.order - gp.gamma * (hp.order - 1);
                done(GammaRp, bound, Witness::Roman(self.lift(f)))
            }
            TheoremId::PrUbFunctionIII => {
                no_isolated()?;
                let (bound, s) = self.ctx.best_gamma_p_set_for_iii().expect("a γᵖ-set exists");
                done(GammaRp, bound, Witness::Roman(self.lift(&self.ctx.epn_split(s))))
            }
            TheoremId::PrUbFunctionIV => {
                no_isolated()?;
                let f = self
                    .ctx
                    .function_iv_witness()
                    .ok_or_else(|| refuse(id, "a γ_Rᵖ(G)-function whose V₁ ∪ V₂ is a γᵖ(G)-set"))?;
                let bound = gp.gamma_rp + gp.gamma_p * (hp.order - 1);
                done(GammaRp, bound, Witness::Roman(self.lift(f)))
            }
            TheoremId::PrUbPacking => {
                no_isolated()?;
                let (bound, s) = self.ctx.packing_bound();
                done(GammaRp, bound, Witness::Roman(self.from_packing(s)))
            }
            TheoremId::PrCorEod => {
                no_isolated()?;
                let s = gp.eod.ok_or_else(|| refuse(id, "an efficient open domination graph G"))?;
                let bound = gp.gamma_t.expect("no isolated vertex") * (2 + hp.min_degree);
                done(GammaRp, bound, Witness::Roman(self.from_packing(s)))
            }
            TheoremId::PrCorEcd => {
                no_isolated()?;
                let s = gp.ecd.ok_or_else(|| refuse(id, "an efficient closed domination graph G"))?;
                done(GammaRp, gp.gamma * (hp.codegree() + 1), Witness::Roman(self.from_packing(s)))
            }
            other => Err(Error::Hypothesis(format!("{other} has no implemented construction"))),
        }
    }
}
