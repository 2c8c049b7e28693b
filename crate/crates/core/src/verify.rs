//! Brute-force verification of the product statements over factor corpora.
//!
//! Every fired statement from [`crate::formula`] is resolved against values
//! measured on G ∘ H by the exact solvers. Characterizations split into an
//! `if` and an `only_if` implication with separate records.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formula::{
    construct_in, predict_all, Assertion, FactorProfile, PairContext, Rhs, Statement, TheoremId,
    CONSTRUCTIBLE, PREDICTED_KINDS,
};
use crate::graph::Graph;
use crate::io::write_graph6;
use crate::product::lex_product;
use crate::solvers::{self, completion, enumerate_optimal_v2, ParameterKind, SolveResult, SolverConfig, Witness};
use crate::structure::{is_efficient_closed_domination, is_efficient_open_domination};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
    Skipped,
    /// The statements leave this case open.
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    pub claim: String,
    pub applicable: bool,
    pub predicted: Option<String>,
    pub measured: Option<usize>,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Optimal witness of the measured parameter; kept on failures only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl ClaimRecord {
    fn new(claim: impl Into<String>, outcome: Outcome) -> Self {
        ClaimRecord {
            claim: claim.into(),
            applicable: matches!(outcome, Outcome::Pass | Outcome::Fail | Outcome::Indeterminate),
            predicted: None,
            measured: None,
            outcome,
            detail: None,
            witness: None,
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Which statements a run checks. Prediction soundness claims run only under `All`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum ClaimFilter {
    #[default]
    All,
    Only(BTreeSet<TheoremId>),
}

impl ClaimFilter {
    pub fn includes(&self, id: TheoremId) -> bool {
        match self {
            ClaimFilter::All => true,
            ClaimFilter::Only(ids) => ids.contains(&id),
        }
    }

    fn theorems(&self) -> Vec<TheoremId> {
        TheoremId::ALL.iter().copied().filter(|&id| self.includes(id)).collect()
    }
}

/// Size limits for one verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Pairs whose product is larger are skipped.
    pub max_product_order: usize,
    /// The structural lemmas enumerate every optimal function and run only up to this order.
    pub lemma_max_order: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_product_order: 20, lemma_max_order: 12 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub g: String,
    pub h: String,
    pub product_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    pub records: Vec<ClaimRecord>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PairReport {
    pub fn failures(&self) -> impl Iterator<Item = &ClaimRecord> {
        self.records.iter().filter(|r| r.outcome == Outcome::Fail)
    }
}

/// Measured product values, computed on first use.
struct Measurements<'a> {
    product: &'a Graph,
    config: &'a SolverConfig,
    cache: BTreeMap<ParameterKind, std::result::Result<SolveResult, String>>,
}

impl Measurements<'_> {
    fn get(&mut self, kind: ParameterKind) -> std::result::Result<&SolveResult, String> {
        let (product, config) = (self.product, self.config);
        self.cache
            .entry(kind)
            .or_insert_with(|| solvers::solve(product, kind, config).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn resolve(&mut self, rhs: Rhs) -> std::result::Result<usize, String> {
        match rhs {
            Rhs::Value(v) => Ok(v),
            Rhs::Product { kind, factor } => self.get(kind).map(|r| factor * r.value),
        }
    }
}

fn graph6(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|_| format!("<order {}>", g.order()))
}

fn skip_all(filter: &ClaimFilter, reason: &str) -> Vec<ClaimRecord> {
    filter
        .theorems()
        .into_iter()
        .map(|id| ClaimRecord::new(id.name(), Outcome::Skipped).with_detail(reason))
        .collect()
}

/// Checks every selected claim on one pair.
pub fn verify_pair(
    g: &Graph,
    h: &Graph,
    filter: &ClaimFilter,
    config: &SolverConfig,
    budget: &Budget,
) -> PairReport {
    let start = Instant::now();
    let product_order = g.order() * h.order();
    let mut report = PairReport {
        g: graph6(g),
        h: graph6(h),
        product_order,
        skipped: None,
        records: Vec::new(),
        elapsed: Duration::ZERO,
    };
    let skip_reason = if product_order > budget.max_product_order {
        Some(format!("product order {product_order} exceeds the budget {}", budget.max_product_order))
    } else {
        None
    };
    let outcome = skip_reason.map_or_else(|| check_pair(g, h, filter, config, budget), Err);
    match outcome {
        Ok(records) => report.records = records,
        Err(reason) => {
            report.records = skip_all(filter, &reason);
            report.skipped = Some(reason);
        }
    }
    report.elapsed = start.elapsed();
    report
}

fn check_pair(
    g: &Graph,
    h: &Graph,
    filter: &ClaimFilter,
    config: &SolverConfig,
    budget: &Budget,
) -> std::result::Result<Vec<ClaimRecord>, String> {
    let profile = FactorProfile::new(g, config).map_err(|e| e.to_string())?;
    let ctx = PairContext::new(g, h, &profile);
    let (product, _) = lex_product(g, h).map_err(|e| e.to_string())?;
    let mut measured = Measurements { product: &product, config, cache: BTreeMap::new() };
    let mut records = Vec::new();
    let mut fired = BTreeSet::new();

    for kind in PREDICTED_KINDS {
        for st in ctx.statements(kind) {
            if filter.includes(st.theorem) {
                fired.insert(st.theorem);
                check_statement(&st, &mut measured, &mut records);
            }
        }
    }

    if *filter == ClaimFilter::All {
        for (kind, prediction) in predict_all(&ctx) {
            let claim = format!("PREDICT_{kind}");
            let record = match (prediction, measured.get(kind)) {
                (_, Err(e)) => ClaimRecord::new(claim, Outcome::Skipped).with_detail(e),
                (Err(Error::Hypothesis(e)), _) => ClaimRecord::new(claim, Outcome::NotApplicable).with_detail(e),
                (Err(e), Ok(m)) => {
                    let mut r = ClaimRecord::new(claim, Outcome::Fail).with_detail(e.to_string());
                    r.measured = Some(m.value);
                    r.witness = Some(m.witness);
                    r
                }
                (Ok(p), Ok(m)) => {
                    let pass = p.contains(m.value);
                    let mut r = ClaimRecord::new(claim, if pass { Outcome::Pass } else { Outcome::Fail });
                    r.predicted = Some(match p.exact() {
                        Some(v) => format!("= {v}"),
                        None => format!("in [{}, {}]", p.lo, p.hi),
                    });
                    r.measured = Some(m.value);
                    r.detail = Some(p.provenance().join(", "));
                    if !pass {
                        r.witness = Some(m.witness);
                    }
                    r
                }
            };
            records.push(record);
        }
    }

    for id in CONSTRUCTIBLE {
        if !filter.includes(id) {
            continue;
        }
        let claim = format!("{id}:construction");
        records.push(match construct_in(&ctx, id) {
            Ok(c) => {
                let mut r = ClaimRecord::new(claim, Outcome::Pass);
                r.predicted = Some(format!("valid {} witness of weight {}", c.target, c.bound));
                r
            }
            Err(Error::Hypothesis(e)) => ClaimRecord::new(claim, Outcome::NotApplicable).with_detail(e),
            Err(e) => ClaimRecord::new(claim, Outcome::Fail).with_detail(e.to_string()),
        });
        fired.insert(id);
    }

    let lemmas = [TheoremId::LemmaLayers, TheoremId::LemmaAb];
    if lemmas.iter().any(|&id| filter.includes(id)) {
        if product.order() <= budget.lemma_max_order {
            match check_structural_lemmas(g, h, config) {
                Ok(found) => records.extend(found.into_iter().filter(|r| {
                    filter.includes(r.claim.split(':').next().unwrap_or("").parse().expect("lemma id"))
                })),
                Err(e) => records.push(ClaimRecord::new("LEMMA_LAYERS", Outcome::Skipped).with_detail(e.to_string())),
            }
        } else {
            for id in lemmas.into_iter().filter(|&id| filter.includes(id)) {
                records.push(
                    ClaimRecord::new(id.name(), Outcome::Skipped)
                        .with_detail(format!("product order exceeds the lemma budget {}", budget.lemma_max_order)),
                );
            }
        }
        fired.extend(lemmas);
    }

    for id in filter.theorems() {
        if !fired.contains(&id) {
            records.push(ClaimRecord::new(id.name(), Outcome::NotApplicable));
        }
    }
    Ok(records)
}

fn check_statement(st: &Statement, measured: &mut Measurements<'_>, out: &mut Vec<ClaimRecord>) {
    let label = st.label();
    let rhs = st.assertion.rhs();
    let values = measured
        .get(st.target)
        .map(|r| (r.value, r.witness))
        .and_then(|(m, w)| measured.resolve(rhs).map(|r| (m, w, r)));
    let (m, witness, r) = match values {
        Ok(v) => v,
        Err(e) => {
            out.push(ClaimRecord::new(label, Outcome::Skipped).with_detail(e));
            return;
        }
    };
    let record = |claim: String, predicted: String, outcome: Outcome| {
        let mut rec = ClaimRecord::new(claim, outcome);
        rec.predicted = Some(predicted);
        rec.measured = Some(m);
        if outcome == Outcome::Fail {
            rec.witness = Some(witness);
            rec.detail = Some(format!("{} = {m} on G∘H; {rhs} = {r}", st.target));
        }
        rec
    };
    let verdict = |ok: bool| if ok { Outcome::Pass } else { Outcome::Fail };
    match st.assertion {
        Assertion::Equals(_) => out.push(record(label, format!("= {r}"), verdict(m == r))),
        Assertion::AtLeast(_) => out.push(record(label, format!(">= {r}"), verdict(m >= r))),
        Assertion::AtMost(_) => out.push(record(label, format!("<= {r}"), verdict(m <= r))),
        Assertion::Iff { condition, .. } => {
            let predicted = format!("= {r} iff condition ({condition})");
            let forward = if condition { verdict(m == r) } else { Outcome::NotApplicable };
            out.push(record(format!("{label}:if"), predicted.clone(), forward));
            let backward = if m == r { verdict(condition) } else { Outcome::NotApplicable };
            out.push(record(format!("{label}:only_if"), predicted, backward));
        }
        Assertion::OnlyIf { condition, .. } => {
            let backward = if m == r { verdict(condition) } else { Outcome::NotApplicable };
            out.push(record(format!("{label}:only_if"), format!("= {r} only if condition ({condition})"), backward));
        }
        Assertion::Undecided { .. } => {
            let mut rec = record(label, format!("= {r} undecided"), Outcome::Indeterminate);
            rec.detail = Some(format!("measured {m}, {rhs} = {r}"));
            out.push(rec);
        }
    }
}

/// The layer dichotomy for optimal perfect Roman functions, and the
/// dominating-A, empty-B property of optimal Roman functions with |V₂| maximum.
pub fn check_structural_lemmas(g: &Graph, h: &Graph, config: &SolverConfig) -> Result<Vec<ClaimRecord>> {
    let (product, map) = lex_product(g, h)?;
    let mut records = Vec::new();

    let mut layers = ClaimRecord::new("LEMMA_LAYERS", Outcome::Pass);
    let optimal = enumerate_optimal_v2(&product, ParameterKind::GammaRp, config)?;
    layers.predicted = Some(format!("{} optimal PRDFs, every 2-free layer constant", optimal.len()));
    for &twos in &optimal {
        let f = completion(&product, twos, true);
        let broken = g.vertices().iter().find(|&u| {
            let layer = map.layer(u);
            layer.is_disjoint(f.twos()) && !(layer.is_subset(f.ones()) || layer.is_disjoint(f.ones()))
        });
        if let Some(u) = broken {
            layers.outcome = Outcome::Fail;
            layers.detail = Some(format!("layer {u} mixes weights 0 and 1"));
            layers.witness = Some(Witness::Roman(f));
            break;
        }
    }
    records.push(layers);

    let mut ab = ClaimRecord::new("LEMMA_AB", Outcome::NotApplicable);
    if g.first_isolated_vertex().is_none() && !h.is_trivial() {
        let optimal = enumerate_optimal_v2(&product, ParameterKind::GammaR, config)?;
        let most = optimal.iter().map(|s| s.len()).max().expect("an optimal RDF exists");
        let widest: Vec<_> = optimal.into_iter().filter(|s| s.len() == most).collect();
        ab.outcome = Outcome::Pass;
        ab.applicable = true;
        ab.predicted = Some(format!("{} optimal RDFs with |V2| = {most}", widest.len()));
        for twos in widest {
            let f = completion(&product, twos, false);
            let a = map.project(f.twos());
            let b = map.project(f.ones()) - a;
            if !b.is_empty() || g.closed_neighborhood_of(a) != g.vertices() {
                ab.outcome = Outcome::Fail;
                ab.detail = Some(format!("A_f = {:?}, B_f = {:?}", a.to_vec(), b.to_vec()));
                ab.witness = Some(Witness::Roman(f));
                break;
            }
        }
    }
    records.push(ab);
    Ok(records)
}

/// Parameter chains, tree and efficient-domination identities on a single graph.
pub fn verify_graph(g: &Graph, config: &SolverConfig) -> Result<Vec<ClaimRecord>> {
    use ParameterKind::*;
    let v = |kind| solvers::value(g, kind, config);
    let (rho, gamma, gamma_p, rho_o) = (v(Rho)?, v(Gamma)?, v(GammaP)?, v(RhoO)?);
    let (gamma_r, gamma_rp) = (v(GammaR)?, v(GammaRp)?);
    let mut checks: Vec<(&str, Option<bool>)> = vec![
        ("CHAIN:rho<=gamma", Some(rho <= gamma)),
        ("CHAIN:gamma<=gamma_p", Some(gamma <= gamma_p)),
        ("CHAIN:gamma_R<=gamma_Rp", Some(gamma_r <= gamma_rp)),
        ("CHAIN:gamma_Rp<=2gamma_p", Some(gamma_rp <= 2 * gamma_p)),
        ("CHAIN:gamma_R<=2gamma", Some(gamma_r <= 2 * gamma)),
        ("CHAIN:rho<=rho_o", Some(rho <= rho_o)),
    ];
    let totals = if g.first_isolated_vertex().is_none() {
        Some((v(GammaT)?, v(GammaTR)?))
    } else {
        None
    };
    checks.extend([
        ("CHAIN:gamma<=gamma_t", totals.map(|(t, _)| gamma <= t)),
        ("CHAIN:gamma_t<=2gamma", totals.map(|(t, _)| t <= 2 * gamma)),
        ("CHAIN:rho_o<=gamma_t", totals.map(|(t, _)| rho_o <= t)),
        ("CHAIN:gamma_R<=gamma_tR", totals.map(|(_, tr)| gamma_r <= tr)),
        ("TREE:gamma=rho", g.is_tree().then_some(gamma == rho)),
    ]);
    let eod = is_efficient_open_domination(g, config)?;
    checks.push((
        "EOD:size",
        eod.map(|s| Some(s.len()) == totals.map(|(t, _)| t) && s.len() == rho_o && gamma_p <= s.len()),
    ));
    let ecd = is_efficient_closed_domination(g, config)?;
    checks.push(("ECD:size", ecd.map(|s| s.len() == gamma && s.len() == rho)));
    Ok(checks
        .into_iter()
        .map(|(claim, ok)| {
            let outcome = match ok {
                None => Outcome::NotApplicable,
                Some(true) => Outcome::Pass,
                Some(false) => Outcome::Fail,
            };
            ClaimRecord::new(claim, outcome)
        })
        .collect())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClaimTotals {
    pub applicable: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub not_applicable: usize,
    pub indeterminate: usize,
}

impl ClaimTotals {
    fn add(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Pass => self.passed += 1,
            Outcome::Fail => self.failed += 1,
            Outcome::Skipped => self.skipped += 1,
            Outcome::NotApplicable => self.not_applicable += 1,
            Outcome::Indeterminate => self.indeterminate += 1,
        }
        if matches!(outcome, Outcome::Pass | Outcome::Fail | Outcome::Indeterminate) {
            self.applicable += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub g: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    pub record: ClaimRecord,
}

/// Aggregate over a corpus; independent of the order and parallelism of the run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub items: usize,
    pub skipped_items: usize,
    pub totals: BTreeMap<String, ClaimTotals>,
    pub failures: Vec<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CorpusReport {
    pub fn failed(&self) -> usize {
        self.failures.len()
    }

    fn absorb(&mut self, g: String, h: Option<String>, skipped: bool, records: Vec<ClaimRecord>) {
        self.items += 1;
        self.skipped_items += usize::from(skipped);
        for record in records {
            self.totals.entry(record.claim.clone()).or_default().add(record.outcome);
            if record.outcome == Outcome::Fail {
                self.failures.push(Counterexample { g: g.clone(), h: h.clone(), record });
            }
        }
    }

    fn finish(mut self, start: Instant) -> Self {
        self.failures
            .sort_by(|a, b| (&a.g, &a.h, &a.record.claim).cmp(&(&b.g, &b.h, &b.record.claim)));
        self.elapsed = start.elapsed();
        self
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Io(format!("thread pool: {e}")))
}

/// Every pair of `gs` × `hs`, checked on `workers` threads.
pub fn verify_corpus(
    gs: &[Graph],
    hs: &[Graph],
    filter: &ClaimFilter,
    config: &SolverConfig,
    budget: &Budget,
    workers: usize,
) -> Result<CorpusReport> {
    let start = Instant::now();
    let pairs: Vec<(&Graph, &Graph)> = gs.iter().flat_map(|g| hs.iter().map(move |h| (g, h))).collect();
    let reports: Vec<PairReport> =
        pool(workers)?.install(|| pairs.par_iter().map(|(g, h)| verify_pair(g, h, filter, config, budget)).collect());
    let mut out = CorpusReport::default();
    for r in reports {
        let skipped = r.skipped.is_some();
        out.absorb(r.g, Some(r.h), skipped, r.records);
    }
    Ok(out.finish(start))
}

/// [`verify_graph`] over a list of graphs; graphs beyond the solver caps are skipped.
pub fn verify_graph_corpus(gs: &[Graph], config: &SolverConfig, workers: usize) -> Result<CorpusReport> {
    let start = Instant::now();
    let results: Vec<_> = pool(workers)?.install(|| gs.par_iter().map(|g| verify_graph(g, config)).collect());
    let mut out = CorpusReport::default();
    for (g, result) in gs.iter().zip(results) {
        match result {
            Ok(records) => out.absorb(graph6(g), None, false, records),
            Err(e) => out.absorb(
                graph6(g),
                None,
                true,
                vec![ClaimRecord::new("CHAIN", Outcome::Skipped).with_detail(e.to_string())],
            ),
        }
    }
    Ok(out.finish(start))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn find<'a>(r: &'a PairReport, claim: &str) -> &'a ClaimRecord {
        r.records.iter().find(|c| c.claim == claim).unwrap_or_else(|| panic!("no {claim}"))
    }

    #[test]
    fn path_with_edge() {
        let k2 = Graph::complete(2).unwrap();
        let r = verify_pair(&path(4), &k2, &ClaimFilter::All, &SolverConfig::default(), &Budget::default());
        assert_eq!(r.failures().count(), 0);
        let gamma = find(&r, "GAMMA_LEX:gamma(H)=1");
        assert_eq!((gamma.outcome, gamma.measured), (Outcome::Pass, Some(2)));
        assert_eq!(find(&r, "GAMMAP_LEX:P2").measured, Some(2));
        let cor = find(&r, "PR_COR_P2P3:i");
        assert_eq!((cor.outcome, cor.measured), (Outcome::Pass, Some(4)));
    }

    #[test]
    fn budget_skips_large_pairs() {
        let budget = Budget { max_product_order: 6, ..Budget::default() };
        let k2 = Graph::complete(2).unwrap();
        let r = verify_pair(&path(4), &k2, &ClaimFilter::All, &SolverConfig::default(), &budget);
        assert!(r.skipped.is_some());
        assert!(r.records.iter().all(|c| c.outcome == Outcome::Skipped));
    }

    #[test]
    fn filter_restricts_claims() {
        let filter = ClaimFilter::Only([TheoremId::RomanGraphCor].into());
        let k2 = Graph::complete(2).unwrap();
        let r = verify_pair(&path(3), &k2, &filter, &SolverConfig::default(), &Budget::default());
        assert!(r.records.iter().all(|c| c.claim.starts_with("ROMAN_GRAPH_COR")));
        assert_eq!(find(&r, "ROMAN_GRAPH_COR:i").outcome, Outcome::Pass);
    }

    #[test]
    fn structural_lemma_examples() {
        let cfg = SolverConfig::default();
        let k2 = Graph::complete(2).unwrap();
        let n2 = Graph::empty(2).unwrap();
        for (g, h) in [(&k2, &n2), (&path(3), &k2), (&k2, &k2)] {
            let records = check_structural_lemmas(g, h, &cfg).unwrap();
            assert!(records.iter().all(|r| r.outcome == Outcome::Pass), "{records:?}");
        }
    }

    #[test]
    fn empty_corpus_gives_empty_report() {
        let r = verify_corpus(&[], &[path(2)], &ClaimFilter::All, &SolverConfig::default(), &Budget::default(), 2)
            .unwrap();
        assert_eq!((r.items, r.failed()), (0, 0));
        assert!(r.totals.is_empty());
    }

    #[test]
    fn graph_chains_hold_on_small_paths() {
        for n in 1..=6 {
            let records = verify_graph(&path(n), &SolverConfig::default()).unwrap();
            assert!(records.iter().all(|r| r.outcome != Outcome::Fail), "{records:?}");
        }
    }
}
