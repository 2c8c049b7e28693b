mod common;

use std::collections::BTreeSet;

use common::*;
use lexdom_core::solvers::{enumerate_optimal_v2, zeta, zeta_prime};
use lexdom_core::structure::{is_efficient_closed_domination, is_efficient_open_domination};
use lexdom_core::{lex_product, solve, Graph, ParameterKind, SolverConfig};

type Row = (
    &'static str,
    usize,         // γ
    usize,         // γᵖ
    Option<usize>, // γ_t
    usize,         // ρ
    usize,         // ρ_o
    usize,         // γ_R
    usize,         // γ_Rᵖ
    Option<usize>, // γ_tR
    Option<usize>, // ζ
    Option<usize>, // ζ′
    bool,          // EOD
    bool,          // ECD
);

/// Oracle values, frozen.
const FROZEN: &[Row] = &[
    ("P1", 1, 1, None, 1, 1, 1, 1, None, None, Some(4), false, true),
    ("P2", 1, 1, Some(2), 1, 2, 2, 2, Some(2), Some(3), Some(4), true, true),
    ("P3", 1, 1, Some(2), 1, 2, 2, 2, Some(3), Some(3), Some(4), true, true),
    ("P4", 2, 2, Some(2), 2, 2, 3, 3, Some(4), Some(4), Some(4), true, true),
    ("P5", 2, 2, Some(3), 2, 3, 4, 4, Some(5), Some(6), Some(8), false, true),
    ("P6", 2, 2, Some(4), 2, 4, 4, 4, Some(6), Some(6), Some(8), true, true),
    ("P7", 3, 3, Some(4), 3, 4, 5, 5, Some(7), Some(7), Some(8), true, true),
    ("P8", 3, 3, Some(4), 3, 4, 6, 6, Some(8), Some(8), Some(8), true, true),
    ("C3", 1, 1, Some(2), 1, 1, 2, 2, Some(3), Some(3), Some(4), false, true),
    ("C4", 2, 2, Some(2), 1, 2, 3, 3, Some(4), Some(4), Some(4), true, false),
    ("C5", 2, 3, Some(3), 1, 2, 4, 4, Some(5), Some(6), None, false, false),
    ("C6", 2, 2, Some(4), 2, 2, 4, 4, Some(6), Some(6), Some(8), false, true),
    ("C7", 3, 3, Some(4), 2, 3, 5, 5, Some(7), Some(7), Some(8), false, false),
    ("C8", 3, 4, Some(4), 2, 4, 6, 6, Some(8), Some(8), Some(8), true, false),
    ("K1", 1, 1, None, 1, 1, 1, 1, None, None, Some(4), false, true),
    ("K2", 1, 1, Some(2), 1, 2, 2, 2, Some(2), Some(3), Some(4), true, true),
    ("K3", 1, 1, Some(2), 1, 1, 2, 2, Some(3), Some(3), Some(4), false, true),
    ("K4", 1, 1, Some(2), 1, 1, 2, 2, Some(3), Some(3), Some(4), false, true),
    ("K5", 1, 1, Some(2), 1, 1, 2, 2, Some(3), Some(3), Some(4), false, true),
    ("N2", 2, 2, None, 2, 2, 2, 2, None, None, Some(8), false, true),
    ("N3", 3, 3, None, 3, 3, 3, 3, None, None, Some(12), false, true),
    ("K13", 1, 1, Some(2), 1, 2, 2, 2, Some(3), Some(3), Some(4), true, true),
    ("K14", 1, 1, Some(2), 1, 2, 2, 2, Some(3), Some(3), Some(4), true, true),
    ("forked", 2, 2, Some(3), 2, 3, 4, 4, Some(5), Some(6), Some(8), false, true),
];

fn named(name: &str) -> Graph {
    let n = |s: &str| s[1..].parse::<usize>().unwrap();
    match name {
        "forked" => forked_path(),
        "K13" => graph(4, &[(0, 1), (0, 2), (0, 3)]),
        "K14" => graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
        _ if name.starts_with('P') => path(n(name)),
        _ if name.starts_with('C') => cycle(n(name)),
        _ if name.starts_with('K') => complete(n(name)),
        _ if name.starts_with('N') => empty(n(name)),
        _ => unreachable!(),
    }
}

/// Every parameter in table order, `None` where undefined.
type Values = (usize, usize, Option<usize>, usize, usize, usize, usize, Option<usize>, Option<usize>, Option<usize>, bool, bool);

fn from_oracle(g: &Graph) -> Values {
    let a = Adj::of(g);
    let iso = g.first_isolated_vertex().is_some();
    (
        a.gamma(),
        a.gamma_p(),
        a.gamma_t(),
        a.rho(),
        a.rho_o(),
        a.gamma_r(),
        a.gamma_rp(),
        a.gamma_tr(),
        (!iso).then(|| a.zeta()),
        a.zeta_prime(),
        a.has_eod(),
        a.has_ecd(),
    )
}

fn from_library(g: &Graph) -> Values {
    use ParameterKind::*;
    let cfg = SolverConfig::default();
    let v = |k| solve(g, k, &cfg).unwrap().value;
    let total = |k| g.first_isolated_vertex().is_none().then(|| v(k));
    (
        v(Gamma),
        v(GammaP),
        total(GammaT),
        v(Rho),
        v(RhoO),
        v(GammaR),
        v(GammaRp),
        total(GammaTR),
        g.first_isolated_vertex().is_none().then(|| zeta(g, &cfg).unwrap().0),
        zeta_prime(g, &cfg).unwrap().map(|(w, _)| w),
        is_efficient_open_domination(g, &cfg).unwrap().is_some(),
        is_efficient_closed_domination(g, &cfg).unwrap().is_some(),
    )
}

fn row_values(r: &Row) -> Values {
    (r.1, r.2, r.3, r.4, r.5, r.6, r.7, r.8, r.9, r.10, r.11, r.12)
}

#[test]
fn oracle_reproduces_frozen_table() {
    for row in FROZEN {
        assert_eq!(from_oracle(&named(row.0)), row_values(row), "{}", row.0);
    }
}

#[test]
fn library_reproduces_frozen_table() {
    for row in FROZEN {
        assert_eq!(from_library(&named(row.0)), row_values(row), "{}", row.0);
    }
}

#[test]
fn frozen_table_agrees_with_closed_forms() {
    for row in FROZEN.iter().filter(|r| r.0.starts_with('P') || r.0.starts_with('C')) {
        let n: usize = row.0[1..].parse().unwrap();
        assert_eq!(row.1, n.div_ceil(3), "γ of {}", row.0);
        assert_eq!(row.6, (2 * n).div_ceil(3), "γ_R of {}", row.0);
        if n >= 3 {
            assert_eq!(row.3, Some(n / 2 + n.div_ceil(4) - n / 4), "γ_t of {}", row.0);
        }
    }
}

#[test]
fn library_matches_oracle_on_all_graphs_up_to_six_vertices() {
    for g in corpus("all_n1-8.g6").iter().filter(|g| g.order() <= 6) {
        assert_eq!(from_library(g), from_oracle(g), "{:?}", lexdom_core::io::write_graph6(g));
    }
}

#[test]
fn optimal_v2_sets_match_oracle() {
    let cfg = SolverConfig::default();
    for g in corpus("all_n1-8.g6").iter().filter(|g| g.order() <= 6) {
        let a = Adj::of(g);
        for (kind, ok) in [
            (ParameterKind::GammaR, Adj::is_rdf as fn(&Adj, &[u8]) -> bool),
            (ParameterKind::GammaRp, Adj::is_prdf),
        ] {
            let expected: BTreeSet<Vec<usize>> = a
                .optimal(|f| ok(&a, f))
                .into_iter()
                .map(|f| (0..a.n).filter(|&v| f[v] == 2).collect())
                .collect();
            let found: BTreeSet<Vec<usize>> =
                enumerate_optimal_v2(g, kind, &cfg).unwrap().into_iter().map(|s| s.to_vec()).collect();
            assert_eq!(found, expected, "{kind} on {:?}", lexdom_core::io::write_graph6(g));
        }
    }
}

#[test]
fn product_matches_adjacency_rule() {
    let small: Vec<_> = corpus("all_n1-8.g6").into_iter().filter(|g| g.order() <= 4).collect();
    for g in &small {
        for h in &small {
            let (p, _) = lex_product(g, h).unwrap();
            let expected = lex_adj(&Adj::of(g), &Adj::of(h));
            assert_eq!(Adj::of(&p).m, expected.m);
        }
    }
}

#[test]
fn product_values_match_oracle() {
    use ParameterKind::*;
    let cfg = SolverConfig::default();
    let gs: Vec<_> = corpus("connected_n2-5.g6").into_iter().filter(|g| g.order() <= 3).collect();
    let hs: Vec<_> = corpus("all_n2-4.g6").into_iter().filter(|h| h.order() <= 3).collect();
    for g in &gs {
        for h in &hs {
            let (p, _) = lex_product(g, h).unwrap();
            let a = lex_adj(&Adj::of(g), &Adj::of(h));
            let v = |k| solve(&p, k, &cfg).unwrap().value;
            assert_eq!(v(Gamma), a.gamma());
            assert_eq!(v(GammaP), a.gamma_p());
            assert_eq!(v(GammaR), a.gamma_r());
            assert_eq!(v(GammaRp), a.gamma_rp());
        }
    }
}
