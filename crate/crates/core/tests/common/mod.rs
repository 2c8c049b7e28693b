//! Brute-force oracles written straight from the definitions.
//!
//! Nothing here calls into the solvers: graphs are read once into a boolean
//! adjacency matrix and every parameter is a plain scan over 2ⁿ subsets or 3ⁿ
//! weight vectors.

#![allow(dead_code)]

use std::path::PathBuf;

use lexdom_core::io::load_corpus;
use lexdom_core::Graph;

pub struct Adj {
    pub n: usize,
    pub m: Vec<Vec<bool>>,
}

impl Adj {
    pub fn of(g: &Graph) -> Self {
        let n = g.order();
        let m = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
        Adj { n, m }
    }

    fn in_set(s: u64, v: usize) -> bool {
        s >> v & 1 == 1
    }

    /// |N(v) ∩ S|
    pub fn hits(&self, v: usize, s: u64) -> usize {
        (0..self.n).filter(|&u| self.m[v][u] && Self::in_set(s, u)).count()
    }

    pub fn dominating(&self, s: u64) -> bool {
        (0..self.n).all(|v| Self::in_set(s, v) || self.hits(v, s) > 0)
    }

    pub fn perfect_dominating(&self, s: u64) -> bool {
        (0..self.n).all(|v| Self::in_set(s, v) || self.hits(v, s) == 1)
    }

    pub fn total_dominating(&self, s: u64) -> bool {
        (0..self.n).all(|v| self.hits(v, s) > 0)
    }

    pub fn packing(&self, s: u64) -> bool {
        (0..self.n).all(|v| self.hits(v, s) + usize::from(Self::in_set(s, v)) <= 1)
    }

    pub fn open_packing(&self, s: u64) -> bool {
        (0..self.n).all(|v| self.hits(v, s) <= 1)
    }

    fn subsets(&self) -> impl Iterator<Item = u64> {
        0..1u64 << self.n
    }

    fn min_size(&self, ok: impl Fn(u64) -> bool) -> Option<usize> {
        self.subsets().filter(|&s| ok(s)).map(|s| s.count_ones() as usize).min()
    }

    fn max_size(&self, ok: impl Fn(u64) -> bool) -> usize {
        self.subsets().filter(|&s| ok(s)).map(|s| s.count_ones() as usize).max().unwrap()
    }

    pub fn gamma(&self) -> usize {
        self.min_size(|s| self.dominating(s)).unwrap()
    }

    pub fn gamma_p(&self) -> usize {
        self.min_size(|s| self.perfect_dominating(s)).unwrap()
    }

    pub fn gamma_t(&self) -> Option<usize> {
        self.min_size(|s| self.total_dominating(s))
    }

    pub fn rho(&self) -> usize {
        self.max_size(|s| self.packing(s))
    }

    pub fn rho_o(&self) -> usize {
        self.max_size(|s| self.open_packing(s))
    }

    /// Some S with |N(v) ∩ S| = 1 for every v.
    pub fn has_eod(&self) -> bool {
        self.subsets().any(|s| (0..self.n).all(|v| self.hits(v, s) == 1))
    }

    /// Some S with |N[v] ∩ S| = 1 for every v.
    pub fn has_ecd(&self) -> bool {
        self.subsets()
            .any(|s| (0..self.n).all(|v| self.hits(v, s) + usize::from(Self::in_set(s, v)) == 1))
    }

    /// ζ′ = min 4|S₀| + 2|S₁| over open packings S with N[S] = V.
    pub fn zeta_prime(&self) -> Option<usize> {
        self.subsets()
            .filter(|&s| self.open_packing(s) && self.dominating(s))
            .map(|s| {
                (0..self.n)
                    .filter(|&v| Self::in_set(s, v))
                    .map(|v| if self.hits(v, s) == 0 { 4 } else { 2 })
                    .sum()
            })
            .min()
    }

    /// Every weight vector in {0,1,2}ⁿ, in lexicographic order.
    pub fn weightings(&self) -> impl Iterator<Item = Vec<u8>> {
        let n = self.n;
        (0..3u64.pow(n as u32)).map(move |mut code| {
            (0..n)
                .map(|_| {
                    let d = (code % 3) as u8;
                    code /= 3;
                    d
                })
                .collect()
        })
    }

    fn twos_around(&self, f: &[u8], v: usize) -> usize {
        (0..self.n).filter(|&u| self.m[v][u] && f[u] == 2).count()
    }

    pub fn is_rdf(&self, f: &[u8]) -> bool {
        (0..self.n).all(|v| f[v] != 0 || self.twos_around(f, v) >= 1)
    }

    pub fn is_prdf(&self, f: &[u8]) -> bool {
        (0..self.n).all(|v| f[v] != 0 || self.twos_around(f, v) == 1)
    }

    /// RDF whose positive vertices induce a graph without isolated vertices.
    pub fn is_trdf(&self, f: &[u8]) -> bool {
        self.is_rdf(f) && (0..self.n).all(|v| f[v] == 0 || (0..self.n).any(|u| self.m[v][u] && f[u] > 0))
    }

    pub fn min_weight(&self, ok: impl Fn(&[u8]) -> bool) -> Option<usize> {
        self.weightings()
            .filter(|f| ok(f))
            .map(|f| f.iter().map(|&w| w as usize).sum())
            .min()
    }

    /// Every weight vector of minimum weight satisfying `ok`.
    pub fn optimal(&self, ok: impl Fn(&[u8]) -> bool) -> Vec<Vec<u8>> {
        let all: Vec<_> = self.weightings().filter(|f| ok(f)).collect();
        let best = all.iter().map(|f| f.iter().map(|&w| w as usize).sum::<usize>()).min().unwrap();
        all.into_iter()
            .filter(|f| f.iter().map(|&w| w as usize).sum::<usize>() == best)
            .collect()
    }

    pub fn gamma_r(&self) -> usize {
        self.min_weight(|f| self.is_rdf(f)).unwrap()
    }

    pub fn gamma_rp(&self) -> usize {
        self.min_weight(|f| self.is_prdf(f)).unwrap()
    }

    pub fn gamma_tr(&self) -> Option<usize> {
        self.min_weight(|f| self.is_trdf(f))
    }

    /// ζ: weights 2 on A, 3 on B; every vertex outside B needs a neighbour in A ∪ B.
    pub fn zeta(&self) -> usize {
        self.weightings()
            .filter(|f| {
                (0..self.n).all(|v| f[v] == 2 || (0..self.n).any(|u| self.m[v][u] && f[u] > 0))
            })
            .map(|f| f.iter().map(|&w| [0, 2, 3][w as usize]).sum())
            .min()
            .unwrap()
    }
}

/// G ∘ H by the adjacency rule, with vertex (u, v) at u·n(H) + v.
pub fn lex_adj(g: &Adj, h: &Adj) -> Adj {
    let n = g.n * h.n;
    let m = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let (u, v) = (a / h.n, a % h.n);
                    let (x, y) = (b / h.n, b % h.n);
                    g.m[u][x] || (u == x && h.m[v][y])
                })
                .collect()
        })
        .collect();
    Adj { n, m }
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).unwrap()
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    graph(n, &edges)
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    graph(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    Graph::complete(n).unwrap()
}

pub fn empty(n: usize) -> Graph {
    Graph::empty(n).unwrap()
}

/// Path a4 a3 a2 a1 with two extra leaves on a1; vertices 0..5 are a1, a2, a3, a4, a11, a12.
pub fn forked_path() -> Graph {
    graph(6, &[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5)])
}

/// Triangle a1 a2 a3 (0, 1, 2); a12, a13, a23 (3, 4, 5) each adjacent to the two
/// named triangle vertices; three leaves on each of a1, a2, a3 (6..15).
pub fn crowned_triangle() -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 0), (4, 2), (5, 1), (5, 2)];
    for a in 0..3 {
        for k in 0..3 {
            edges.push((a, 6 + 3 * a + k));
        }
    }
    graph(15, &edges)
}

pub fn corpus(name: &str) -> Vec<Graph> {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", name].iter().collect();
    load_corpus(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// (γ_R, γ_Rᵖ, γ_tR) in one pass over {0,1,2}ⁿ, with rows as bitmasks.
pub fn roman_triple(a: &Adj) -> (usize, usize, Option<usize>) {
    let n = a.n;
    let rows: Vec<u32> = (0..n)
        .map(|v| (0..n).filter(|&u| a.m[v][u]).fold(0, |r, u| r | 1 << u))
        .collect();
    let mut digits = vec![0u8; n];
    let (mut best_r, mut best_p, mut best_t) = (usize::MAX, usize::MAX, usize::MAX);
    loop {
        let (mut twos, mut pos, mut weight) = (0u32, 0u32, 0usize);
        for (v, &d) in digits.iter().enumerate() {
            weight += d as usize;
            if d > 0 {
                pos |= 1 << v;
            }
            if d == 2 {
                twos |= 1 << v;
            }
        }
        let mut rdf = true;
        let mut perfect = true;
        let mut total = true;
        for v in 0..n {
            let hits = (rows[v] & twos).count_ones();
            if digits[v] == 0 {
                rdf &= hits >= 1;
                perfect &= hits == 1;
            } else {
                total &= rows[v] & pos != 0;
            }
        }
        if rdf {
            best_r = best_r.min(weight);
            if perfect {
                best_p = best_p.min(weight);
            }
            if total {
                best_t = best_t.min(weight);
            }
        }
        // Next vector in base 3.
        let mut i = 0;
        while i < n && digits[i] == 2 {
            digits[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        digits[i] += 1;
    }
    (best_r, best_p, (best_t != usize::MAX).then_some(best_t))
}
