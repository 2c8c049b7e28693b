//! Simple undirected graphs on dense vertex indices, stored as bit rows.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[cfg(not(feature = "wide"))]
pub type Word = u64;
#[cfg(feature = "wide")]
pub type Word = u128;

/// Largest graph order representable by a single row word.
pub const MAX_ORDER: usize = Word::BITS as usize;

/// A set of vertices encoded as a bitmask; bit `v` is set iff `v` is a member.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(Word);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: Word) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            VertexSet(Word::MAX)
        } else {
            VertexSet((1 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        vertices
            .into_iter()
            .fold(Self::EMPTY, |s, v| s.with(v))
    }

    pub fn bits(self) -> Word {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_vertices(iter)
    }
}

pub struct Vertices(Word);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Immutable simple undirected graph. `adj[v]` has bit `u` set iff `u ~ v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds the graph on `n` vertices with the symmetric closure of `edges`.
    /// Duplicate pairs collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge { u, v });
            }
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let all = VertexSet::full(n);
        for (v, &row) in rows.iter().enumerate() {
            if let Some(u) = (row - all).first() {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if row.contains(v) {
                return Err(Error::LoopEdge { u: v, v });
            }
            for u in row.iter() {
                if !rows[u].contains(v) {
                    return Err(Error::Inconsistent(format!(
                        "adjacency rows are not symmetric at ({v}, {u})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let all = VertexSet::full(n);
        Ok(Graph {
            n,
            adj: (0..n).map(|v| all.without(v)).collect(),
        })
    }

    /// The edgeless graph N_n.
    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, &[])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn is_trivial(&self) -> bool {
        self.n == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed(v))
    }

    #[inline]
    pub(crate) fn closed(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// N(S), the union of open neighbourhoods.
    pub fn open_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// N[S] = N(S) ∪ S.
    pub fn closed_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        self.open_neighborhood_of(s) | s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// (δ(G), Δ(G)).
    pub fn degree_extremes(&self) -> (usize, usize) {
        let degrees = (0..self.n).map(|v| self.degree(v));
        let min = degrees.clone().min().unwrap_or(0);
        let max = degrees.max().unwrap_or(0);
        (min, max)
    }

    pub fn min_degree(&self) -> usize {
        self.degree_extremes().0
    }

    pub fn max_degree(&self) -> usize {
        self.degree_extremes().1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn first_isolated_vertex(&self) -> Option<usize> {
        self.isolated_vertices().first()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_neighborhood_of(frontier) - seen;
            seen = seen | next;
            frontier = next;
        }
        seen == self.vertices()
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n && self.is_connected()
    }

    /// Vertices of `s` with no neighbour inside `s`, i.e. isolated in G[S].
    pub fn isolated_in(&self, s: VertexSet) -> VertexSet {
        s.iter().filter(|&v| self.adj[v].is_disjoint(s)).collect()
    }

    /// Maximum degree of the induced subgraph G[S].
    pub fn induced_max_degree(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s).len()).max().unwrap_or(0)
    }

    /// Induced subgraph on `s`, vertices relabelled in increasing order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        let index: Vec<usize> = s.to_vec();
        let rows = index
            .iter()
            .map(|&v| {
                index
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.adj[v].contains(u))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// External private neighbours of `v` with respect to `s`:
    /// `{u ∉ S : N(u) ∩ S = {v}}`.
    pub fn epn(&self, v: usize, s: VertexSet) -> Result<VertexSet> {
        self.check_vertex(v)?;
        if !s.contains(v) {
            return Err(Error::NotInSet { vertex: v });
        }
        let target = VertexSet::singleton(v);
        Ok((self.vertices() - s)
            .iter()
            .filter(|&u| self.adj[u] & s == target)
            .collect())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyGraph)
    } else if n > MAX_ORDER {
        Err(Error::OrderTooLarge { n, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

/// A function `V(G) -> {0, 1, 2}` stored as its level sets V₁ and V₂.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RomanAssignment {
    n: usize,
    ones: VertexSet,
    twos: VertexSet,
}

impl RomanAssignment {
    pub fn new(n: usize, ones: VertexSet, twos: VertexSet) -> Result<Self> {
        check_order(n)?;
        let all = VertexSet::full(n);
        if let Some(v) = ((ones | twos) - all).first() {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if !ones.is_disjoint(twos) {
            return Err(Error::OverlappingSets {
                overlap: (ones & twos).to_vec(),
            });
        }
        Ok(RomanAssignment { n, ones, twos })
    }

    pub fn from_weights(weights: &[u8]) -> Result<Self> {
        let mut ones = VertexSet::EMPTY;
        let mut twos = VertexSet::EMPTY;
        for (v, &w) in weights.iter().enumerate() {
            match w {
                0 => {}
                1 => ones = ones.with(v),
                2 => twos = twos.with(v),
                _ => {
                    return Err(Error::Inconsistent(format!(
                        "weight {w} at vertex {v} is not in {{0, 1, 2}}"
                    )))
                }
            }
        }
        RomanAssignment::new(weights.len(), ones, twos)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn zeros(&self) -> VertexSet {
        VertexSet::full(self.n) - self.ones - self.twos
    }

    pub fn ones(&self) -> VertexSet {
        self.ones
    }

    pub fn twos(&self) -> VertexSet {
        self.twos
    }

    pub fn get(&self, v: usize) -> u8 {
        if self.twos.contains(v) {
            2
        } else if self.ones.contains(v) {
            1
        } else {
            0
        }
    }

    pub fn weights(&self) -> Vec<u8> {
        (0..self.n).map(|v| self.get(v)).collect()
    }

    /// ω(f) = |V₁| + 2|V₂|.
    pub fn weight(&self) -> usize {
        self.ones.len() + 2 * self.twos.len()
    }

    /// f(X), the weight restricted to `x`.
    pub fn weight_of(&self, x: VertexSet) -> usize {
        (self.ones & x).len() + 2 * (self.twos & x).len()
    }

    /// Every 0-vertex has at least one neighbour of weight 2.
    pub fn is_roman_dominating(&self, g: &Graph) -> bool {
        self.n == g.order()
            && self
                .zeros()
                .iter()
                .all(|v| !g.neighbors(v).is_disjoint(self.twos))
    }

    /// Every 0-vertex has exactly one neighbour of weight 2.
    pub fn is_perfect_roman_dominating(&self, g: &Graph) -> bool {
        self.n == g.order()
            && self
                .zeros()
                .iter()
                .all(|v| (g.neighbors(v) & self.twos).len() == 1)
    }

    /// Roman dominating with V₁ ∪ V₂ a total dominating set.
    pub fn is_total_roman_dominating(&self, g: &Graph) -> bool {
        let positive = self.ones | self.twos;
        self.is_roman_dominating(g)
            && (0..self.n).all(|v| !g.neighbors(v).is_disjoint(positive))
    }
}

impl fmt::Debug for RomanAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RomanAssignment{:?}", self.weights())
    }
}

impl Serialize for RomanAssignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.weights())
    }
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
    fn build_small_graphs() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!((k2.degree(0), k2.degree(1)), (1, 1));

        let p4 = path(4);
        assert_eq!(p4.degree_extremes(), (1, 2));

        let n3 = Graph::new(3, &[]).unwrap();
        assert_eq!(n3.degree_extremes(), (0, 0));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 1), (2, 2)]),
            Err(Error::LoopEdge { u: 2, v: 2 })
        );
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(0, &[]), Err(Error::EmptyGraph));
        assert!(matches!(
            Graph::new(MAX_ORDER + 1, &[]),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn closed_neighborhoods() {
        assert_eq!(path(4).closed_neighborhood(1).unwrap(), set(&[0, 1, 2]));
        assert_eq!(
            Graph::empty(3).unwrap().closed_neighborhood(0).unwrap(),
            set(&[0])
        );
        assert_eq!(
            Graph::complete(4).unwrap().closed_neighborhood(2).unwrap(),
            set(&[0, 1, 2, 3])
        );
        assert!(path(4).closed_neighborhood(4).is_err());
    }

    #[test]
    fn external_private_neighbors() {
        assert_eq!(path(4).epn(1, set(&[1, 2])).unwrap(), set(&[0]));
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.epn(0, set(&[0, 1])).unwrap(), VertexSet::EMPTY);
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.epn(0, set(&[0])).unwrap(), set(&[1, 2, 3]));
        assert_eq!(
            path(4).epn(0, set(&[1, 2])),
            Err(Error::NotInSet { vertex: 0 })
        );
    }

    #[test]
    fn degree_extremes_examples() {
        assert_eq!(path(4).degree_extremes(), (1, 2));
        assert_eq!(cycle(5).degree_extremes(), (2, 2));
        let k2_k1 = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(k2_k1.degree_extremes(), (0, 1));
    }

    #[test]
    fn rows_must_be_symmetric() {
        let rows = vec![set(&[1]), VertexSet::EMPTY];
        assert!(Graph::from_rows(rows).is_err());
        let rows = vec![set(&[0])];
        assert!(matches!(Graph::from_rows(rows), Err(Error::LoopEdge { .. })));
    }

    #[test]
    fn connectivity_and_trees() {
        assert!(path(5).is_tree());
        assert!(!cycle(5).is_tree());
        assert!(!Graph::new(3, &[(0, 1)]).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_tree());
    }

    #[test]
    fn roman_assignment_levels() {
        let f = RomanAssignment::from_weights(&[2, 0, 1, 1]).unwrap();
        assert_eq!(f.weight(), 4);
        assert_eq!(f.zeros(), set(&[1]));
        assert!(f.is_roman_dominating(&path(4)));
        assert!(f.is_perfect_roman_dominating(&path(4)));
        assert!(RomanAssignment::from_weights(&[3]).is_err());
        assert!(RomanAssignment::new(2, set(&[0]), set(&[0])).is_err());
    }
}
