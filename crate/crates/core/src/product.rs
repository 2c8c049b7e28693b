//! The lexicographic product G∘H.
//!
//! `(u,v) ~ (x,y)` iff `u ~ x` in G, or `u = x` and `v ~ y` in H. Product
//! vertices are numbered row-major: `(u, v) ↦ u·n(H) + v`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProductIndexMap {
    pub ng: usize,
    pub nh: usize,
}

impl ProductIndexMap {
    pub fn new(ng: usize, nh: usize) -> Self {
        ProductIndexMap { ng, nh }
    }

    pub fn order(&self) -> usize {
        self.ng * self.nh
    }

    pub fn encode(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < self.ng && v < self.nh);
        u * self.nh + v
    }

    pub fn decode(&self, w: usize) -> (usize, usize) {
        (w / self.nh, w % self.nh)
    }

    /// The layer H_u = {u} × V(H).
    pub fn layer_set(&self, u: usize) -> Result<VertexSet> {
        if u >= self.ng {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                n: self.ng,
            });
        }
        Ok(self.layer(u))
    }

    pub(crate) fn layer(&self, u: usize) -> VertexSet {
        (u * self.nh..(u + 1) * self.nh).collect()
    }

    /// X × Y for factor sets X ⊆ V(G), Y ⊆ V(H).
    pub fn cross(&self, xs: VertexSet, ys: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for u in xs.iter() {
            for v in ys.iter() {
                out = out.with(self.encode(u, v));
            }
        }
        out
    }

    /// Factor vertices whose layer meets `s`.
    pub fn project(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|w| w / self.nh).collect()
    }

    /// `s ∩ H_u`, re-indexed as a subset of V(H).
    pub fn layer_slice(&self, s: VertexSet, u: usize) -> VertexSet {
        (0..self.nh)
            .filter(|&v| s.contains(self.encode(u, v)))
            .collect()
    }
}

pub fn lex_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductIndexMap)> {
    let map = ProductIndexMap::new(g.order(), h.order());
    let n = map.order();
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
    }
    let mut rows = Vec::with_capacity(n);
    for u in 0..g.order() {
        let across = map.cross(g.neighbors(u), h.vertices());
        for v in 0..h.order() {
            rows.push(across | map.cross(VertexSet::singleton(u), h.neighbors(v)));
        }
    }
    Ok((Graph::from_rows(rows)?, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn small_products() {
        let k2 = Graph::complete(2).unwrap();
        let n2 = Graph::empty(2).unwrap();
        let (p, _) = lex_product(&k2, &k2).unwrap();
        assert_eq!(p, Graph::complete(4).unwrap());

        let (p, _) = lex_product(&k2, &n2).unwrap();
        assert_eq!(p.edge_count(), 4);
        assert!((0..4).all(|v| p.degree(v) == 2));
        assert!(!p.has_edge(0, 1) && !p.has_edge(2, 3));

        let (p, _) = lex_product(&path(4), &path(3)).unwrap();
        assert_eq!(p.edge_count(), 35);
    }

    #[test]
    fn layers() {
        let set = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
        assert_eq!(ProductIndexMap::new(2, 3).layer_set(1).unwrap(), set(&[3, 4, 5]));
        assert_eq!(ProductIndexMap::new(4, 2).layer_set(0).unwrap(), set(&[0, 1]));
        assert_eq!(ProductIndexMap::new(1, 4).layer_set(0).unwrap(), set(&[0, 1, 2, 3]));
        assert!(ProductIndexMap::new(1, 4).layer_set(1).is_err());
    }

    #[test]
    fn oversized_product_is_rejected() {
        let g = Graph::complete(MAX_ORDER / 2 + 1).unwrap();
        let h = Graph::complete(2).unwrap();
        assert!(matches!(lex_product(&g, &h), Err(Error::OrderTooLarge { .. })));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..2 * n).prop_map(move |pairs| {
                let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn product_invariants(g in arb_graph(7), h in arb_graph(6)) {
            let (p, map) = lex_product(&g, &h).unwrap();
            prop_assert_eq!(p.order(), g.order() * h.order());
            prop_assert_eq!(
                p.edge_count(),
                g.edge_count() * h.order() * h.order() + g.order() * h.edge_count()
            );
            for u in 0..g.order() {
                let layer = p.induced_subgraph(map.layer_set(u).unwrap()).unwrap();
                prop_assert_eq!(&layer, &h);
                for v in 0..h.order() {
                    let w = map.encode(u, v);
                    prop_assert_eq!(map.decode(w), (u, v));
                    prop_assert_eq!(p.degree(w), g.degree(u) * h.order() + h.degree(v));
                }
            }
        }
    }
}
