//! Named graph families.
//!
//! Specs are written `family(args)`, for example `path(4)`, `cycle(5)`,
//! `complete(3)`, `empty(2)`, `star(3)` (K₁,₃), `union(complete(2), empty(1))`
//! or `corona(cycle(3), 2)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    /// K₁,ₖ with the centre at vertex 0.
    Star(usize),
    /// Disjoint union; vertices of the second operand follow the first.
    Union(Box<GraphFamilySpec>, Box<GraphFamilySpec>),
    /// G′ ⊙ N_k: each vertex of the base gets `k` pendant vertices.
    Corona(Box<GraphFamilySpec>, usize),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

pub fn generate(spec: &GraphFamilySpec) -> Result<Graph> {
    use GraphFamilySpec::*;
    match spec {
        Path(n) => {
            if *n < 1 {
                return Err(invalid("path order must be at least 1"));
            }
            let edges: Vec<_> = (1..*n).map(|v| (v - 1, v)).collect();
            Graph::new(*n, &edges)
        }
        Cycle(n) => {
            if *n < 3 {
                return Err(invalid("cycle order must be at least 3"));
            }
            let edges: Vec<_> = (0..*n).map(|v| (v, (v + 1) % n)).collect();
            Graph::new(*n, &edges)
        }
        Complete(n) => {
            if *n < 1 {
                return Err(invalid("complete graph order must be at least 1"));
            }
            Graph::complete(*n)
        }
        Empty(n) => {
            if *n < 1 {
                return Err(invalid("empty graph order must be at least 1"));
            }
            Graph::empty(*n)
        }
        Star(k) => {
            if *k < 1 {
                return Err(invalid("star needs at least one leaf"));
            }
            let edges: Vec<_> = (1..=*k).map(|v| (0, v)).collect();
            Graph::new(k + 1, &edges)
        }
        Union(a, b) => disjoint_union(&generate(a)?, &generate(b)?),
        Corona(base, k) => {
            if *k < 1 {
                return Err(invalid("corona needs k >= 1"));
            }
            corona(&generate(base)?, *k)
        }
    }
}

pub fn disjoint_union(a: &Graph, b: &Graph) -> Result<Graph> {
    let shift = a.order();
    let edges: Vec<_> = a
        .edges()
        .chain(b.edges().map(|(u, v)| (u + shift, v + shift)))
        .collect();
    Graph::new(a.order() + b.order(), &edges)
}

/// Base vertices keep their indices; the pendants of base vertex `v` are
/// `n + v*k .. n + (v+1)*k`.
pub fn corona(base: &Graph, k: usize) -> Result<Graph> {
    let n = base.order();
    let mut edges: Vec<_> = base.edges().collect();
    for v in 0..n {
        for i in 0..k {
            edges.push((v, n + v * k + i));
        }
    }
    Graph::new(n * (k + 1), &edges)
}

/// The pendant vertices a corona attached to base vertex `v`.
pub fn corona_pendants(base_order: usize, k: usize, v: usize) -> VertexSet {
    (base_order + v * k..base_order + (v + 1) * k).collect()
}

impl fmt::Display for GraphFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GraphFamilySpec::*;
        match self {
            Path(n) => write!(f, "path({n})"),
            Cycle(n) => write!(f, "cycle({n})"),
            Complete(n) => write!(f, "complete({n})"),
            Empty(n) => write!(f, "empty({n})"),
            Star(k) => write!(f, "star({k})"),
            Union(a, b) => write!(f, "union({a}, {b})"),
            Corona(g, k) => write!(f, "corona({g}, {k})"),
        }
    }
}

impl FromStr for GraphFamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser { src: s, pos: 0 };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos != s.len() {
            return Err(invalid(format!("unexpected input at {}: {s:?}", parser.pos)));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(invalid(format!("expected {c:?} at {} in {:?}", self.pos, self.src)))
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn number(&mut self) -> Result<usize> {
        let w = self.word();
        w.parse()
            .map_err(|_| invalid(format!("expected a number, found {w:?}")))
    }

    fn spec(&mut self) -> Result<GraphFamilySpec> {
        use GraphFamilySpec::*;
        let name = self.word().to_ascii_lowercase();
        self.expect('(')?;
        let spec = match name.as_str() {
            "path" => Path(self.number()?),
            "cycle" => Cycle(self.number()?),
            "complete" => Complete(self.number()?),
            "empty" => Empty(self.number()?),
            "star" => Star(self.number()?),
            "union" => {
                let a = self.spec()?;
                self.expect(',')?;
                let b = self.spec()?;
                Union(Box::new(a), Box::new(b))
            }
            "corona" => {
                let g = self.spec()?;
                self.expect(',')?;
                Corona(Box::new(g), self.number()?)
            }
            other => return Err(invalid(format!("unknown family {other:?}"))),
        };
        self.expect(')')?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gen(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn named_families() {
        assert_eq!(
            gen("path(4)"),
            Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
        );
        let c = gen("corona(cycle(3), 2)");
        assert_eq!(c.order(), 9);
        for v in 0..3 {
            assert_eq!(c.degree(v), 4);
            assert_eq!(c.neighbors(v) & corona_pendants(3, 2, v), corona_pendants(3, 2, v));
        }
        let u = gen("union(complete(2), complete(1))");
        assert_eq!(u.order(), 3);
        assert_eq!(u.edge_count(), 1);
        assert_eq!(u.min_degree(), 0);
    }

    #[test]
    fn degree_sequences() {
        for n in 1..10 {
            let p = gen(&format!("path({n})"));
            let mut degs: Vec<_> = (0..n).map(|v| p.degree(v)).collect();
            degs.sort();
            let mut want = vec![2; n.saturating_sub(2)];
            if n == 1 {
                want = vec![0];
            } else {
                want.splice(0..0, [1, 1]);
            }
            assert_eq!(degs, want);
            assert!((0..n).all(|v| gen(&format!("complete({n})")).degree(v) == n - 1));
            assert!((0..n).all(|v| gen(&format!("empty({n})")).degree(v) == 0));
            if n >= 3 {
                assert!((0..n).all(|v| gen(&format!("cycle({n})")).degree(v) == 2));
            }
        }
    }

    #[test]
    fn invalid_params() {
        assert!(generate(&GraphFamilySpec::Cycle(2)).is_err());
        assert!(generate(&GraphFamilySpec::Path(0)).is_err());
        assert!("corona(path(2), 0)".parse::<GraphFamilySpec>().map(|s| generate(&s)).unwrap().is_err());
        assert!("wheel(5)".parse::<GraphFamilySpec>().is_err());
        assert!("path(4".parse::<GraphFamilySpec>().is_err());
        assert!("path(4) x".parse::<GraphFamilySpec>().is_err());
    }

    #[test]
    fn display_parses_back() {
        let s: GraphFamilySpec = "corona( union(path(2),star(3)) ,4)".parse().unwrap();
        assert_eq!(s.to_string().parse::<GraphFamilySpec>().unwrap(), s);
    }

    proptest! {
        #[test]
        fn corona_counts(n in 1usize..8, k in 1usize..5, extra in proptest::collection::vec((0usize..8, 0usize..8), 0..12)) {
            let edges: Vec<_> = extra.into_iter().filter(|&(u, v)| u < n && v < n && u != v).collect();
            let base = Graph::new(n, &edges).unwrap();
            let c = corona(&base, k).unwrap();
            prop_assert_eq!(c.order(), n * (k + 1));
            prop_assert_eq!(c.edge_count(), base.edge_count() + k * n);
        }
    }
}
