//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with
//! 0-based endpoints. Blank lines and `#` comments are ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn bad(line: usize, reason: impl Into<String>) -> Error {
    Error::MalformedEdgeList {
        line,
        reason: reason.into(),
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| bad(line_no, format!("missing {what}")))?;
        field
            .parse()
            .map_err(|_| bad(line_no, format!("{what} {field:?} is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(bad(line_no, "expected exactly two fields"));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or_else(|| bad(1, "missing header"))?;
    let (n, m) = parse_pair(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let (u, v) = parse_pair(line_no, line)?;
        if u == v {
            return Err(bad(line_no, format!("loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(bad(line_no, format!("endpoint out of range for order {n}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(bad(
            header_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# P4\n4 3\n0 1\n1 2\n\n2 3 # last\n").unwrap();
        assert_eq!(g, Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap());
    }

    #[test]
    fn round_trip() {
        let g = Graph::new(5, &[(0, 4), (1, 3), (2, 3)]).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn errors_name_lines() {
        assert!(matches!(
            parse_edge_list("3 1\n0 3\n"),
            Err(Error::MalformedEdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::MalformedEdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n1 1\n"),
            Err(Error::MalformedEdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(Error::MalformedEdgeList { line: 2, .. })
        ));
    }
}
