//! Reading and writing graphs: graph6, edge lists, corpora and named families.

mod edgelist;
mod family;
mod graph6;

use std::path::Path;

pub use edgelist::{parse_edge_list, write_edge_list};
pub use family::{corona, corona_pendants, disjoint_union, generate, GraphFamilySpec};
pub use graph6::{parse_graph6, write_graph6, GRAPH6_MAX_ORDER, HEADER as GRAPH6_HEADER};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses either format. Edge lists are recognised by a leading digit or
/// comment; graph6 never starts with one.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text
        .trim_start()
        .chars()
        .next()
        .ok_or_else(|| Error::MalformedGraph6 {
            offset: 0,
            reason: "empty input".into(),
        })?;
    if first.is_ascii_digit() || first == '#' {
        parse_edge_list(text)
    } else {
        parse_graph6(text.trim().as_bytes())
    }
}

/// Parses newline-separated graph6 lines. Blank lines are skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            parse_graph6(line.trim_end().as_bytes()).map_err(|e| Error::CorpusLine {
                line: i + 1,
                source: Box::new(e),
            })
        })
        .collect()
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_corpus(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_examples() {
        let graphs = parse_corpus("A_\nA?\n").unwrap();
        assert_eq!(graphs, vec![Graph::complete(2).unwrap(), Graph::empty(2).unwrap()]);
        assert!(parse_corpus("").unwrap().is_empty());
        assert!(matches!(
            parse_corpus("A_\nXX\n"),
            Err(Error::CorpusLine { line: 2, .. })
        ));
    }

    #[test]
    fn auto_detects_format() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(parse_graph_text("Bg\n").unwrap(), p3);
        assert_eq!(parse_graph_text("3 2\n0 1\n1 2\n").unwrap(), p3);
        assert_eq!(parse_graph_text("# path\n3 2\n0 1\n1 2\n").unwrap(), p3);
        assert!(parse_graph_text("   ").is_err());
    }
}
