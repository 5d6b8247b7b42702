//! Plain-text hypergraph files: one hyperedge per line, vertex names
//! separated by ASCII whitespace, `#` starting a comment. Hyperedges are
//! numbered from 1 in line order.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use std::collections::HashSet;
use std::fmt::Write;
use std::path::Path;

/// Parses hypergraph text. Errors carry 1-based physical line numbers.
pub fn parse_hg(text: &str) -> Result<Hypergraph> {
    let mut edges: Vec<Vec<&str>> = Vec::new();
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_ascii_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        seen.clear();
        if let Some(dup) = tokens.iter().find(|t| !seen.insert(**t)) {
            return Err(Error::Parse { line: i + 1, msg: format!("vertex {dup:?} repeated in one hyperedge") });
        }
        edges.push(tokens);
    }
    Hypergraph::from_named_edges(edges)
}

pub fn read_hg(path: impl AsRef<Path>) -> Result<Hypergraph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_hg(&text)
}

/// Writes one line per hyperedge, vertices in id order.
pub fn write_hg(h: &Hypergraph) -> String {
    let mut out = String::with_capacity(h.size() * 4);
    for j in 0..h.m() {
        for (k, name) in h.edge_names(j).into_iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            out.push_str(name);
        }
        out.push('\n');
    }
    out
}

/// `{a,b,c}` with vertex names in id order.
pub fn format_set(h: &Hypergraph, vertices: &[usize]) -> String {
    let mut s = String::from("{");
    for (k, &v) in vertices.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}", h.name(v));
    }
    s.push('}');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let h = parse_hg("# sample\na b c\n\n a d  # second\nb c\nc e f\n").unwrap();
        assert_eq!((h.n(), h.m(), h.size()), (6, 4, 10));
        assert_eq!(h.edge_names(1), ["a", "d"]);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_hg("").unwrap_err(), Error::Empty);
        assert_eq!(parse_hg("# only\n\n").unwrap_err(), Error::Empty);
        match parse_hg("a b\n\nx y x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn round_trip() {
        let h = parse_hg("a b c\na d\nb c\nc e f\n").unwrap();
        assert_eq!(parse_hg(&write_hg(&h)).unwrap(), h);
        assert_eq!(format_set(&h, h.edge(3)), "{c,e,f}");
    }
}
