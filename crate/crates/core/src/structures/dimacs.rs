//! DIMACS undirected-graph text format (`p edge V E`, 1-based `e u v` lines).

use super::graph::Graph;
use crate::error::{Error, Result};

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// One label per line, in vertex order. `None` for unlabelled graphs.
pub fn label_sidecar(g: &Graph) -> Option<String> {
    let labels = g.labels()?;
    Some(labels.iter().map(|l| format!("{l}\n")).collect())
}

/// Parses DIMACS text. Comment (`c`) lines are skipped; duplicate edges are tolerated;
/// the edge count in the header must match the number of `e` lines.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |msg: &str| Error::Parse {
            line: line_no,
            msg: msg.to_string(),
        };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(err("duplicate problem line"));
                }
                let fmt = tok.next().ok_or_else(|| err("missing format"))?;
                if fmt != "edge" && fmt != "col" {
                    return Err(err("expected `p edge V E`"));
                }
                let v = parse_num(tok.next(), line_no)?;
                let e = parse_num(tok.next(), line_no)?;
                header = Some((v, e));
            }
            Some("e") => {
                let (nv, _) = header.ok_or_else(|| err("edge before problem line"))?;
                let u = parse_num(tok.next(), line_no)?;
                let v = parse_num(tok.next(), line_no)?;
                if u == 0 || v == 0 || u > nv || v > nv {
                    return Err(err("vertex index out of range"));
                }
                if u == v {
                    return Err(err("self-loop"));
                }
                edges.push((u - 1, v - 1));
            }
            Some(_) => return Err(err("unknown line type")),
            None => {}
        }
    }
    let (nv, ne) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing problem line".into(),
    })?;
    if edges.len() != ne {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {ne} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(nv, edges)
}

fn parse_num(tok: Option<&str>, line: usize) -> Result<usize> {
    tok.and_then(|t| t.parse().ok()).ok_or(Error::Parse {
        line,
        msg: "expected a non-negative integer".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::construct::hamming_graph;

    #[test]
    fn export_format() {
        let g = hamming_graph(2, 2, 2).unwrap();
        assert_eq!(to_dimacs(&g), "p edge 4 2\ne 1 4\ne 2 3\n");
        assert_eq!(label_sidecar(&g).unwrap(), "00\n01\n10\n11\n");
        assert_eq!(label_sidecar(&Graph::cycle(3)), None);
    }

    #[test]
    fn parse_roundtrip() {
        let g = hamming_graph(3, 3, 2).unwrap();
        let back = parse_dimacs(&to_dimacs(&g)).unwrap();
        assert_eq!(back.vertex_count(), 27);
        assert!(back.edges().eq(g.edges()));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(parse_dimacs("p edge 3 1\ne 1 4\n").is_err());
        assert!(parse_dimacs("p edge 3 2\ne 1 2\n").is_err());
        assert!(parse_dimacs("p edge 3 1\ne 2 2\n").is_err());
        assert!(parse_dimacs("p edge 3 1\nx 1 2\n").is_err());
        let g = parse_dimacs("c comment\np edge 3 1\n\ne 1 3\n").unwrap();
        assert!(g.has_edge(0, 2));
    }
}
