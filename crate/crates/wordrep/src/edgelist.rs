//! Edge-list text format.
//!
//! ```text
//! p 4 3
//! e 0 1
//! e 0 2
//! e 1 2
//! c 0 a
//! ```
//!
//! Output is canonical: edges with `u < v` in lexicographic order, then one
//! `c` line per vertex when the graph carries labels, LF line endings. The
//! parser also accepts edges in any order and orientation, and `c` lines
//! anywhere after the header.

use std::fmt::Write as _;

use wordrep_core::Graph;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("missing `p <n> <m>` header")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line { line, msg: msg.into() }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            writeln!(out, "c {v} {l}").unwrap();
        }
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    let (n, m) = loop {
        let Some((no, line)) = lines.next() else {
            return Err(ParseError::MissingHeader);
        };
        if line.trim().is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        if it.next() != Some("p") {
            return Err(ParseError::MissingHeader);
        }
        let n = number(it.next(), no, "vertex count")?;
        let m = number(it.next(), no, "edge count")?;
        if it.next().is_some() {
            return Err(err(no, "trailing fields in header"));
        }
        break (n, m);
    };

    let mut g = Graph::new(n);
    let mut found = 0;
    let mut labels: Vec<Option<String>> = vec![None; n];
    for (no, line) in lines {
        let mut it = line.split_whitespace();
        match it.next() {
            None => continue,
            Some("e") => {
                let u = number(it.next(), no, "endpoint")?;
                let v = number(it.next(), no, "endpoint")?;
                if it.next().is_some() {
                    return Err(err(no, "trailing fields after edge"));
                }
                if u == v {
                    return Err(err(no, format!("self-loop at {u}")));
                }
                if u >= n || v >= n {
                    return Err(err(no, format!("endpoint out of range for {n} vertices")));
                }
                if !g.add_edge(u, v).map_err(|e| err(no, e.to_string()))? {
                    return Err(err(no, format!("duplicate edge {{{u},{v}}}")));
                }
                found += 1;
            }
            Some("c") => {
                let v = number(it.next(), no, "vertex")?;
                if v >= n {
                    return Err(err(no, format!("label for vertex {v} out of range")));
                }
                let rest = line.trim_start()[1..].trim_start();
                let label = rest[rest.find(char::is_whitespace).unwrap_or(rest.len())..].trim();
                if label.is_empty() {
                    return Err(err(no, "empty label"));
                }
                if labels[v].replace(label.to_string()).is_some() {
                    return Err(err(no, format!("vertex {v} labelled twice")));
                }
            }
            Some(tag) => return Err(err(no, format!("unknown line type `{tag}`"))),
        }
    }
    if found != m {
        return Err(ParseError::EdgeCount { declared: m, found });
    }
    if labels.iter().any(Option::is_some) {
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(v, l)| l.unwrap_or_else(|| v.to_string()));
        g = g.with_labels(labels).expect("one label per vertex");
    }
    Ok(g)
}

fn number(field: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let f = field.ok_or_else(|| err(line, format!("missing {what}")))?;
    f.parse().map_err(|_| err(line, format!("bad {what} `{f}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use wordrep_core::families::{fig6_graph, wheel};

    #[test]
    fn canonical_output() {
        let g = Graph::from_edges(3, [(2, 1), (0, 2)]).unwrap();
        assert_eq!(write_edge_list(&g), "p 3 2\ne 0 2\ne 1 2\n");
        assert_eq!(write_edge_list(&Graph::new(0)), "p 0 0\n");
    }

    #[test]
    fn round_trip() {
        for g in [wheel(5).unwrap(), fig6_graph(3).unwrap()] {
            let text = write_edge_list(&g);
            let back = parse_edge_list(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(back.labels(), g.labels());
            assert_eq!(write_edge_list(&back), text);
        }
    }

    #[test]
    fn labels_with_spaces() {
        let g = parse_edge_list("p 2 1\nc 1 two words\ne 0 1\n").unwrap();
        assert_eq!(g.labels().unwrap(), ["0", "two words"]);
    }

    #[test]
    fn rejects_malformed() {
        let bad = [
            "",
            "e 0 1\n",
            "p 2\n",
            "p 2 1\ne 0 0\n",
            "p 2 1\ne 0 2\n",
            "p 2 2\ne 0 1\ne 1 0\n",
            "p 2 2\ne 0 1\n",
            "p 2 1\ne 0 1\nx\n",
            "p 2 1\ne 0 1 5\n",
            "p 2 1\ne 0 1\nc 0 a\nc 0 b\n",
            "p 2 1\ne 0 1\nc 3 a\n",
            "p 2 1\ne 0 1\nc 0\n",
            "p -1 0\n",
        ];
        for text in bad {
            assert!(parse_edge_list(text).is_err(), "{text:?}");
        }
    }
}
