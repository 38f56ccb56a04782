//! Generators for the graph families used throughout the experiments.
//!
//! Graphs that come from a drawing (the Petersen graph, the minimal
//! non-representable graphs, the line-graph iteration sequence) keep the
//! vertex numbering of that drawing so published words can be checked
//! letter for letter.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

fn labelled(n: usize, edges: &[(usize, usize)], labels: &[&str]) -> Graph {
    Graph::from_edges(n, edges.iter().copied())
        .and_then(|g| g.with_labels(labels.iter().copied()))
        .expect("static family is well formed")
}

/// The cycle `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn clique(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("clique needs n >= 1"));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `n` vertices in a line.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("path needs n >= 1"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Centre 0 joined to leaves `1..=k`.
pub fn star(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::invalid("star needs at least one leaf"));
    }
    Graph::from_edges(k + 1, (1..=k).map(|leaf| (0, leaf)))
}

/// `K_{1,3}`.
pub fn claw() -> Graph {
    star(3).expect("three leaves")
}

/// The cycle on `0..n` plus a hub `n` adjacent to every cycle vertex.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!("wheel needs n >= 3, got {n}")));
    }
    let hub = n;
    Graph::from_edges(n + 1, (0..n).flat_map(|i| [(i, (i + 1) % n), (i, hub)]))
}

/// The Petersen graph numbered as drawn: outer cycle 0-4-3-2-1, inner
/// pentagram on 5..9, spokes 0-5, 4-9, 3-8, 2-7, 1-6.
pub fn petersen() -> Graph {
    const EDGES: [(usize, usize); 15] = [
        (0, 4),
        (4, 3),
        (3, 2),
        (2, 1),
        (1, 0),
        (5, 8),
        (5, 7),
        (9, 6),
        (9, 7),
        (6, 8),
        (0, 5),
        (4, 9),
        (3, 8),
        (2, 7),
        (1, 6),
    ];
    Graph::from_edges(10, EDGES).expect("static family is well formed")
}

/// The four-vertex graph on letters 1..4 represented by `12312434`: a
/// triangle 1-2-3 with a pendant 3-4. Vertex `i` carries label `i + 1`.
pub fn figure1_left() -> Graph {
    labelled(4, &[(0, 1), (1, 2), (0, 2), (2, 3)], &["1", "2", "3", "4"])
}

/// The four minimal non-representable graphs, `i` in `1..=4`.
///
/// 1 is the wheel on a 5-cycle. 2 is the triangular prism (outer triangle
/// 1-2-3, inner triangle 4-5-6, spokes 1-4, 2-5, 3-6) with apex 0 adjacent
/// to all six. 3 keeps only the inner edge 4-6 and 4 drops the inner
/// triangle entirely.
pub fn minimal_nonrep(i: usize) -> Result<Graph> {
    const OUTER: [(usize, usize); 3] = [(1, 2), (2, 3), (3, 1)];
    const SPOKES: [(usize, usize); 3] = [(1, 4), (2, 5), (3, 6)];
    const APEX: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6)];
    let inner: &[(usize, usize)] = match i {
        1 => return wheel(5),
        2 => &[(4, 5), (5, 6), (6, 4)],
        3 => &[(6, 4)],
        4 => &[],
        _ => return Err(Error::invalid(format!("minimal_nonrep index must be 1..=4, got {i}"))),
    };
    let edges = OUTER.iter().chain(inner).chain(&SPOKES).chain(&APEX).copied();
    Graph::from_edges(7, edges)
}

/// The line-graph iteration sequence, `i` in `1..=4`; each graph is the line
/// graph of the previous one. Vertices keep the numbers they are drawn with.
pub fn fig6_graph(i: usize) -> Result<Graph> {
    let g = match i {
        // 3 is joined to 1, 2 and 4; 5 hangs off 4.
        1 => labelled(5, &[(1, 2), (2, 0), (2, 3), (3, 4)], &["1", "2", "3", "4", "5"]),
        // Triangle 1-2-3 with pendant 3-4.
        2 => labelled(4, &[(0, 1), (1, 2), (2, 0), (2, 3)], &["1", "2", "3", "4"]),
        // 4-cycle 1-2-3-4 with chord 1-3.
        3 => labelled(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], &["1", "2", "3", "4"]),
        // 4-cycle 1-2-3-4 with hub 0.
        4 => {
            let labels: Vec<_> = (0..5).map(|v| v.to_string()).collect();
            Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 1), (0, 1), (0, 2), (0, 3), (0, 4)])
                .and_then(|g| g.with_labels(labels))
                .expect("static family is well formed")
        }
        _ => return Err(Error::invalid(format!("fig6 index must be 1..=4, got {i}"))),
    };
    Ok(g)
}
