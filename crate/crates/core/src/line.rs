//! The line-graph operator and its iteration.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

/// Default cap on the vertex count of any intermediate iterated line graph.
pub const DEFAULT_VERTEX_BUDGET: usize = 10_000;

/// `L(g)`: one vertex per edge of `g`, in the lexicographic edge order of
/// [`Graph::edges`]; two vertices are adjacent when their edges share an
/// endpoint. Vertex labels record the endpoint pair, `{a,b}`, using the
/// labels of `g`.
pub fn line_graph(g: &Graph) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut incident: Vec<Vec<usize>> = alloc::vec![Vec::new(); g.vertex_count()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut lg = Graph::new(edges.len());
    for around in &incident {
        for (a, &e) in around.iter().enumerate() {
            for &f in &around[a + 1..] {
                lg.add_edge(e, f).expect("distinct in-range edge ids");
            }
        }
    }
    let labels: Vec<String> = edges
        .iter()
        .map(|&(u, v)| format!("{{{},{}}}", g.label(u), g.label(v)))
        .collect();
    lg.with_labels(labels).expect("one label per edge")
}

/// Applies [`line_graph`] `k` times. Fails with a resource limit as soon as
/// the next graph would have more than `vertex_budget` vertices.
pub fn iterate_line_graph(g: &Graph, k: usize, vertex_budget: usize) -> Result<Graph> {
    let mut current = g.clone();
    for _ in 0..k {
        if current.edge_count() > vertex_budget {
            return Err(Error::ResourceLimit {
                what: "line-graph vertex",
                limit: vertex_budget as u64,
            });
        }
        current = line_graph(&current);
    }
    Ok(current)
}
