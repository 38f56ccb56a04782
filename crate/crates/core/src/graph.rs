//! Finite simple undirected graphs on dense vertex ids `0..n`.
//!
//! Display labels are a separate layer: algorithms only ever see vertex ids,
//! while labels carry names such as the letters of a word or the endpoint
//! pairs a line-graph vertex came from.

use alloc::borrow::Cow;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A finite simple graph. Adjacency lists are kept sorted, so two graphs with
/// the same edge set compare equal regardless of how they were built.
///
/// Equality ignores display labels.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse into one;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `{u, v}`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::invalid(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    /// Attaches one display label per vertex.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.vertex_count() {
            return Err(Error::invalid(format!(
                "{} labels given for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `v`; the decimal vertex id when no labels are set.
    pub fn label(&self, v: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(labels) => Cow::Borrowed(labels[v].as_str()),
            None => Cow::Owned(v.to_string()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degrees sorted in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == n
    }

    /// The subgraph induced by `vertices`, relabelled `0..vertices.len()` in
    /// the order given. Each new vertex keeps the display label of the vertex
    /// it came from.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        for &v in vertices {
            if v >= n {
                return Err(Error::invalid(format!("vertex {v} outside 0..{n}")));
            }
            if seen[v] {
                return Err(Error::invalid(format!("vertex {v} listed twice")));
            }
            seen[v] = true;
        }
        let mut sub = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    sub.add_edge(i, j)?;
                }
            }
        }
        sub.labels = Some(vertices.iter().map(|&v| self.label(v).into_owned()).collect());
        Ok(sub)
    }
}

/// An injective map from the vertices of a pattern graph into a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMap {
    image: Vec<usize>,
}

impl LabelMap {
    /// Wraps `image[v]` = host vertex of pattern vertex `v`. Rejects
    /// non-injective maps.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut sorted = image.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("label map is not injective"));
        }
        Ok(LabelMap { image })
    }

    pub fn identity(n: usize) -> Self {
        LabelMap {
            image: (0..n).collect(),
        }
    }

    pub fn get(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    /// `(pattern vertex, host vertex)` pairs.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.image.iter().copied().enumerate()
    }

    /// Re-checks the map edge by edge: every pattern pair is adjacent iff
    /// its image pair is.
    pub fn is_induced_embedding(&self, pattern: &Graph, host: &Graph) -> bool {
        let n = pattern.vertex_count();
        if self.image.len() != n || self.image.iter().any(|&h| h >= host.vertex_count()) {
            return false;
        }
        (0..n).all(|u| (u + 1..n).all(|v| pattern.has_edge(u, v) == host.has_edge(self.image[u], self.image[v])))
    }

    /// An induced embedding that is also onto.
    pub fn is_isomorphism(&self, a: &Graph, b: &Graph) -> bool {
        a.vertex_count() == b.vertex_count() && self.is_induced_embedding(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edges_are_sorted_lexicographically() {
        let g = Graph::from_edges(4, [(3, 2), (1, 0), (0, 3), (2, 0)]).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, [(0, 1), (0, 2), (0, 3), (2, 3)]);
    }

    #[test]
    fn equality_ignores_labels() {
        let a = Graph::from_edges(2, [(0, 1)]).unwrap();
        let b = a.clone().with_labels(["x", "y"]).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.label(1), "y");
        assert_eq!(a.label(1), "1");
    }

    #[test]
    fn induced_subgraph_keeps_labels_and_rejects_bad_input() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let sub = g.induced_subgraph(&[3, 1, 2]).unwrap();
        assert_eq!(sub.edges().collect::<Vec<_>>(), [(0, 2), (1, 2)]);
        assert_eq!(sub.label(0), "3");
        assert!(g.induced_subgraph(&[0, 4]).is_err());
        assert!(g.induced_subgraph(&[0, 0]).is_err());
    }

    #[test]
    fn label_map_must_be_injective() {
        assert!(LabelMap::new(vec![0, 2, 0]).is_err());
        let m = LabelMap::new(vec![2, 0, 1]).unwrap();
        assert_eq!(m.pairs().collect::<Vec<_>>(), [(0, 2), (1, 0), (2, 1)]);
    }
}
