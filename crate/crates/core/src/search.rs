//! Induced-subgraph embedding and isomorphism by backtracking.
//!
//! Pattern vertices are matched in a fixed order: start from the highest
//! degree vertex (lowest id on ties), then repeatedly take the vertex with
//! the most already-ordered neighbours, breaking ties by degree and then id.
//! Host candidates are tried in ascending id order, so the first witness
//! found is canonical for the pair of graphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Graph, LabelMap, Result};

/// Default node-expansion budget for embedding and isomorphism search.
pub const DEFAULT_EMBED_BUDGET: u64 = 100_000_000;

/// Finds an induced copy of `pattern` inside `host`.
///
/// `Ok(None)` means the search was exhaustive and no copy exists; running
/// out of `budget` expansions is reported as [`Error::ResourceLimit`].
pub fn contains_induced(host: &Graph, pattern: &Graph, budget: u64) -> Result<Option<LabelMap>> {
    if pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    Matcher::new(pattern, host, false, budget).run()
}

/// Finds an isomorphism `a -> b`, or `Ok(None)` if the graphs differ.
pub fn is_isomorphic(a: &Graph, b: &Graph, budget: u64) -> Result<Option<LabelMap>> {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return Ok(None);
    }
    Matcher::new(a, b, true, budget).run()
}

struct Step {
    vertex: usize,
    /// An earlier-ordered neighbour; its image bounds the candidate set.
    anchor: Option<usize>,
    /// Earlier-ordered vertices split by adjacency to `vertex`.
    adjacent: Vec<usize>,
    non_adjacent: Vec<usize>,
}

struct Matcher<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    exact_degree: bool,
    steps: Vec<Step>,
    image: Vec<usize>,
    used: Vec<bool>,
    expansions: u64,
    budget: u64,
}

impl<'a> Matcher<'a> {
    fn new(pattern: &'a Graph, host: &'a Graph, exact_degree: bool, budget: u64) -> Self {
        let n = pattern.vertex_count();
        let mut ordered = vec![false; n];
        let mut links = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .filter(|&v| !ordered[v])
                .max_by(|&a, &b| {
                    (links[a], pattern.degree(a))
                        .cmp(&(links[b], pattern.degree(b)))
                        .then(b.cmp(&a))
                })
                .expect("an unordered vertex remains");
            ordered[next] = true;
            for &w in pattern.neighbors(next) {
                links[w] += 1;
            }
            order.push(next);
        }
        let steps = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let (adjacent, non_adjacent): (Vec<usize>, Vec<usize>) =
                    order[..i].iter().partition(|&&u| pattern.has_edge(u, v));
                Step {
                    vertex: v,
                    anchor: adjacent.first().copied(),
                    adjacent,
                    non_adjacent,
                }
            })
            .collect();
        Matcher {
            pattern,
            host,
            exact_degree,
            steps,
            image: vec![usize::MAX; n],
            used: vec![false; host.vertex_count()],
            expansions: 0,
            budget,
        }
    }

    fn run(mut self) -> Result<Option<LabelMap>> {
        if self.extend(0)? {
            Ok(Some(LabelMap::new(self.image).expect("search keeps the map injective")))
        } else {
            Ok(None)
        }
    }

    fn fits(&self, step: &Step, candidate: usize) -> bool {
        let want = self.pattern.degree(step.vertex);
        let have = self.host.degree(candidate);
        let degree_ok = if self.exact_degree { have == want } else { have >= want };
        degree_ok
            && !self.used[candidate]
            && step
                .adjacent
                .iter()
                .all(|&u| self.host.has_edge(self.image[u], candidate))
            && step
                .non_adjacent
                .iter()
                .all(|&u| !self.host.has_edge(self.image[u], candidate))
    }

    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.steps.len() {
            return Ok(true);
        }
        let candidates: Vec<usize> = match self.steps[depth].anchor {
            Some(a) => self.host.neighbors(self.image[a]).to_vec(),
            None => (0..self.host.vertex_count()).collect(),
        };
        for c in candidates {
            self.expansions += 1;
            if self.expansions > self.budget {
                return Err(Error::ResourceLimit {
                    what: "subgraph search expansion",
                    limit: self.budget,
                });
            }
            if !self.fits(&self.steps[depth], c) {
                continue;
            }
            let v = self.steps[depth].vertex;
            self.image[v] = c;
            self.used[c] = true;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used[c] = false;
            self.image[v] = usize::MAX;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{claw, clique, cycle, path, petersen, wheel};
    use crate::line::line_graph;

    const B: u64 = DEFAULT_EMBED_BUDGET;

    #[test]
    fn graph_contains_itself_by_identity() {
        let p = petersen();
        let m = contains_induced(&p, &p, B).unwrap().unwrap();
        assert!(m.is_induced_embedding(&p, &p));
        let w = wheel(5).unwrap();
        let m = contains_induced(&w, &w, B).unwrap().unwrap();
        assert!(m.is_isomorphism(&w, &w));
    }

    #[test]
    fn triangle_free_host() {
        assert_eq!(
            contains_induced(&cycle(5).unwrap(), &clique(3).unwrap(), B).unwrap(),
            None
        );
    }

    #[test]
    fn induced_not_just_subgraph() {
        // P3 is a subgraph of K3 but not an induced one.
        assert_eq!(
            contains_induced(&clique(3).unwrap(), &path(3).unwrap(), B).unwrap(),
            None
        );
        assert!(contains_induced(&cycle(5).unwrap(), &path(4).unwrap(), B)
            .unwrap()
            .is_some());
    }

    #[test]
    fn line_graph_isomorphisms() {
        let c5 = cycle(5).unwrap();
        let m = is_isomorphic(&c5, &line_graph(&c5), B).unwrap().unwrap();
        assert!(m.is_isomorphism(&c5, &line_graph(&c5)));
        assert!(is_isomorphic(&clique(3).unwrap(), &line_graph(&claw()), B)
            .unwrap()
            .is_some());
        assert_eq!(is_isomorphic(&path(3).unwrap(), &cycle(3).unwrap(), B).unwrap(), None);
    }

    #[test]
    fn same_degrees_not_isomorphic() {
        // Two triangles vs a hexagon: both 2-regular on six vertices.
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(is_isomorphic(&two_triangles, &cycle(6).unwrap(), B).unwrap(), None);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let host = line_graph(&clique(6).unwrap());
        let pattern = line_graph(&clique(5).unwrap());
        assert!(matches!(
            contains_induced(&host, &pattern, 3),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
