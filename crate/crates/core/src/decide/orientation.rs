//! Semi-transitive orientations.
//!
//! An orientation is semi-transitive when it is acyclic and has no shortcut:
//! whenever a directed path `v0 -> v1 -> ... -> vk` (k >= 2) is bridged by
//! the arc `v0 -> vk`, every pair `vi, vj` on the path must be adjacent.
//! Since adjacency is fixed by the underlying graph, a cycle or shortcut
//! among already-oriented edges survives any completion of the orientation;
//! the backtracking search relies on this to prune partial assignments.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{SearchStats, Verdict};
use crate::{Error, Graph, Result};

/// Vertex limit of the bitset-based orientation search.
pub const MAX_ORIENTATION_VERTICES: usize = 128;

/// A direction for every edge of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    base: Graph,
    /// `forward[i]` is true when the `i`-th edge of `base.edges()`, `(u, v)`
    /// with `u < v`, points `u -> v`.
    forward: Vec<bool>,
}

impl Orientation {
    pub fn new(base: Graph, forward: Vec<bool>) -> Result<Self> {
        if forward.len() != base.edge_count() {
            return Err(Error::invalid(format!(
                "{} directions for {} edges",
                forward.len(),
                base.edge_count()
            )));
        }
        Ok(Orientation { base, forward })
    }

    /// Builds an orientation from arcs `(tail, head)`; every edge of `base`
    /// must appear exactly once, in either direction.
    pub fn from_arcs(base: Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let edges: Vec<(usize, usize)> = base.edges().collect();
        let mut forward: Vec<Option<bool>> = vec![None; edges.len()];
        for &(t, h) in arcs {
            let key = (t.min(h), t.max(h));
            let i = edges
                .binary_search(&key)
                .map_err(|_| Error::invalid(format!("arc {t}->{h} is not an edge")))?;
            if forward[i].replace(t < h).is_some() {
                return Err(Error::invalid(format!("edge {}-{} oriented twice", key.0, key.1)));
            }
        }
        let forward = forward
            .into_iter()
            .zip(&edges)
            .map(|(f, &(u, v))| f.ok_or_else(|| Error::invalid(format!("edge {u}-{v} has no direction"))))
            .collect::<Result<Vec<bool>>>()?;
        Ok(Orientation { base, forward })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// Arcs `(tail, head)` in the edge order of the base graph.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.base
            .edges()
            .zip(&self.forward)
            .map(|((u, v), &f)| if f { (u, v) } else { (v, u) })
            .collect()
    }

    /// Every arc flipped.
    pub fn reversed(&self) -> Orientation {
        Orientation {
            base: self.base.clone(),
            forward: self.forward.iter().map(|f| !f).collect(),
        }
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.base.vertex_count()];
        for (t, h) in self.arcs() {
            out[t].push(h);
        }
        out
    }
}

/// Whether the oriented graph has no directed cycle (Kahn's algorithm).
pub fn is_acyclic(o: &Orientation) -> bool {
    let n = o.base.vertex_count();
    let out = o.successors();
    let mut indegree = vec![0usize; n];
    for hs in &out {
        for &h in hs {
            indegree[h] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = ready.pop() {
        removed += 1;
        for &h in &out[v] {
            indegree[h] -= 1;
            if indegree[h] == 0 {
                ready.push(h);
            }
        }
    }
    removed == n
}

/// Whether `o` is acyclic and shortcut-free.
pub fn is_semi_transitive(o: &Orientation) -> bool {
    if !is_acyclic(o) {
        return false;
    }
    let g = &o.base;
    let n = g.vertex_count();
    let out = o.successors();
    let mut pred = vec![Vec::new(); n];
    for (t, hs) in out.iter().enumerate() {
        for &h in hs {
            pred[h].push(t);
        }
    }
    for (u, w) in o.arcs() {
        // Vertices with a directed path to w.
        let mut reaches = vec![false; n];
        reaches[w] = true;
        let mut stack = vec![w];
        while let Some(v) = stack.pop() {
            for &p in &pred[v] {
                if !reaches[p] {
                    reaches[p] = true;
                    stack.push(p);
                }
            }
        }
        let mut path = vec![u];
        if shortcut_from(g, &out, &reaches, w, &mut path) {
            return false;
        }
    }
    true
}

/// Extends `path` (which starts at the tail of the bridging arc) towards `w`
/// and reports whether some completed path has a non-adjacent pair.
fn shortcut_from(g: &Graph, out: &[Vec<usize>], reaches: &[bool], w: usize, path: &mut Vec<usize>) -> bool {
    let last = *path.last().expect("path is never empty");
    for &x in &out[last] {
        if !reaches[x] {
            continue;
        }
        if x == w {
            if path.len() >= 2 && path.iter().any(|&p| !g.has_edge(p, w)) {
                return true;
            }
            continue;
        }
        if path.iter().any(|&p| !g.has_edge(p, x)) {
            return true;
        }
        path.push(x);
        let found = shortcut_from(g, out, reaches, w, path);
        path.pop();
        if found {
            return true;
        }
    }
    false
}

/// Result of [`has_semi_transitive_orientation`].
#[derive(Clone, Debug)]
pub struct OrientationSearch {
    pub verdict: Verdict,
    pub orientation: Option<Orientation>,
    pub stats: SearchStats,
    pub note: Option<String>,
}

/// Exhaustive backtracking over edge orientations.
///
/// Edges are taken by descending maximum endpoint degree, then
/// lexicographically; each edge tries `low -> high` before `high -> low`.
/// Reversing every arc preserves semi-transitivity, so the first edge is
/// only tried forwards. Running out of `budget` expansions yields
/// [`Verdict::Unknown`].
pub fn has_semi_transitive_orientation(g: &Graph, budget: u64) -> OrientationSearch {
    let n = g.vertex_count();
    if n > MAX_ORIENTATION_VERTICES {
        return OrientationSearch {
            verdict: Verdict::Unknown,
            orientation: None,
            stats: SearchStats::default(),
            note: Some(format!(
                "orientation search supports at most {MAX_ORIENTATION_VERTICES} vertices, graph has {n}"
            )),
        };
    }
    let mut search = Search::new(g, budget);
    let flow = search.run(0);
    let mut stats = search.stats;
    match flow {
        Flow::Found => {
            let forward = search
                .assigned
                .iter()
                .map(|d| d.expect("complete assignment"))
                .collect();
            let orientation = Orientation::new(g.clone(), forward).expect("one direction per edge");
            OrientationSearch {
                verdict: Verdict::Representable,
                orientation: Some(orientation),
                stats,
                note: None,
            }
        }
        Flow::Exhausted => {
            stats.unexplored = 0;
            OrientationSearch {
                verdict: Verdict::NonRepresentable,
                orientation: None,
                stats,
                note: None,
            }
        }
        Flow::OutOfBudget => OrientationSearch {
            verdict: Verdict::Unknown,
            orientation: None,
            stats,
            note: Some(format!("orientation budget of {budget} expansions exhausted")),
        },
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    Found,
    Exhausted,
    OutOfBudget,
}

fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

struct Search {
    adj: Vec<u128>,
    /// `(edge id in the base graph's edge order, u, v)` in search order.
    order: Vec<(usize, usize, usize)>,
    out: Vec<u128>,
    inn: Vec<u128>,
    assigned: Vec<Option<bool>>,
    stats: SearchStats,
    budget: u64,
}

impl Search {
    fn new(g: &Graph, budget: u64) -> Self {
        let n = g.vertex_count();
        let adj = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | (1 << w)))
            .collect();
        let mut order: Vec<(usize, usize, usize)> = g.edges().enumerate().map(|(i, (u, v))| (i, u, v)).collect();
        order.sort_by_key(|&(_, u, v)| (core::cmp::Reverse(g.degree(u).max(g.degree(v))), u, v));
        Search {
            adj,
            assigned: vec![None; order.len()],
            order,
            out: vec![0; n],
            inn: vec![0; n],
            stats: SearchStats::default(),
            budget,
        }
    }

    fn run(&mut self, depth: usize) -> Flow {
        if depth == self.order.len() {
            return Flow::Found;
        }
        let (id, u, v) = self.order[depth];
        let choices: &[bool] = if depth == 0 {
            self.stats.symmetry_prunes += 1;
            &[true]
        } else {
            &[true, false]
        };
        for (i, &forward) in choices.iter().enumerate() {
            if self.stats.orientation_expansions >= self.budget {
                self.stats.unexplored += (choices.len() - i) as u64;
                return Flow::OutOfBudget;
            }
            self.stats.orientation_expansions += 1;
            let (t, h) = if forward { (u, v) } else { (v, u) };
            self.out[t] |= 1 << h;
            self.inn[h] |= 1 << t;
            self.assigned[id] = Some(forward);
            if self.consistent_after(t, h) {
                match self.run(depth + 1) {
                    Flow::Found => return Flow::Found,
                    Flow::OutOfBudget => {
                        self.stats.unexplored += (choices.len() - i - 1) as u64;
                        self.unassign(id, t, h);
                        return Flow::OutOfBudget;
                    }
                    Flow::Exhausted => {}
                }
            }
            self.unassign(id, t, h);
        }
        Flow::Exhausted
    }

    fn unassign(&mut self, id: usize, t: usize, h: usize) {
        self.out[t] &= !(1 << h);
        self.inn[h] &= !(1 << t);
        self.assigned[id] = None;
    }

    fn closure(&self, start: usize, step: &[u128]) -> u128 {
        let mut seen: u128 = 1 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let next = bits(frontier).fold(0u128, |m, v| m | step[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Checks the partial orientation after adding arc `t -> h`. Any new
    /// cycle or shortcut must use that arc.
    fn consistent_after(&mut self, t: usize, h: usize) -> bool {
        let below = self.closure(h, &self.out);
        if below & (1 << t) != 0 {
            self.stats.cycle_prunes += 1;
            return false;
        }
        let above = self.closure(t, &self.inn);
        for u in bits(above) {
            for w in bits(self.out[u] & below) {
                if self.has_shortcut_over(u, w) {
                    self.stats.shortcut_prunes += 1;
                    return false;
                }
            }
        }
        true
    }

    /// Whether some directed path from `u` to `w` of length >= 2 has a
    /// non-adjacent pair, given the arc `u -> w`.
    fn has_shortcut_over(&self, u: usize, w: usize) -> bool {
        let reaches_w = self.closure(w, &self.inn);
        self.extend_path(1 << u, u, u, w, reaches_w)
    }

    fn extend_path(&self, path: u128, last: usize, u: usize, w: usize, reaches_w: u128) -> bool {
        for x in bits(self.out[last] & reaches_w) {
            if x == w {
                if last != u && self.adj[w] & path != path {
                    return true;
                }
                continue;
            }
            if self.adj[x] & path != path || self.extend_path(path | (1 << x), x, u, w, reaches_w) {
                return true;
            }
        }
        false
    }
}
