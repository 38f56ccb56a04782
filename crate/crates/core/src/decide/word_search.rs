//! Search for k-uniform representants.
//!
//! Words are built left to right over the vertex ids of the graph, smallest
//! letter first, so the first complete word is the lexicographically least
//! representant. Every uniform representant has a cyclic shift starting with
//! any chosen letter (cyclic shifts keep the alternating graph), so the first
//! letter is pinned to vertex 0.
//!
//! For each pair of letters the search tracks which of the two was placed
//! last and whether the pair has already repeated (`xx` after erasing the
//! rest). An adjacent pair may never repeat. A non-adjacent pair must repeat
//! eventually, so a prefix is cut as soon as the remaining occurrences can
//! no longer produce a repeat.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::{vertex_word, SearchStats};
use crate::words::{is_representant, Letter, Word};
use crate::{Error, Graph, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordSearchOutcome {
    /// The search stopped at this representant.
    Found(Word),
    /// Every candidate was examined.
    Exhausted,
    BudgetExceeded,
}

#[derive(Clone, Debug)]
pub struct WordSearchResult {
    pub outcome: WordSearchOutcome,
    pub stats: SearchStats,
}

/// The lexicographically least `k`-uniform representant of `g` starting with
/// vertex 0, if one exists. Letters are vertex ids, named by the graph's
/// labels.
pub fn find_k_uniform_representant(g: &Graph, k: usize, budget: u64) -> Result<WordSearchResult> {
    enumerate_k_uniform_representants(g, k, budget, |_| ControlFlow::Break(()))
}

/// Visits every `k`-uniform representant of `g` that starts with vertex 0,
/// in lexicographic order, until `visit` breaks. The outcome is `Found` with
/// the word that stopped the walk, `Exhausted` if it ran to completion.
pub fn enumerate_k_uniform_representants<F>(g: &Graph, k: usize, budget: u64, mut visit: F) -> Result<WordSearchResult>
where
    F: FnMut(&[Letter]) -> ControlFlow<()>,
{
    if k == 0 {
        return Err(Error::invalid("uniformity must be at least 1"));
    }
    if g.vertex_count() == 0 {
        return Err(Error::invalid("word search needs at least one vertex"));
    }
    if g.vertex_count() > Letter::MAX as usize {
        return Err(Error::invalid(format!(
            "{} vertices exceed the letter range",
            g.vertex_count()
        )));
    }
    let mut engine = Engine::new(g, k as u32, budget);
    let flow = engine.dfs(&mut visit);
    let outcome = match flow {
        Flow::Stopped => {
            let word = vertex_word(g, engine.word.clone());
            debug_assert!(is_representant(&word, g));
            WordSearchOutcome::Found(word)
        }
        Flow::Continue => WordSearchOutcome::Exhausted,
        Flow::OutOfBudget => WordSearchOutcome::BudgetExceeded,
    };
    Ok(WordSearchResult {
        outcome,
        stats: engine.stats,
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    Stopped,
    OutOfBudget,
}

const NONE: u32 = u32::MAX;

struct Engine {
    n: usize,
    k: u32,
    adj: Vec<bool>,
    count: Vec<u32>,
    /// Per unordered pair `min * n + max`: the letter of the pair placed
    /// last, and whether the pair has repeated.
    last: Vec<u32>,
    repeated: Vec<bool>,
    word: Vec<Letter>,
    undo: Vec<(usize, u32, bool)>,
    marks: Vec<usize>,
    stats: SearchStats,
    budget: u64,
}

impl Engine {
    fn new(g: &Graph, k: u32, budget: u64) -> Self {
        let n = g.vertex_count();
        let mut adj = vec![false; n * n];
        for (u, v) in g.edges() {
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Engine {
            n,
            k,
            adj,
            count: vec![0; n],
            last: vec![NONE; n * n],
            repeated: vec![false; n * n],
            word: Vec::with_capacity(n * k as usize),
            undo: Vec::new(),
            marks: Vec::new(),
            stats: SearchStats::default(),
            budget,
        }
    }

    fn pair(&self, x: usize, y: usize) -> usize {
        x.min(y) * self.n + x.max(y)
    }

    /// Appends `x` if no pair involving it becomes infeasible.
    fn place(&mut self, x: usize) -> bool {
        let mark = self.undo.len();
        let left_x = self.k - self.count[x] - 1;
        for y in (0..self.n).filter(|&y| y != x) {
            let p = self.pair(x, y);
            let before = self.last[p];
            let rep = self.repeated[p] || before == x as u32;
            self.undo.push((p, before, self.repeated[p]));
            self.last[p] = x as u32;
            self.repeated[p] = rep;
            let ok = if self.adj[x * self.n + y] {
                !rep
            } else {
                // With `x` placed last, another `x` or two more `y` repeat.
                rep || left_x >= 1 || self.k - self.count[y] >= 2
            };
            if !ok {
                self.rollback(mark);
                self.stats.alternation_prunes += 1;
                return false;
            }
        }
        self.count[x] += 1;
        self.word.push(x as Letter);
        self.marks.push(mark);
        true
    }

    fn unplace(&mut self) {
        let x = self.word.pop().expect("a letter was placed") as usize;
        self.count[x] -= 1;
        let mark = self.marks.pop().expect("mark per placed letter");
        self.rollback(mark);
    }

    fn rollback(&mut self, mark: usize) {
        while self.undo.len() > mark {
            let (p, last, rep) = self.undo.pop().expect("undo above mark");
            self.last[p] = last;
            self.repeated[p] = rep;
        }
    }

    fn dfs<F>(&mut self, visit: &mut F) -> Flow
    where
        F: FnMut(&[Letter]) -> ControlFlow<()>,
    {
        if self.word.len() == self.n * self.k as usize {
            return match visit(&self.word) {
                ControlFlow::Break(()) => Flow::Stopped,
                ControlFlow::Continue(()) => Flow::Continue,
            };
        }
        let candidates: Vec<usize> = if self.word.is_empty() {
            self.stats.symmetry_prunes += self.n as u64 - 1;
            vec![0]
        } else {
            (0..self.n).filter(|&x| self.count[x] < self.k).collect()
        };
        for (i, &x) in candidates.iter().enumerate() {
            if self.stats.word_expansions >= self.budget {
                self.stats.unexplored += (candidates.len() - i) as u64;
                return Flow::OutOfBudget;
            }
            self.stats.word_expansions += 1;
            if !self.place(x) {
                continue;
            }
            let flow = self.dfs(visit);
            if flow == Flow::Stopped {
                return flow;
            }
            self.unplace();
            if flow == Flow::OutOfBudget {
                self.stats.unexplored += (candidates.len() - i - 1) as u64;
                return flow;
            }
        }
        Flow::Continue
    }
}
