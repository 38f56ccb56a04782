//! Representability deciders.
//!
//! Two procedures are provided. The orientation search is complete: a graph
//! is representable exactly when it has a semi-transitive orientation, so an
//! exhausted search proves non-representability. The uniform word search is
//! constructive but only a semi-decision, since no bound on the required
//! uniformity is known. [`decide_representable`] combines them.

mod orientation;
mod word_search;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;

pub use orientation::{
    has_semi_transitive_orientation, is_acyclic, is_semi_transitive, Orientation, MAX_ORIENTATION_VERTICES,
};
pub use word_search::{
    enumerate_k_uniform_representants, find_k_uniform_representant, WordSearchOutcome, WordSearchResult,
};

use crate::words::{is_representant, Word};
use crate::Graph;

/// Default expansion budget of the orientation search.
pub const DEFAULT_ORIENTATION_BUDGET: u64 = 100_000_000;
/// Default expansion budget of the uniform word search.
pub const DEFAULT_WORD_BUDGET: u64 = 1_000_000_000;
/// Largest uniformity tried by [`Strategy::Auto`] when looking for a witness.
pub const AUTO_MAX_UNIFORMITY: usize = 3;

/// Node-expansion budgets, one per search engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub orientation: u64,
    pub word: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            orientation: DEFAULT_ORIENTATION_BUDGET,
            word: DEFAULT_WORD_BUDGET,
        }
    }
}

impl Budget {
    pub fn uniform(expansions: u64) -> Self {
        Budget {
            orientation: expansions,
            word: expansions,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Representable,
    NonRepresentable,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Representable => "representable",
            Verdict::NonRepresentable => "non-representable",
            Verdict::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Exhaustive semi-transitive orientation search.
    Orientation,
    /// Uniform word search for every uniformity up to `k_max`.
    WordSearch { k_max: usize },
    /// Orientation search for the verdict, plus a word witness of
    /// uniformity at most [`AUTO_MAX_UNIFORMITY`] when one can be found.
    Auto,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Orientation => "orientation",
            Strategy::WordSearch { .. } => "word-search",
            Strategy::Auto => "auto",
        }
    }
}

/// Search effort, summed over every engine a decision used.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub orientation_expansions: u64,
    pub word_expansions: u64,
    pub cycle_prunes: u64,
    pub shortcut_prunes: u64,
    pub alternation_prunes: u64,
    /// Branches skipped because a symmetric branch covers them.
    pub symmetry_prunes: u64,
    /// Branches left untried when a budget ran out; zero for any completed
    /// search.
    pub unexplored: u64,
}

impl SearchStats {
    pub fn absorb(&mut self, other: &SearchStats) {
        self.orientation_expansions += other.orientation_expansions;
        self.word_expansions += other.word_expansions;
        self.cycle_prunes += other.cycle_prunes;
        self.shortcut_prunes += other.shortcut_prunes;
        self.alternation_prunes += other.alternation_prunes;
        self.symmetry_prunes += other.symmetry_prunes;
        self.unexplored += other.unexplored;
    }

    pub fn expansions(&self) -> u64 {
        self.orientation_expansions + self.word_expansions
    }
}

/// Evidence for a verdict.
///
/// A representable certificate carries a verified word witness, or failing
/// that a semi-transitive orientation (which is evidence but does not
/// construct a word). A non-representable certificate records an exhausted
/// orientation search.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub verdict: Verdict,
    pub strategy: Strategy,
    pub witness: Option<Word>,
    pub orientation: Option<Orientation>,
    pub stats: SearchStats,
    pub budget: Budget,
    pub note: Option<String>,
}

impl Certificate {
    fn new(strategy: Strategy, budget: Budget) -> Self {
        Certificate {
            verdict: Verdict::Unknown,
            strategy,
            witness: None,
            orientation: None,
            stats: SearchStats::default(),
            budget,
            note: None,
        }
    }

    /// True when the verdict rests on an orientation rather than a word.
    pub fn is_nonconstructive(&self) -> bool {
        self.verdict == Verdict::Representable && self.witness.is_none()
    }

    /// Re-checks the evidence against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self.verdict {
            Verdict::Representable => {
                let word_ok = self.witness.as_ref().map(|w| is_representant(w, g));
                let orient_ok = self
                    .orientation
                    .as_ref()
                    .map(|o| o.base() == g && is_semi_transitive(o));
                match (word_ok, orient_ok) {
                    (None, None) => false,
                    (w, o) => w.unwrap_or(true) && o.unwrap_or(true),
                }
            }
            Verdict::NonRepresentable => self.stats.unexplored == 0 && self.witness.is_none(),
            Verdict::Unknown => true,
        }
    }
}

/// The word whose letters are the vertex ids of `g`, named by its labels.
pub(crate) fn vertex_word(g: &Graph, letters: alloc::vec::Vec<u32>) -> Word {
    let names: BTreeMap<u32, String> = match g.labels() {
        Some(labels) => labels.iter().enumerate().map(|(v, l)| (v as u32, l.clone())).collect(),
        None => BTreeMap::new(),
    };
    Word::new(letters).with_names(names)
}

/// Decides whether `g` is word-representable using `strategy`.
///
/// The empty graph and single vertices are representable by the empty word
/// and a single letter.
pub fn decide_representable(g: &Graph, strategy: Strategy, budget: Budget) -> Certificate {
    let mut cert = Certificate::new(strategy, budget);
    if g.vertex_count() <= 1 {
        cert.verdict = Verdict::Representable;
        cert.witness = Some(vertex_word(g, vec![0; g.vertex_count()]));
        return cert;
    }
    match strategy {
        Strategy::Orientation => {
            let found = has_semi_transitive_orientation(g, budget.orientation);
            cert.verdict = found.verdict;
            cert.orientation = found.orientation;
            cert.stats = found.stats;
            cert.note = found.note;
        }
        Strategy::WordSearch { k_max } => {
            cert.witness = search_words(g, k_max, budget.word, &mut cert.stats);
            if cert.witness.is_some() {
                cert.verdict = Verdict::Representable;
            } else {
                cert.note = Some(alloc::format!(
                    "no representant with uniformity <= {k_max}; word search cannot refute"
                ));
            }
        }
        Strategy::Auto => {
            let found = has_semi_transitive_orientation(g, budget.orientation);
            cert.verdict = found.verdict;
            cert.orientation = found.orientation;
            cert.stats = found.stats;
            cert.note = found.note;
            if cert.verdict != Verdict::NonRepresentable {
                cert.witness = search_words(g, AUTO_MAX_UNIFORMITY, budget.word, &mut cert.stats);
                if cert.witness.is_some() {
                    cert.verdict = Verdict::Representable;
                }
            }
        }
    }
    debug_assert!(cert.verify(g));
    cert
}

/// Tries uniformities `1..=k_max` in order, sharing one word budget.
fn search_words(g: &Graph, k_max: usize, budget: u64, stats: &mut SearchStats) -> Option<Word> {
    let mut remaining = budget;
    for k in 1..=k_max {
        let result = match find_k_uniform_representant(g, k, remaining) {
            Ok(r) => r,
            Err(_) => return None,
        };
        stats.absorb(&result.stats);
        remaining = remaining.saturating_sub(result.stats.word_expansions);
        match result.outcome {
            WordSearchOutcome::Found(w) => return Some(w),
            WordSearchOutcome::Exhausted => continue,
            WordSearchOutcome::BudgetExceeded => return None,
        }
    }
    None
}

#[cfg(test)]
mod tests;
