//! Reproducible experiment suites.
//!
//! Each suite runs a fixed set of checks against the deciders and search
//! routines and returns a [`SuiteReport`]. Suites are deterministic given a
//! [`LabConfig`]: budgets are expansion counts and randomised checks draw
//! from a seeded ChaCha stream.

mod figures;
mod iteration;
mod lemma;
mod props;
mod theorems;

use alloc::string::String;
use alloc::vec::Vec;

pub use figures::{verify_figure1, verify_figure1_with, verify_figure2};
pub use iteration::{connected_graphs, verify_iteration_theorem};
pub use lemma::{verify_cycle_lemma, verify_petersen_2uniform};
pub use props::{verify_propositions, verify_propositions_with, PropositionHooks};
pub use theorems::{verify_clique_theorem, verify_wheel_theorem};

use crate::decide::Budget;
use crate::line::DEFAULT_VERTEX_BUDGET;
use crate::search::DEFAULT_EMBED_BUDGET;
use crate::{Graph, LabelMap, Result, Word};

/// The 3-uniform Petersen word, letters numbered as the Petersen generator.
pub const PETERSEN_WORD: &str = "027618596382430172965749083451";
/// The 2-uniform word of the four-vertex example graph.
pub const FIGURE1_WORD: &str = "12312434";

/// Budgets and randomness for a suite run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabConfig {
    pub budget: Budget,
    pub embed_budget: u64,
    pub vertex_budget: usize,
    pub seed: u64,
    pub trials: usize,
}

impl Default for LabConfig {
    fn default() -> Self {
        LabConfig {
            budget: Budget::default(),
            embed_budget: DEFAULT_EMBED_BUDGET,
            vertex_budget: DEFAULT_VERTEX_BUDGET,
            seed: 1,
            trials: 10_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    SkippedBudget,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::SkippedBudget => "skipped-budget",
        }
    }
}

/// Objects a check produced, kept so they can be re-verified on their own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Artifact {
    Word(Word),
    Arcs(Vec<(usize, usize)>),
    LabelMap(LabelMap),
    Graph(Graph),
    /// A failing input or other evidence that has no richer type.
    Text(String),
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub status: CheckStatus,
    pub expansions: u64,
    pub detail: String,
    pub artifacts: Vec<Artifact>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, status: CheckStatus, detail: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            status,
            expansions: 0,
            detail: detail.into(),
            artifacts: Vec::new(),
        }
    }

    pub fn pass_if(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        CheckReport::new(name, status, detail)
    }

    pub fn with_expansions(mut self, expansions: u64) -> Self {
        self.expansions = expansions;
        self
    }

    pub fn with_artifact(mut self, artifact: Artifact) -> Self {
        self.artifacts.push(artifact);
        self
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<CheckReport>,
    /// Generators and decision strategies the suite exercises.
    pub touches: Vec<&'static str>,
}

impl SuiteReport {
    pub(crate) fn new(name: &str, touches: &[&'static str]) -> Self {
        SuiteReport {
            name: name.into(),
            checks: Vec::new(),
            touches: touches.to_vec(),
        }
    }

    pub(crate) fn push(&mut self, check: CheckReport) {
        self.checks.push(check);
    }

    /// True iff every check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    pub fn has_skips(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::SkippedBudget)
    }

    pub fn expansions(&self) -> u64 {
        self.checks.iter().map(|c| c.expansions).sum()
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Every generator and decision strategy; the default suites must touch
/// each at least once.
pub const COVERAGE_ITEMS: [&str; 12] = [
    "cycle",
    "path",
    "clique",
    "star",
    "claw",
    "wheel",
    "petersen",
    "minimal-nonrep",
    "fig6",
    "orientation",
    "word-search",
    "auto",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Figure1,
    Figure2,
    Wheels,
    Cliques,
    Iteration,
    CycleLemma,
    Propositions,
    /// Opt-in: not part of [`Suite::DEFAULT`].
    Petersen2Uniform,
}

impl Suite {
    pub const DEFAULT: [Suite; 7] = [
        Suite::Figure1,
        Suite::Figure2,
        Suite::Wheels,
        Suite::Cliques,
        Suite::Iteration,
        Suite::CycleLemma,
        Suite::Propositions,
    ];

    pub const ALL: [Suite; 8] = [
        Suite::Figure1,
        Suite::Figure2,
        Suite::Wheels,
        Suite::Cliques,
        Suite::Iteration,
        Suite::CycleLemma,
        Suite::Propositions,
        Suite::Petersen2Uniform,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Figure1 => "figure1",
            Suite::Figure2 => "figure2",
            Suite::Wheels => "wheels",
            Suite::Cliques => "cliques",
            Suite::Iteration => "iteration",
            Suite::CycleLemma => "cycle-lemma",
            Suite::Propositions => "propositions",
            Suite::Petersen2Uniform => "petersen-2uniform",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Runs the suite with its default parameters.
    pub fn run(self, cfg: &LabConfig) -> Result<SuiteReport> {
        match self {
            Suite::Figure1 => Ok(verify_figure1(cfg)),
            Suite::Figure2 => Ok(verify_figure2(cfg)),
            Suite::Wheels => verify_wheel_theorem(&[3, 4, 5], cfg),
            Suite::Cliques => Ok(verify_clique_theorem(cfg)),
            Suite::Iteration => Ok(verify_iteration_theorem(cfg)),
            Suite::CycleLemma => verify_cycle_lemma(3, &[2, 3], cfg),
            Suite::Propositions => verify_propositions(cfg.trials, cfg.seed, cfg),
            Suite::Petersen2Uniform => Ok(verify_petersen_2uniform(cfg)),
        }
    }
}

/// Formats a graph's edge list for check details and counterexamples.
pub(crate) fn edge_summary(g: &Graph) -> String {
    let mut s = alloc::format!("n={} edges=", g.vertex_count());
    for (i, (u, v)) in g.edges().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&alloc::format!("{u}-{v}"));
    }
    s
}
