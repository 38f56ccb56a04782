//! Human-readable and JSON renderings of certificates and suite reports.
//! Field order is fixed in both.

use std::fmt::Write as _;

use serde::Serialize;
use wordrep_core::decide::{Certificate, SearchStats, Strategy};
use wordrep_core::paperlab::{Artifact, CheckStatus, SuiteReport};
use wordrep_core::words::uniformity;

use crate::wordtext::format_word_tokens;

#[derive(Serialize)]
struct CertificateDoc<'a> {
    verdict: &'static str,
    strategy: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_max: Option<usize>,
    witness: Option<Vec<String>>,
    uniformity: Option<usize>,
    orientation: Option<Vec<(usize, usize)>>,
    nonconstructive: bool,
    stats: StatsDoc,
    budget: BudgetDoc,
    note: Option<&'a str>,
}

#[derive(Serialize)]
struct StatsDoc {
    orientation_expansions: u64,
    word_expansions: u64,
    cycle_prunes: u64,
    shortcut_prunes: u64,
    alternation_prunes: u64,
    symmetry_prunes: u64,
    unexplored: u64,
}

impl From<&SearchStats> for StatsDoc {
    fn from(s: &SearchStats) -> Self {
        StatsDoc {
            orientation_expansions: s.orientation_expansions,
            word_expansions: s.word_expansions,
            cycle_prunes: s.cycle_prunes,
            shortcut_prunes: s.shortcut_prunes,
            alternation_prunes: s.alternation_prunes,
            symmetry_prunes: s.symmetry_prunes,
            unexplored: s.unexplored,
        }
    }
}

#[derive(Serialize)]
struct BudgetDoc {
    orientation: u64,
    word: u64,
}

fn certificate_doc(c: &Certificate) -> CertificateDoc<'_> {
    CertificateDoc {
        verdict: c.verdict.as_str(),
        strategy: c.strategy.name(),
        k_max: match c.strategy {
            Strategy::WordSearch { k_max } => Some(k_max),
            _ => None,
        },
        witness: c
            .witness
            .as_ref()
            .map(|w| w.letters().iter().map(|&l| w.name(l).into_owned()).collect()),
        uniformity: c.witness.as_ref().and_then(uniformity),
        orientation: c.orientation.as_ref().map(|o| o.arcs()),
        nonconstructive: c.is_nonconstructive(),
        stats: (&c.stats).into(),
        budget: BudgetDoc {
            orientation: c.budget.orientation,
            word: c.budget.word,
        },
        note: c.note.as_deref(),
    }
}

pub fn certificate_json(c: &Certificate) -> String {
    serde_json::to_string_pretty(&certificate_doc(c)).expect("plain data") + "\n"
}

pub fn certificate_text(c: &Certificate) -> String {
    let d = certificate_doc(c);
    let mut s = String::new();
    writeln!(s, "verdict: {}", d.verdict).unwrap();
    writeln!(s, "strategy: {}", d.strategy).unwrap();
    if let Some(k) = d.k_max {
        writeln!(s, "k-max: {k}").unwrap();
    }
    match &c.witness {
        Some(w) => writeln!(s, "witness: {}", format_word_tokens(w)).unwrap(),
        None => writeln!(s, "witness: none").unwrap(),
    }
    if let Some(m) = d.uniformity {
        writeln!(s, "uniformity: {m}").unwrap();
    }
    match &d.orientation {
        Some(arcs) => writeln!(s, "orientation: {}", arcs_text(arcs)).unwrap(),
        None => writeln!(s, "orientation: none").unwrap(),
    }
    writeln!(s, "nonconstructive: {}", d.nonconstructive).unwrap();
    let st = &d.stats;
    writeln!(s, "orientation-expansions: {}", st.orientation_expansions).unwrap();
    writeln!(s, "word-expansions: {}", st.word_expansions).unwrap();
    writeln!(s, "cycle-prunes: {}", st.cycle_prunes).unwrap();
    writeln!(s, "shortcut-prunes: {}", st.shortcut_prunes).unwrap();
    writeln!(s, "alternation-prunes: {}", st.alternation_prunes).unwrap();
    writeln!(s, "symmetry-prunes: {}", st.symmetry_prunes).unwrap();
    writeln!(s, "unexplored: {}", st.unexplored).unwrap();
    writeln!(s, "budget-orientation: {}", d.budget.orientation).unwrap();
    writeln!(s, "budget-word: {}", d.budget.word).unwrap();
    if let Some(note) = d.note {
        writeln!(s, "note: {note}").unwrap();
    }
    s
}

fn arcs_text(arcs: &[(usize, usize)]) -> String {
    arcs.iter()
        .map(|(u, v)| format!("{u}>{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `fail` if any check failed, else `skipped-budget` if any was skipped.
pub fn suite_status(r: &SuiteReport) -> &'static str {
    if r.has_failures() {
        "fail"
    } else if r.has_skips() {
        "skipped-budget"
    } else {
        "pass"
    }
}

#[derive(Serialize)]
struct SuiteDoc<'a> {
    suite: &'a str,
    status: &'static str,
    expansions: u64,
    touches: &'a [&'static str],
    checks: Vec<CheckDoc<'a>>,
}

#[derive(Serialize)]
struct CheckDoc<'a> {
    name: &'a str,
    status: &'static str,
    expansions: u64,
    detail: &'a str,
    artifacts: Vec<ArtifactDoc>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum ArtifactDoc {
    Word {
        tokens: Vec<String>,
    },
    Arcs {
        arcs: Vec<(usize, usize)>,
    },
    LabelMap {
        image: Vec<usize>,
    },
    Graph {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Text {
        text: String,
    },
}

fn artifact_doc(a: &Artifact) -> ArtifactDoc {
    match a {
        Artifact::Word(w) => ArtifactDoc::Word {
            tokens: w.letters().iter().map(|&l| w.name(l).into_owned()).collect(),
        },
        Artifact::Arcs(arcs) => ArtifactDoc::Arcs { arcs: arcs.clone() },
        Artifact::LabelMap(m) => ArtifactDoc::LabelMap {
            image: m.as_slice().to_vec(),
        },
        Artifact::Graph(g) => ArtifactDoc::Graph {
            vertices: g.vertex_count(),
            edges: g.edges().collect(),
        },
        Artifact::Text(t) => ArtifactDoc::Text { text: t.clone() },
    }
}

fn suite_doc(r: &SuiteReport) -> SuiteDoc<'_> {
    SuiteDoc {
        suite: &r.name,
        status: suite_status(r),
        expansions: r.expansions(),
        touches: &r.touches,
        checks: r
            .checks
            .iter()
            .map(|c| CheckDoc {
                name: &c.name,
                status: c.status.as_str(),
                expansions: c.expansions,
                detail: &c.detail,
                artifacts: c.artifacts.iter().map(artifact_doc).collect(),
            })
            .collect(),
    }
}

pub fn suites_json(reports: &[SuiteReport]) -> String {
    let docs: Vec<_> = reports.iter().map(suite_doc).collect();
    serde_json::to_string_pretty(&docs).expect("plain data") + "\n"
}

/// One header line per suite, one line per check; artifacts are listed
/// under checks that did not pass.
pub fn suite_text(r: &SuiteReport) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "suite {}: {} ({} checks, {} expansions)",
        r.name,
        suite_status(r),
        r.checks.len(),
        r.expansions()
    )
    .unwrap();
    for c in &r.checks {
        writeln!(s, "  {:<14} {}: {}", c.status.as_str(), c.name, c.detail).unwrap();
        if c.status != CheckStatus::Pass {
            for a in &c.artifacts {
                writeln!(s, "      {}", artifact_text(a)).unwrap();
            }
        }
    }
    s
}

fn artifact_text(a: &Artifact) -> String {
    match a {
        Artifact::Word(w) => format!("word: {}", format_word_tokens(w)),
        Artifact::Arcs(arcs) => format!("arcs: {}", arcs_text(arcs)),
        Artifact::LabelMap(m) => {
            let pairs: Vec<String> = m.pairs().map(|(u, v)| format!("{u}->{v}")).collect();
            format!("map: {}", pairs.join(" "))
        }
        Artifact::Graph(g) => {
            let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
            format!("graph: n={} edges={}", g.vertex_count(), edges.join(","))
        }
        Artifact::Text(t) => format!("text: {t}"),
    }
}
