use alloc::format;
use alloc::string::ToString;

use super::{edge_summary, Artifact, CheckReport, CheckStatus, LabConfig, SuiteReport, FIGURE1_WORD, PETERSEN_WORD};
use crate::decide::{decide_representable, Strategy, Verdict};
use crate::families::{figure1_left, minimal_nonrep, petersen};
use crate::words::{check_representant, uniformity, RepresentantCheck, Word};
use crate::Graph;

/// The two published representants and their uniformities, plus word
/// search and the combined decider on the small example graph.
pub fn verify_figure1(cfg: &LabConfig) -> SuiteReport {
    let left = Word::from_digits(FIGURE1_WORD).expect("digit word");
    let pw = Word::from_digits(PETERSEN_WORD).expect("digit word");
    verify_figure1_with(&left, &figure1_left(), &pw, &petersen(), cfg)
}

/// [`verify_figure1`] on caller-supplied words and graphs, so mutated
/// inputs can be shown to fail.
pub fn verify_figure1_with(
    left_word: &Word,
    left: &Graph,
    petersen_word: &Word,
    petersen_graph: &Graph,
    cfg: &LabConfig,
) -> SuiteReport {
    let mut report = SuiteReport::new("figure1", &["petersen", "word-search", "auto"]);
    report.push(representant_check("left-word-represents-graph", left_word, left));
    report.push(uniformity_check("left-word-2-uniform", left_word, 2));
    report.push(representant_check(
        "petersen-word-represents-petersen",
        petersen_word,
        petersen_graph,
    ));
    report.push(uniformity_check("petersen-word-3-uniform", petersen_word, 3));

    let cert = decide_representable(left, Strategy::WordSearch { k_max: 2 }, cfg.budget);
    let mut check = match (&cert.verdict, &cert.witness) {
        (Verdict::Representable, Some(w)) => {
            let ok = check_representant(w, left).is_ok() && uniformity(w).is_some_and(|m| m <= 2);
            CheckReport::pass_if(
                "left-graph-word-search",
                ok,
                "word search finds a representant of uniformity <= 2",
            )
            .with_artifact(Artifact::Word(w.clone()))
        }
        (Verdict::Unknown, _) if cert.stats.unexplored > 0 => CheckReport::new(
            "left-graph-word-search",
            CheckStatus::SkippedBudget,
            "word budget exhausted",
        ),
        _ => CheckReport::new(
            "left-graph-word-search",
            CheckStatus::Fail,
            "no representant of uniformity <= 2 found",
        ),
    };
    check.expansions = cert.stats.expansions();
    report.push(check);

    let cert = decide_representable(left, Strategy::Auto, cfg.budget);
    let check = match cert.verdict {
        Verdict::Representable => CheckReport::pass_if(
            "left-graph-auto",
            cert.witness.is_some() && cert.verify(left),
            "auto strategy decides representable with a word witness",
        ),
        Verdict::Unknown => CheckReport::new("left-graph-auto", CheckStatus::SkippedBudget, "budget exhausted"),
        Verdict::NonRepresentable => {
            CheckReport::new("left-graph-auto", CheckStatus::Fail, "decided non-representable")
        }
    };
    report.push(check.with_expansions(cert.stats.expansions()));
    report
}

fn representant_check(name: &str, w: &Word, g: &Graph) -> CheckReport {
    match check_representant(w, g) {
        RepresentantCheck::Represents => CheckReport::new(name, CheckStatus::Pass, "alternating graph matches"),
        mismatch => CheckReport::new(name, CheckStatus::Fail, format!("{mismatch:?}"))
            .with_artifact(Artifact::Word(w.clone()))
            .with_artifact(Artifact::Graph(g.clone())),
    }
}

fn uniformity_check(name: &str, w: &Word, expect: usize) -> CheckReport {
    let got = uniformity(w);
    let check = CheckReport::pass_if(
        name,
        got == Some(expect),
        format!(
            "uniformity {}, expected {expect}",
            got.map_or("none".into(), |m| m.to_string())
        ),
    );
    if got == Some(expect) {
        check
    } else {
        check.with_artifact(Artifact::Word(w.clone()))
    }
}

/// All four minimal non-representable graphs are refuted by orientation
/// search.
pub fn verify_figure2(cfg: &LabConfig) -> SuiteReport {
    let mut report = SuiteReport::new("figure2", &["minimal-nonrep", "wheel", "orientation"]);
    for i in 1..=4 {
        let g = minimal_nonrep(i).expect("index in range");
        report.push(nonrep_check(&format!("minimal-nonrep-{i}"), &g, cfg));
    }
    report
}

/// Asserts an orientation-search refutation of `g`.
pub(crate) fn nonrep_check(name: &str, g: &Graph, cfg: &LabConfig) -> CheckReport {
    let cert = decide_representable(g, Strategy::Orientation, cfg.budget);
    let check = match cert.verdict {
        Verdict::NonRepresentable => CheckReport::pass_if(
            name,
            cert.stats.unexplored == 0,
            format!(
                "non-representable; {} orientation expansions, search exhausted",
                cert.stats.orientation_expansions
            ),
        ),
        Verdict::Unknown => CheckReport::new(name, CheckStatus::SkippedBudget, "orientation budget exhausted"),
        Verdict::Representable => {
            let arcs = cert.orientation.as_ref().map(|o| o.arcs()).unwrap_or_default();
            CheckReport::new(
                name,
                CheckStatus::Fail,
                format!("found a semi-transitive orientation of {}", edge_summary(g)),
            )
            .with_artifact(Artifact::Graph(g.clone()))
            .with_artifact(Artifact::Arcs(arcs))
        }
    };
    check.with_expansions(cert.stats.expansions())
}

/// Records the decider's verdict on `g` without asserting it; fails only
/// if the certificate does not re-verify.
pub(crate) fn boundary_check(name: &str, g: &Graph, cfg: &LabConfig) -> CheckReport {
    let cert = decide_representable(g, Strategy::Orientation, cfg.budget);
    let mut check = match cert.verdict {
        Verdict::Unknown => CheckReport::new(name, CheckStatus::SkippedBudget, "orientation budget exhausted"),
        v => CheckReport::pass_if(name, cert.verify(g), format!("boundary datum: {}", v.as_str())),
    };
    if let Some(o) = &cert.orientation {
        check = check.with_artifact(Artifact::Arcs(o.arcs()));
    }
    check.with_expansions(cert.stats.expansions())
}
