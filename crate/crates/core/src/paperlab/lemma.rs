use alloc::format;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::{Artifact, CheckReport, CheckStatus, LabConfig, SuiteReport, PETERSEN_WORD};
use crate::decide::{enumerate_k_uniform_representants, find_k_uniform_representant, WordSearchOutcome};
use crate::families::{cycle, petersen};
use crate::words::{alternating_graph, is_representant, occurs_as_factor, uniformity, Letter, Word};
use crate::{Error, Result};

/// For each `k`, enumerates every `k`-uniform representant of `C_{n+1}`
/// starting with letter 0 and counts those containing the factor `0 1 ... n`,
/// both as a plain factor and cyclically. Both counts must be zero.
pub fn verify_cycle_lemma(n: usize, ks: &[usize], cfg: &LabConfig) -> Result<SuiteReport> {
    if n < 3 {
        return Err(Error::invalid(format!("cycle lemma needs n >= 3, got {n}")));
    }
    if ks.contains(&0) {
        return Err(Error::invalid("uniformity must be at least 1"));
    }
    let g = cycle(n + 1)?;
    let factor: Vec<Letter> = (0..=n as Letter).collect();
    let factor_word = Word::new(factor.clone());
    let mut report = SuiteReport::new("cycle-lemma", &["cycle", "word-search"]);

    for &k in ks {
        let name = format!("no-factor-in-{k}-uniform-representants-of-c{}", n + 1);
        let mut total = 0u64;
        let mut linear: Option<Vec<Letter>> = None;
        let mut cyclic: Option<Vec<Letter>> = None;
        let result = enumerate_k_uniform_representants(&g, k, cfg.budget.word, |w| {
            total += 1;
            if linear.is_none() && contains(w, &factor) {
                linear = Some(w.to_vec());
            }
            if cyclic.is_none() && contains_cyclic(w, &factor) {
                cyclic = Some(w.to_vec());
            }
            ControlFlow::Continue(())
        })?;
        let expansions = result.stats.expansions();
        let check = match (result.outcome, linear, cyclic) {
            (WordSearchOutcome::BudgetExceeded, _, _) => CheckReport::new(
                name,
                CheckStatus::SkippedBudget,
                format!("word budget exhausted after {total} representants"),
            ),
            (_, Some(w), _) => CheckReport::new(name, CheckStatus::Fail, "representant contains the factor")
                .with_artifact(Artifact::Word(Word::new(w))),
            (_, None, Some(w)) => {
                CheckReport::new(name, CheckStatus::Fail, "representant contains the factor cyclically")
                    .with_artifact(Artifact::Word(Word::new(w)))
            }
            (_, None, None) => CheckReport::new(
                name,
                CheckStatus::Pass,
                format!("{total} representants enumerated, none contains the factor linearly or cyclically"),
            ),
        };
        report.push(check.with_expansions(expansions));
    }

    let control = Word::new(factor.iter().chain(&factor).copied().collect());
    let ok = occurs_as_factor(&control, &factor_word) && !is_representant(&control, &g);
    let detail = format!(
        "factor occurs; alternating graph has {} edges",
        alternating_graph(&control).edge_count()
    );
    let check = CheckReport::pass_if("sanity-control", ok, detail);
    report.push(if ok {
        check
    } else {
        check.with_artifact(Artifact::Word(control))
    });
    Ok(report)
}

fn contains(w: &[Letter], f: &[Letter]) -> bool {
    f.is_empty() || w.windows(f.len()).any(|win| win == f)
}

fn contains_cyclic(w: &[Letter], f: &[Letter]) -> bool {
    if w.is_empty() || f.len() > w.len() {
        return contains(w, f);
    }
    (0..w.len()).any(|i| f.iter().enumerate().all(|(j, &l)| w[(i + j) % w.len()] == l))
}

/// The Petersen graph has no 2-uniform representant; the published
/// 3-uniform word represents it and word search finds one too.
pub fn verify_petersen_2uniform(cfg: &LabConfig) -> SuiteReport {
    let g = petersen();
    let mut report = SuiteReport::new("petersen-2uniform", &["petersen", "word-search"]);

    let check = match find_k_uniform_representant(&g, 2, cfg.budget.word) {
        Ok(r) => {
            let e = r.stats.expansions();
            match r.outcome {
                WordSearchOutcome::Exhausted => CheckReport::new(
                    "no-2-uniform-representant",
                    CheckStatus::Pass,
                    "2-uniform search exhausted",
                ),
                WordSearchOutcome::BudgetExceeded => CheckReport::new(
                    "no-2-uniform-representant",
                    CheckStatus::SkippedBudget,
                    "word budget exhausted",
                ),
                WordSearchOutcome::Found(w) => CheckReport::new(
                    "no-2-uniform-representant",
                    CheckStatus::Fail,
                    "found a 2-uniform representant",
                )
                .with_artifact(Artifact::Word(w)),
            }
            .with_expansions(e)
        }
        Err(e) => CheckReport::new("no-2-uniform-representant", CheckStatus::Fail, format!("{e}")),
    };
    report.push(check);

    let check = match find_k_uniform_representant(&g, 3, cfg.budget.word) {
        Ok(r) => {
            let e = r.stats.expansions();
            match r.outcome {
                WordSearchOutcome::Found(w) => {
                    let ok = is_representant(&w, &g) && uniformity(&w) == Some(3);
                    CheckReport::pass_if(
                        "3-uniform-representant-found",
                        ok,
                        "3-uniform representant found and re-checked",
                    )
                    .with_artifact(Artifact::Word(w))
                }
                WordSearchOutcome::BudgetExceeded => CheckReport::new(
                    "3-uniform-representant-found",
                    CheckStatus::SkippedBudget,
                    "word budget exhausted",
                ),
                WordSearchOutcome::Exhausted => CheckReport::new(
                    "3-uniform-representant-found",
                    CheckStatus::Fail,
                    "3-uniform search exhausted",
                ),
            }
            .with_expansions(e)
        }
        Err(e) => CheckReport::new("3-uniform-representant-found", CheckStatus::Fail, format!("{e}")),
    };
    report.push(check);

    let w = Word::from_digits(PETERSEN_WORD).expect("digit word");
    let ok = is_representant(&w, &g);
    let check = CheckReport::pass_if("published-word-represents-petersen", ok, "alternating graph matches");
    report.push(if ok {
        check
    } else {
        check.with_artifact(Artifact::Word(w))
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_factor() {
        assert!(contains_cyclic(&[2, 3, 1, 0, 1], &[0, 1, 2, 3]));
        assert!(!contains(&[2, 3, 1, 0, 1], &[0, 1, 2, 3]));
        assert!(!contains_cyclic(&[0, 1, 3, 2], &[0, 1, 2]));
    }

    #[test]
    fn lemma_small() {
        let r = verify_cycle_lemma(3, &[1, 2], &LabConfig::default()).unwrap();
        // C4 has no 1-uniform representant, so the first check is vacuous.
        assert_eq!(r.checks[0].status, CheckStatus::Pass);
        assert!(r.checks[0].detail.starts_with("0 representants"));
        assert_eq!(r.checks[1].status, CheckStatus::Pass);
        assert_eq!(r.check("sanity-control").unwrap().status, CheckStatus::Pass);
        assert!(verify_cycle_lemma(2, &[2], &LabConfig::default()).is_err());
        assert!(verify_cycle_lemma(3, &[0], &LabConfig::default()).is_err());
    }
}
