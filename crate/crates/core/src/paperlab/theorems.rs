use alloc::format;

use super::figures::{boundary_check, nonrep_check};
use super::{Artifact, CheckReport, CheckStatus, LabConfig, SuiteReport};
use crate::families::{clique, wheel};
use crate::line::line_graph;
use crate::search::contains_induced;
use crate::{Error, Result};

/// `L(wheel(n))` is refuted for every `n >= 4`. `n = 3` (where the wheel is
/// `K4`) is reported as a boundary datum without an expected verdict.
pub fn verify_wheel_theorem(n_values: &[usize], cfg: &LabConfig) -> Result<SuiteReport> {
    if let Some(&n) = n_values.iter().find(|&&n| n < 3) {
        return Err(Error::invalid(format!("wheel index must be >= 3, got {n}")));
    }
    let mut report = SuiteReport::new("wheels", &["wheel", "orientation"]);
    for &n in n_values {
        let lg = line_graph(&wheel(n)?);
        if n == 3 {
            report.push(boundary_check("line-graph-of-wheel-3", &lg, cfg));
        } else {
            report.push(nonrep_check(&format!("line-graph-of-wheel-{n}"), &lg, cfg));
        }
    }
    Ok(report)
}

/// `L(K5)` is refuted and `L(K6)` contains an induced `L(K5)`; `L(K4)` is a
/// boundary datum.
pub fn verify_clique_theorem(cfg: &LabConfig) -> SuiteReport {
    let mut report = SuiteReport::new("cliques", &["clique", "orientation"]);
    let l5 = line_graph(&clique(5).expect("n >= 1"));
    report.push(nonrep_check("line-graph-of-k5", &l5, cfg));

    let l6 = line_graph(&clique(6).expect("n >= 1"));
    let name = "line-graph-of-k6-contains-line-graph-of-k5";
    let check = match contains_induced(&l6, &l5, cfg.embed_budget) {
        Ok(Some(map)) => CheckReport::pass_if(
            name,
            map.is_induced_embedding(&l5, &l6),
            "induced copy found and re-checked",
        )
        .with_artifact(Artifact::LabelMap(map)),
        Ok(None) => CheckReport::new(name, CheckStatus::Fail, "no induced copy"),
        Err(e) => CheckReport::new(name, CheckStatus::SkippedBudget, format!("{e}")),
    };
    report.push(check);

    let l4 = line_graph(&clique(4).expect("n >= 1"));
    report.push(boundary_check("line-graph-of-k4", &l4, cfg));
    report
}
