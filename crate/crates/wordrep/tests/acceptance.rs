//! Acceptance criteria. Run with `--nocapture` to see one line per criterion.

use std::time::{Duration, Instant};

use wordrep_core::decide::{
    decide_representable, find_k_uniform_representant, Budget, Strategy, Verdict, WordSearchOutcome,
};
use wordrep_core::families::{clique, figure1_left, minimal_nonrep, petersen, wheel};
use wordrep_core::line::line_graph;
use wordrep_core::paperlab::{
    verify_cycle_lemma, verify_iteration_theorem, verify_propositions, CheckStatus, LabConfig,
};
use wordrep_core::search::{contains_induced, DEFAULT_EMBED_BUDGET};
use wordrep_core::words::{is_representant, uniformity};
use wordrep_core::{Graph, Word};

const SECOND: Duration = Duration::from_secs(1);
const MINUTE: Duration = Duration::from_secs(60);

struct Outcome {
    id: u32,
    name: &'static str,
    ok: bool,
    elapsed: Duration,
    limit: Duration,
    detail: String,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.ok && self.elapsed < self.limit
    }

    fn line(&self) -> String {
        format!(
            "{} criterion {} {}: {:.3}s (limit {}s) {}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.detail
        )
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn nonrep(g: &Graph) -> (bool, Duration, u64) {
    let (cert, dt) = timed(|| decide_representable(g, Strategy::Orientation, Budget::default()));
    let ok = cert.verdict == Verdict::NonRepresentable && cert.stats.unexplored == 0;
    (ok, dt, cert.stats.orientation_expansions)
}

fn criterion_1() -> Vec<Outcome> {
    let (ok, dt) = timed(|| {
        let left = Word::from_digits("12312434").unwrap();
        let pw = Word::from_digits("027618596382430172965749083451").unwrap();
        is_representant(&left, &figure1_left())
            && is_representant(&pw, &petersen())
            && uniformity(&left) == Some(2)
            && uniformity(&pw) == Some(3)
    });
    vec![Outcome {
        id: 1,
        name: "figure 1 words",
        ok,
        elapsed: dt,
        limit: SECOND,
        detail: "exact equality".into(),
    }]
}

fn criterion_2() -> Vec<Outcome> {
    (1..=4)
        .map(|i| {
            let (ok, dt, exp) = nonrep(&minimal_nonrep(i).unwrap());
            Outcome {
                id: 2,
                name: "minimal non-representable graph",
                ok,
                elapsed: dt,
                limit: MINUTE,
                detail: format!("#{i}, {exp} expansions"),
            }
        })
        .collect()
}

fn criterion_3() -> Vec<Outcome> {
    [4, 5]
        .into_iter()
        .map(|n| {
            let (ok, dt, exp) = nonrep(&line_graph(&wheel(n).unwrap()));
            Outcome {
                id: 3,
                name: "line graph of wheel",
                ok,
                elapsed: dt,
                limit: 10 * MINUTE,
                detail: format!("W{n}, {exp} expansions"),
            }
        })
        .collect()
}

fn criterion_4() -> Vec<Outcome> {
    let l5 = line_graph(&clique(5).unwrap());
    let (ok, dt, exp) = nonrep(&l5);
    let a = Outcome {
        id: 4,
        name: "line graph of K5",
        ok,
        elapsed: dt,
        limit: 10 * MINUTE,
        detail: format!("{exp} expansions"),
    };
    let l6 = line_graph(&clique(6).unwrap());
    let (found, dt) = timed(|| contains_induced(&l6, &l5, DEFAULT_EMBED_BUDGET));
    let ok = matches!(&found, Ok(Some(m)) if m.is_induced_embedding(&l5, &l6));
    let b = Outcome {
        id: 4,
        name: "L(K6) contains induced L(K5)",
        ok,
        elapsed: dt,
        limit: MINUTE,
        detail: "witness re-checked".into(),
    };
    vec![a, b]
}

fn criterion_5() -> Vec<Outcome> {
    let (report, sweep_dt) = timed(|| verify_iteration_theorem(&LabConfig::default()));
    let chain: Vec<_> = report.checks.iter().filter(|c| c.name.starts_with("fig6-")).collect();
    let sweep: Vec<_> = report
        .checks
        .iter()
        .filter(|c| c.name.starts_with("l4-contains-lw4"))
        .collect();
    // Time the chain on its own so the 1 s limit applies to it alone.
    let (_, chain_dt) = timed(|| {
        use wordrep_core::families::fig6_graph;
        use wordrep_core::search::is_isomorphic;
        for i in 1..=3 {
            is_isomorphic(
                &line_graph(&fig6_graph(i).unwrap()),
                &fig6_graph(i + 1).unwrap(),
                DEFAULT_EMBED_BUDGET,
            )
            .unwrap();
        }
        is_isomorphic(&fig6_graph(4).unwrap(), &wheel(4).unwrap(), DEFAULT_EMBED_BUDGET).unwrap();
    });
    let sweep_ok = sweep.len() == 22 && report.passed();
    vec![
        Outcome {
            id: 5,
            name: "line-graph chain ends in W4",
            ok: chain.len() == 4 && chain.iter().all(|c| c.status == CheckStatus::Pass),
            elapsed: chain_dt,
            limit: SECOND,
            detail: "isomorphisms re-checked".into(),
        },
        Outcome {
            id: 5,
            name: "L^4(G) contains induced L(W4)",
            ok: sweep_ok,
            elapsed: sweep_dt,
            limit: 30 * MINUTE,
            detail: format!("{} qualifying graphs on <= 5 vertices", sweep.len()),
        },
    ]
}

fn criterion_6() -> Vec<Outcome> {
    let budget = 1_000_000_000;
    let (r, dt) = timed(|| find_k_uniform_representant(&petersen(), 2, budget).unwrap());
    let (ok, detail) = match r.outcome {
        WordSearchOutcome::Exhausted => (true, format!("exhausted in {} expansions", r.stats.word_expansions)),
        WordSearchOutcome::BudgetExceeded => (false, format!("unknown: budget of {budget} expansions exhausted")),
        WordSearchOutcome::Found(w) => (false, format!("found {:?}", w.letters())),
    };
    vec![Outcome {
        id: 6,
        name: "Petersen has no 2-uniform representant",
        ok,
        elapsed: dt,
        limit: 30 * MINUTE,
        detail,
    }]
}

fn criterion_7() -> Vec<Outcome> {
    let (report, dt) = timed(|| verify_cycle_lemma(3, &[2, 3], &LabConfig::default()).unwrap());
    let detail = report
        .checks
        .iter()
        .map(|c| c.detail.as_str())
        .collect::<Vec<_>>()
        .join("; ");
    vec![Outcome {
        id: 7,
        name: "factor 0123 absent from representants of C4",
        ok: report.passed(),
        elapsed: dt,
        limit: MINUTE,
        detail,
    }]
}

fn criterion_8() -> Vec<Outcome> {
    let (report, dt) = timed(|| verify_propositions(10_000, 1, &LabConfig::default()).unwrap());
    let failed: Vec<_> = report
        .checks
        .iter()
        .filter(|c| c.status != CheckStatus::Pass)
        .map(|c| c.name.as_str())
        .collect();
    let detail = if failed.is_empty() {
        format!("{} checks x 10000 trials", report.checks.len())
    } else {
        format!("failing: {}", failed.join(", "))
    };
    vec![Outcome {
        id: 8,
        name: "property suites",
        ok: report.passed(),
        elapsed: dt,
        limit: MINUTE,
        detail,
    }]
}

#[test]
fn acceptance() {
    let criteria: [fn() -> Vec<Outcome>; 8] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
    ];
    let mut failures = Vec::new();
    for c in criteria {
        for outcome in c() {
            println!("{}", outcome.line());
            if !outcome.passed() {
                failures.push(outcome.line());
            }
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}
