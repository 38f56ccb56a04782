use alloc::format;
use alloc::vec::Vec;

use super::figures::nonrep_check;
use super::{edge_summary, Artifact, CheckReport, CheckStatus, LabConfig, SuiteReport};
use crate::families::{claw, clique, cycle, fig6_graph, path, star, wheel};
use crate::line::{iterate_line_graph, line_graph};
use crate::search::{contains_induced, is_isomorphic, DEFAULT_EMBED_BUDGET};
use crate::{Error, Graph};

/// One representative of every connected graph on `1..=max_n` vertices, up
/// to isomorphism, ordered by vertex count, then edge count, then the
/// bitmask of the first labelled copy found.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut found: Vec<Graph> = Vec::new();
        for mask in 0u64..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).expect("valid pairs");
            if !g.is_connected() {
                continue;
            }
            let seen = found.iter().any(|h| {
                is_isomorphic(h, &g, DEFAULT_EMBED_BUDGET)
                    .expect("tiny graphs")
                    .is_some()
            });
            if !seen {
                found.push(g);
            }
        }
        found.sort_by_key(Graph::edge_count);
        reps.extend(found);
    }
    reps
}

/// The exceptions of the iteration theorem: paths, cycles and the claw.
fn is_exceptional(g: &Graph) -> bool {
    let n = g.vertex_count();
    let iso = |h: Graph| {
        is_isomorphic(g, &h, DEFAULT_EMBED_BUDGET)
            .expect("tiny graphs")
            .is_some()
    };
    iso(path(n).expect("n >= 1")) || (n >= 3 && iso(cycle(n).expect("n >= 3"))) || iso(claw())
}

/// Iterating the line graph: the four-graph chain ending in `W4`, the
/// refutation of `L(W4)`, and for every connected graph on at most five
/// vertices other than a path, cycle or claw, an induced `L(W4)` inside
/// its fourth iterated line graph.
pub fn verify_iteration_theorem(cfg: &LabConfig) -> SuiteReport {
    let mut report = SuiteReport::new(
        "iteration",
        &[
            "fig6",
            "wheel",
            "path",
            "cycle",
            "claw",
            "star",
            "clique",
            "orientation",
        ],
    );

    for i in 1..=3 {
        let from = line_graph(&fig6_graph(i).expect("index in range"));
        let to = fig6_graph(i + 1).expect("index in range");
        report.push(iso_check(&format!("fig6-chain-{i}-to-{}", i + 1), &from, &to, cfg));
    }
    let w4 = wheel(4).expect("n >= 3");
    report.push(iso_check(
        "fig6-last-is-wheel-4",
        &fig6_graph(4).expect("index in range"),
        &w4,
        cfg,
    ));

    let lw4 = line_graph(&w4);
    report.push(nonrep_check(
        "line-graph-of-fig6-last",
        &line_graph(&fig6_graph(4).expect("index in range")),
        cfg,
    ));

    let s4 = star(4).expect("k >= 1");
    report.push(iso_check(
        "line-graph-of-star-4-is-k4",
        &line_graph(&s4),
        &clique(4).expect("n >= 1"),
        cfg,
    ));

    for g in connected_graphs(5).iter().filter(|g| !is_exceptional(g)) {
        let name = format!("l4-contains-lw4 [{}]", edge_summary(g));
        let check = match iterate_line_graph(g, 4, cfg.vertex_budget) {
            Err(e) => CheckReport::new(name, CheckStatus::SkippedBudget, format!("{e}"))
                .with_artifact(Artifact::Graph(g.clone())),
            Ok(l4) => match contains_induced(&l4, &lw4, cfg.embed_budget) {
                Ok(Some(map)) => {
                    let ok = map.is_induced_embedding(&lw4, &l4);
                    CheckReport::pass_if(
                        &name,
                        ok,
                        format!("L^4 has {} vertices; induced L(W4) found", l4.vertex_count()),
                    )
                    .with_artifact(Artifact::LabelMap(map))
                }
                Ok(None) => CheckReport::new(name, CheckStatus::Fail, "no induced L(W4)")
                    .with_artifact(Artifact::Graph(g.clone())),
                Err(e @ Error::ResourceLimit { .. }) => {
                    CheckReport::new(name, CheckStatus::SkippedBudget, format!("{e}"))
                        .with_artifact(Artifact::Graph(g.clone()))
                }
                Err(e) => CheckReport::new(name, CheckStatus::Fail, format!("{e}")),
            },
        };
        report.push(check);
    }
    report
}

fn iso_check(name: &str, a: &Graph, b: &Graph, cfg: &LabConfig) -> CheckReport {
    match is_isomorphic(a, b, cfg.embed_budget) {
        Ok(Some(map)) => CheckReport::pass_if(name, map.is_isomorphism(a, b), "isomorphism found and re-checked")
            .with_artifact(Artifact::LabelMap(map)),
        Ok(None) => CheckReport::new(
            name,
            CheckStatus::Fail,
            format!("not isomorphic: {} vs {}", edge_summary(a), edge_summary(b)),
        ),
        Err(e) => CheckReport::new(name, CheckStatus::SkippedBudget, format!("{e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts() {
        // 1, 1, 2, 6, 21 connected graphs on 1..=5 vertices.
        let by_n: Vec<usize> = (1..=5)
            .map(|n| connected_graphs(5).iter().filter(|g| g.vertex_count() == n).count())
            .collect();
        assert_eq!(by_n, [1, 1, 2, 6, 21]);
    }

    #[test]
    fn exceptions() {
        assert!(is_exceptional(&path(1).unwrap()));
        assert!(is_exceptional(&path(2).unwrap()));
        assert!(is_exceptional(&cycle(5).unwrap()));
        assert!(is_exceptional(&claw()));
        assert!(!is_exceptional(&star(4).unwrap()));
        assert!(!is_exceptional(&fig6_graph(2).unwrap()));
        let qualifying = connected_graphs(5).iter().filter(|g| !is_exceptional(g)).count();
        assert_eq!(qualifying, 31 - 9);
    }
}
