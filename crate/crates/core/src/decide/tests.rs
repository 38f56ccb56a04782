use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::*;
use crate::families::{claw, clique, cycle, figure1_left, minimal_nonrep, path, petersen, wheel};
use crate::line::line_graph;
use crate::words::{alternating_graph, is_representant, uniformity, Word};

/// Oracle: enumerate every simple directed path and look for a bridged one
/// with a non-adjacent pair. Independent of the pruned DFS in the crate.
fn brute_semi_transitive(g: &Graph, arcs: &[(usize, usize)]) -> bool {
    let n = g.vertex_count();
    let mut out = vec![Vec::new(); n];
    for &(t, h) in arcs {
        out[t].push(h);
    }
    let has_arc = |a: usize, b: usize| arcs.contains(&(a, b));
    let mut shortcut_or_cycle = false;
    fn walk(out: &[Vec<usize>], path: &mut Vec<usize>, on_path: &mut Vec<bool>, found: &mut dyn FnMut(&[usize], bool)) {
        let last = *path.last().unwrap();
        for &x in &out[last] {
            if on_path[x] {
                found(path, true);
                continue;
            }
            path.push(x);
            on_path[x] = true;
            found(path, false);
            walk(out, path, on_path, found);
            on_path[x] = false;
            path.pop();
        }
    }
    for s in 0..n {
        let mut path = vec![s];
        let mut on_path = vec![false; n];
        on_path[s] = true;
        walk(&out, &mut path, &mut on_path, &mut |p, cyc| {
            if cyc {
                shortcut_or_cycle = true;
                return;
            }
            if p.len() >= 3 && has_arc(p[0], *p.last().unwrap()) {
                for i in 0..p.len() {
                    for j in i + 1..p.len() {
                        if !g.has_edge(p[i], p[j]) {
                            shortcut_or_cycle = true;
                        }
                    }
                }
            }
        });
    }
    !shortcut_or_cycle
}

fn arcs_from_mask(g: &Graph, mask: u64) -> Vec<(usize, usize)> {
    g.edges()
        .enumerate()
        .map(|(i, (u, v))| if mask >> i & 1 == 0 { (u, v) } else { (v, u) })
        .collect()
}

/// Oracle: try all 2^m orientations.
fn brute_representable(g: &Graph) -> bool {
    let m = g.edge_count();
    assert!(m <= 20, "oracle is exponential");
    (0..1u64 << m).any(|mask| brute_semi_transitive(g, &arcs_from_mask(g, mask)))
}

/// Oracle: every k-uniform word over 0..n starting with 0, by plain
/// recursion over letter counts with no alternation pruning.
fn brute_words(n: usize, k: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, k: usize, counts: &mut Vec<usize>, word: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if word.len() == n * k {
            out.push(word.clone());
            return;
        }
        for x in 0..n {
            if counts[x] < k && (!word.is_empty() || x == 0) {
                counts[x] += 1;
                word.push(x as u32);
                rec(n, k, counts, word, out);
                word.pop();
                counts[x] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut vec![0; n], &mut Vec::new(), &mut out);
    out
}

fn small_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u32 << pairs.len()).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    })
}

fn orient(g: &Graph) -> Verdict {
    has_semi_transitive_orientation(g, DEFAULT_ORIENTATION_BUDGET).verdict
}

#[test]
fn acyclicity_examples() {
    let k3 = clique(3).unwrap();
    let transitive = Orientation::from_arcs(k3.clone(), &[(0, 1), (1, 2), (0, 2)]).unwrap();
    assert!(is_acyclic(&transitive));
    let cyclic = Orientation::from_arcs(k3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
    assert!(!is_acyclic(&cyclic));
    let forest = path(5).unwrap();
    for mask in 0..16 {
        let o = Orientation::from_arcs(forest.clone(), &arcs_from_mask(&forest, mask)).unwrap();
        assert!(is_acyclic(&o));
    }
}

#[test]
fn semi_transitivity_examples() {
    let k3 = clique(3).unwrap();
    for mask in 0..8 {
        let o = Orientation::from_arcs(k3.clone(), &arcs_from_mask(&k3, mask)).unwrap();
        assert_eq!(is_semi_transitive(&o), is_acyclic(&o));
    }
    // a->b, b->c, c->d bridged by a->d, with a-c and b-d missing.
    let c4 = cycle(4).unwrap();
    let o = Orientation::from_arcs(c4.clone(), &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    assert!(is_acyclic(&o));
    assert!(!is_semi_transitive(&o));
    assert!(!brute_semi_transitive(&c4, &o.arcs()));
    let k5 = clique(5).unwrap();
    let arcs: Vec<_> = k5.edges().collect();
    let o = Orientation::from_arcs(k5, &arcs).unwrap();
    assert!(is_semi_transitive(&o));
}

#[test]
fn semi_transitivity_matches_path_enumeration() {
    for g in small_graphs(5).step_by(7) {
        let m = g.edge_count();
        for mask in (0..1u64 << m).step_by(3) {
            let arcs = arcs_from_mask(&g, mask);
            let o = Orientation::from_arcs(g.clone(), &arcs).unwrap();
            assert_eq!(is_semi_transitive(&o), brute_semi_transitive(&g, &arcs), "{arcs:?}");
        }
    }
}

#[test]
fn orientation_errors() {
    let k3 = clique(3).unwrap();
    assert!(Orientation::new(k3.clone(), vec![true]).is_err());
    assert!(Orientation::from_arcs(k3.clone(), &[(0, 1), (1, 2)]).is_err());
    assert!(Orientation::from_arcs(k3.clone(), &[(0, 1), (1, 0), (1, 2), (0, 2)]).is_err());
    assert!(Orientation::from_arcs(path(3).unwrap(), &[(0, 2), (0, 1)]).is_err());
}

#[test]
fn search_matches_exhaustive_orientations_on_all_5_vertex_graphs() {
    // No graph on five vertices is non-representable; add the minimal
    // non-representable graphs, whose at most 15 edges are within reach of
    // the oracle.
    for g in small_graphs(5)
        .step_by(5)
        .chain((1..=4).map(|i| minimal_nonrep(i).unwrap()))
    {
        let found = has_semi_transitive_orientation(&g, DEFAULT_ORIENTATION_BUDGET);
        let expect = brute_representable(&g);
        assert_eq!(
            found.verdict == Verdict::Representable,
            expect,
            "{:?}",
            g.edges().collect::<Vec<_>>()
        );
        if let Some(o) = &found.orientation {
            assert!(is_semi_transitive(o));
            assert!(brute_semi_transitive(&g, &o.arcs()));
        }
    }
}

#[test]
fn orientation_search_examples() {
    assert_eq!(orient(&wheel(5).unwrap()), Verdict::NonRepresentable);
    assert_eq!(orient(&clique(4).unwrap()), Verdict::Representable);
    assert_eq!(orient(&line_graph(&wheel(4).unwrap())), Verdict::NonRepresentable);
    assert_eq!(orient(&petersen()), Verdict::Representable);
}

#[test]
fn orientation_budget_gives_unknown() {
    let r = has_semi_transitive_orientation(&wheel(5).unwrap(), 10);
    assert_eq!(r.verdict, Verdict::Unknown);
    assert!(r.stats.unexplored > 0);
    assert_eq!(r.stats.orientation_expansions, 10);
    let done = has_semi_transitive_orientation(&wheel(5).unwrap(), DEFAULT_ORIENTATION_BUDGET);
    assert_eq!(done.stats.unexplored, 0);
}

#[test]
fn word_search_matches_brute_force() {
    for n in 1..=4 {
        for g in small_graphs(n) {
            for k in 1..=2 {
                let mut found = Vec::new();
                let r = enumerate_k_uniform_representants(&g, k, DEFAULT_WORD_BUDGET, |w| {
                    found.push(w.to_vec());
                    ControlFlow::Continue(())
                })
                .unwrap();
                assert_eq!(r.outcome, WordSearchOutcome::Exhausted);
                let expect: Vec<Vec<u32>> = brute_words(n, k)
                    .into_iter()
                    .filter(|w| alternating_graph(&Word::new(w.clone())) == g)
                    .collect();
                assert_eq!(found, expect, "n={n} k={k} edges={:?}", g.edges().collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn word_search_examples() {
    for n in 1..=6 {
        let r = find_k_uniform_representant(&clique(n).unwrap(), 1, DEFAULT_WORD_BUDGET).unwrap();
        let expect: Vec<u32> = (0..n as u32).collect();
        assert_eq!(r.outcome, WordSearchOutcome::Found(Word::new(expect)));
    }
    let fig1 = figure1_left();
    match find_k_uniform_representant(&fig1, 2, DEFAULT_WORD_BUDGET)
        .unwrap()
        .outcome
    {
        WordSearchOutcome::Found(w) => {
            assert!(is_representant(&w, &fig1));
            assert_eq!(uniformity(&w), Some(2));
        }
        other => panic!("{other:?}"),
    }
    assert!(is_representant(&Word::from_digits("12312434").unwrap(), &fig1));
    // A non-complete graph has no 1-uniform representant.
    let r = find_k_uniform_representant(&path(3).unwrap(), 1, DEFAULT_WORD_BUDGET).unwrap();
    assert_eq!(r.outcome, WordSearchOutcome::Exhausted);
}

#[test]
fn word_search_errors_and_budget() {
    assert!(find_k_uniform_representant(&clique(3).unwrap(), 0, 10).is_err());
    assert!(find_k_uniform_representant(&Graph::new(0), 1, 10).is_err());
    let r = find_k_uniform_representant(&cycle(6).unwrap(), 3, 5).unwrap();
    assert_eq!(r.outcome, WordSearchOutcome::BudgetExceeded);
    assert!(r.stats.unexplored > 0);
}

#[test]
fn facade_strategies() {
    let b = Budget::default();
    let c = decide_representable(&minimal_nonrep(2).unwrap(), Strategy::Orientation, b);
    assert_eq!(c.verdict, Verdict::NonRepresentable);
    assert!(c.verify(&minimal_nonrep(2).unwrap()));

    let c5 = cycle(5).unwrap();
    let c = decide_representable(&c5, Strategy::Auto, b);
    assert_eq!(c.verdict, Verdict::Representable);
    let w = c.witness.clone().expect("auto finds a word for C5");
    assert!(is_representant(&w, &c5));
    assert!(!c.is_nonconstructive());

    let c = decide_representable(&c5, Strategy::WordSearch { k_max: 1 }, b);
    assert_eq!(c.verdict, Verdict::Unknown);
    let c = decide_representable(&c5, Strategy::WordSearch { k_max: 2 }, b);
    assert_eq!(c.verdict, Verdict::Representable);

    let c = decide_representable(&clique(4).unwrap(), Strategy::Orientation, b);
    assert!(c.is_nonconstructive());
    assert!(c.verify(&clique(4).unwrap()));
}

#[test]
fn degenerate_graphs_are_representable() {
    let c = decide_representable(&Graph::new(0), Strategy::Orientation, Budget::default());
    assert_eq!(c.verdict, Verdict::Representable);
    assert_eq!(c.witness, Some(Word::empty()));
    let single = Graph::new(1);
    let c = decide_representable(&single, Strategy::Auto, Budget::default());
    assert_eq!(c.witness, Some(Word::new(vec![0])));
    assert!(c.verify(&single));
}

#[test]
fn claw_and_paths_have_small_witnesses() {
    for g in [claw(), path(4).unwrap(), cycle(4).unwrap()] {
        let c = decide_representable(&g, Strategy::Auto, Budget::default());
        assert_eq!(c.verdict, Verdict::Representable);
        assert!(c.witness.is_some());
        assert!(c.verify(&g));
    }
}
