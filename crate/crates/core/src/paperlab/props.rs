use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Artifact, CheckReport, CheckStatus, LabConfig, SuiteReport};
use crate::decide::{decide_representable, Strategy, Verdict};
use crate::words::{alternates, alternating_graph, cyclic_shift, erase, order_statement_holds, uniformity};
use crate::words::{Letter, OrderStatement, Quantifier, Word};
use crate::{Error, Result};

const MAX_ALPHABET: u32 = 6;
const MAX_UNIFORMITY: usize = 3;

/// Operations the proposition suite calls through, so a deliberately broken
/// implementation can be plugged in and shown to fail.
#[derive(Clone, Copy, Debug)]
pub struct PropositionHooks {
    pub cyclic_shift: fn(&Word) -> Word,
}

impl Default for PropositionHooks {
    fn default() -> Self {
        PropositionHooks { cyclic_shift }
    }
}

/// Seeded randomised checks of the word-level facts: cyclic shifts, clique
/// representants, the order-statement dichotomy, erasure, alternation
/// symmetry, heredity and soundness of the decider on word graphs.
pub fn verify_propositions(trials: usize, seed: u64, cfg: &LabConfig) -> Result<SuiteReport> {
    verify_propositions_with(trials, seed, cfg, PropositionHooks::default())
}

pub fn verify_propositions_with(
    trials: usize,
    seed: u64,
    cfg: &LabConfig,
    hooks: PropositionHooks,
) -> Result<SuiteReport> {
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    let mut report = SuiteReport::new("propositions", &["orientation"]);
    let checks: [(&str, CheckFn); 11] = [
        ("cyclic-shift-invariance", cyclic_shift_invariance),
        ("clique-power", clique_power),
        ("nonadjacent-both-exist", nonadjacent_both_exist),
        ("adjacent-exactly-one-forall", adjacent_exactly_one_forall),
        ("forall-implies-exists", forall_implies_exists),
        ("forall-excludes-swapped-exists", forall_excludes_swapped),
        ("cyclic-evaluation-matches-shifts", cyclic_matches_shifts),
        ("erase-morphism", erase_morphism),
        ("alternates-symmetric", alternates_symmetric),
        ("hereditary", hereditary),
        ("soundness", soundness),
    ];
    for (stream, (name, run)) in checks.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream as u64);
        let ctx = Ctx { hooks, cfg };
        let mut expansions = 0;
        let mut outcome = Ok(());
        for _ in 0..trials {
            if let Err(fail) = run(&mut rng, &ctx, &mut expansions) {
                outcome = Err(fail);
                break;
            }
        }
        let check = match outcome {
            Ok(_) => {
                let extra = match name {
                    "clique-power" => format!("; {} exhaustive words", clique_power_exhaustive_count()),
                    _ => String::new(),
                };
                CheckReport::new(name, CheckStatus::Pass, format!("{trials} trials{extra}"))
            }
            Err(fail) => fail.into_report(name),
        };
        report.push(check.with_expansions(expansions));
    }
    let check = match clique_power_exhaustive() {
        Ok(n) => CheckReport::new(
            "clique-power-exhaustive",
            CheckStatus::Pass,
            format!("{n} uniform words enumerated"),
        ),
        Err(fail) => fail.into_report("clique-power-exhaustive"),
    };
    report.push(check);
    let check = match order_case_coverage(seed, trials) {
        Ok(detail) => CheckReport::new("order-case-coverage", CheckStatus::Pass, detail),
        Err(fail) => fail.into_report("order-case-coverage"),
    };
    report.push(check);
    Ok(report)
}

struct Ctx<'a> {
    hooks: PropositionHooks,
    cfg: &'a LabConfig,
}

struct Failure {
    reason: String,
    artifacts: Vec<Artifact>,
}

impl Failure {
    fn word(reason: impl Into<String>, w: &Word) -> Self {
        Failure {
            reason: reason.into(),
            artifacts: vec![Artifact::Word(w.clone())],
        }
    }

    fn into_report(self, name: &str) -> CheckReport {
        let mut c = CheckReport::new(name, CheckStatus::Fail, self.reason);
        for a in self.artifacts {
            c = c.with_artifact(a);
        }
        c
    }
}

type CheckFn = fn(&mut ChaCha8Rng, &Ctx<'_>, &mut u64) -> core::result::Result<(), Failure>;
type Outcome = core::result::Result<(), Failure>;

fn random_uniform_word(rng: &mut ChaCha8Rng, min_alphabet: u32) -> Word {
    let n = rng.gen_range(min_alphabet..=MAX_ALPHABET);
    let m = rng.gen_range(1..=MAX_UNIFORMITY);
    let mut letters: Vec<Letter> = (0..n).flat_map(|l| core::iter::repeat_n(l, m)).collect();
    letters.shuffle(rng);
    Word::new(letters)
}

fn random_word(rng: &mut ChaCha8Rng) -> Word {
    let len = rng.gen_range(0..=12);
    Word::new((0..len).map(|_| rng.gen_range(0..MAX_ALPHABET)).collect())
}

fn random_subset(rng: &mut ChaCha8Rng, alphabet: &BTreeSet<Letter>) -> BTreeSet<Letter> {
    alphabet.iter().copied().filter(|_| rng.gen_bool(0.5)).collect()
}

fn cyclic_shift_invariance(rng: &mut ChaCha8Rng, ctx: &Ctx<'_>, _: &mut u64) -> Outcome {
    let w = random_uniform_word(rng, 1);
    let shifted = (ctx.hooks.cyclic_shift)(&w);
    if alternating_graph(&shifted) == alternating_graph(&w) {
        Ok(())
    } else {
        Err(Failure {
            reason: "cyclic shift changed the alternating graph".into(),
            artifacts: vec![Artifact::Word(w), Artifact::Word(shifted)],
        })
    }
}

/// `w` is `v^m` for some word `v` using every letter once.
fn is_clique_power(w: &Word) -> bool {
    let Some(m) = uniformity(w) else { return true };
    let n = w.alphabet().len();
    let v = &w.letters()[..n];
    w.letters().chunks(n).all(|c| c == v) && w.len() == n * m
}

fn is_complete(w: &Word) -> bool {
    let g = alternating_graph(w);
    let n = g.vertex_count();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

fn clique_power(rng: &mut ChaCha8Rng, _: &Ctx<'_>, _: &mut u64) -> Outcome {
    // Half the trials build v^m directly, half shuffle; either way a complete
    // alternating graph forces the power shape.
    let w = if rng.gen_bool(0.5) {
        let n = rng.gen_range(1..=MAX_ALPHABET);
        let mut v: Vec<Letter> = (0..n).collect();
        v.shuffle(rng);
        Word::new(v).power(rng.gen_range(1..=MAX_UNIFORMITY))
    } else {
        random_uniform_word(rng, 1)
    };
    let complete = is_complete(&w);
    let power = is_clique_power(&w);
    if complete == power {
        Ok(())
    } else {
        Err(Failure::word(
            format!("complete={complete} but power-shape={power}"),
            &w,
        ))
    }
}

/// Calls `f` on every word in which letters `0..n` each occur `m` times.
fn for_each_uniform_word(n: usize, m: usize, f: &mut dyn FnMut(&[Letter]) -> Outcome) -> Outcome {
    fn rec(left: &mut [usize], word: &mut Vec<Letter>, len: usize, f: &mut dyn FnMut(&[Letter]) -> Outcome) -> Outcome {
        if word.len() == len {
            return f(word);
        }
        for l in 0..left.len() {
            if left[l] > 0 {
                left[l] -= 1;
                word.push(l as Letter);
                rec(left, word, len, f)?;
                word.pop();
                left[l] += 1;
            }
        }
        Ok(())
    }
    let mut left = vec![m; n];
    rec(&mut left, &mut Vec::with_capacity(n * m), n * m, f)
}

const CLIQUE_POWER_CASES: [(usize, usize); 6] = [(1, 3), (2, 3), (3, 2), (3, 3), (4, 2), (5, 2)];

fn clique_power_exhaustive() -> core::result::Result<usize, Failure> {
    let mut count = 0;
    for (n, m) in CLIQUE_POWER_CASES {
        for_each_uniform_word(n, m, &mut |letters| {
            count += 1;
            let w = Word::new(letters.to_vec());
            if is_complete(&w) && !is_clique_power(&w) {
                return Err(Failure::word("complete alternating graph without power shape", &w));
            }
            Ok(())
        })?;
    }
    Ok(count)
}

fn clique_power_exhaustive_count() -> usize {
    // multinomial (n*m)! / (m!)^n per case
    CLIQUE_POWER_CASES
        .iter()
        .map(|&(n, m)| {
            let fact = |k: usize| (1..=k).product::<usize>();
            fact(n * m) / fact(m).pow(n as u32)
        })
        .sum()
}

/// Ordered triples `(a, b, c)` with `b < c`, all distinct, where `a`
/// alternates with both `b` and `c`.
fn anchored_pairs(w: &Word) -> Vec<(Letter, Letter, Letter, bool)> {
    let alphabet: Vec<Letter> = w.alphabet().into_iter().collect();
    let alt = |x, y| alternates(w, x, y).expect("distinct letters");
    let mut out = Vec::new();
    for &a in &alphabet {
        for &b in &alphabet {
            for &c in &alphabet {
                if a != b && a != c && b < c && alt(a, b) && alt(a, c) {
                    out.push((a, b, c, alt(b, c)));
                }
            }
        }
    }
    out
}

fn holds(w: &Word, q: Quantifier, a: Letter, before: &[Letter], after: &[Letter]) -> bool {
    let s = OrderStatement::new(q, a, before.iter().copied(), after.iter().copied()).expect("valid statement");
    order_statement_holds(w, &s).expect("uniform word over the statement's letters")
}

fn nonadjacent_both_exist(rng: &mut ChaCha8Rng, _: &Ctx<'_>, _: &mut u64) -> Outcome {
    let w = random_uniform_word(rng, 3);
    for (a, b, c, bc) in anchored_pairs(&w) {
        if !bc && !(holds(&w, Quantifier::Exists, a, &[b], &[c]) && holds(&w, Quantifier::Exists, a, &[c], &[b])) {
            return Err(Failure::word(
                format!("a={a} b={b} c={c}: not both exist statements hold"),
                &w,
            ));
        }
    }
    Ok(())
}

fn adjacent_exactly_one_forall(rng: &mut ChaCha8Rng, _: &Ctx<'_>, _: &mut u64) -> Outcome {
    let w = random_uniform_word(rng, 3);
    for (a, b, c, bc) in anchored_pairs(&w) {
        if bc && holds(&w, Quantifier::ForAll, a, &[b], &[c]) == holds(&w, Quantifier::ForAll, a, &[c], &[b]) {
            return Err(Failure::word(
                format!("a={a} b={b} c={c}: forall statements not exclusive"),
                &w,
            ));
        }
    }
    Ok(())
}

/// Both cases of the dichotomy must actually arise in the generated words.
fn order_case_coverage(seed: u64, trials: usize) -> core::result::Result<String, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(2);
    let (mut adjacent, mut nonadjacent) = (0usize, 0usize);
    for _ in 0..trials {
        let w = random_uniform_word(&mut rng, 3);
        for (_, _, _, bc) in anchored_pairs(&w) {
            if bc {
                adjacent += 1;
            } else {
                nonadjacent += 1;
            }
        }
    }
    let detail = format!("{adjacent} adjacent and {nonadjacent} non-adjacent triples");
    if adjacent > 0 && nonadjacent > 0 {
        Ok(detail)
    } else {
        Err(Failure {
            reason: format!("a case never occurred: {detail}"),
            artifacts: Vec::new(),
        })
    }
}

fn random_statement(rng: &mut ChaCha8Rng, w: &Word, q: Quantifier) -> OrderStatement {
    let alphabet: Vec<Letter> = w.alphabet().into_iter().collect();
    let a = *alphabet.choose(rng).expect("non-empty alphabet");
    let (mut before, mut after) = (Vec::new(), Vec::new());
    for &l in alphabet.iter().filter(|&&l| l != a) {
        match rng.gen_range(0..3) {
            0 => before.push(l),
            1 => after.push(l),
            _ => {}
        }
    }
    OrderStatement::new(q, a, before, after).expect("disjoint sets without the anchor")
}

fn with_quantifier(s: &OrderStatement, q: Quantifier) -> OrderStatement {
    OrderStatement::new(q, s.anchor(), s.before().iter().copied(), s.after().iter().copied()).expect("same invariants")
}

fn forall_implies_exists(rng: &mut ChaCha8Rng, _: &Ctx<'_>, _: &mut u64) -> Outcome {
    let w = random_uniform_word(rng, 1);
    let s = random_statement(rng, &w, Quantifier::ForAll);
    let all = order_statement_holds(&w, &s).expect("valid statement");
    let any = order_statement_holds(&w, &with_quantifier(&s, Quantifier::Exists)).expect("valid statement");
    if !all || any {
        Ok(())
    } else {
        Err(Failure::word(format!("{s:?} holds but its exists form does not"), &w))
    }
}

fn forall_excludes_swapped(rng: &mut ChaCha8Rng, _: &Ctx<'_>, _: &mut u64) -> Outcome {
    let w = random_uniform_word(rng, 3);
    let s = random_statement(rng, &w, Quantifier::ForAll);
    if s.before().is_empty() || s.after().is_empty() {
        return Ok(());
    }
    let swapped =
        OrderStatement::exists(s.anchor(), s.after().iter().copied(), s.before().iter().copied()).expect("valid");
    let all = order_statement_holds(&w, &s).expect("valid statement");
    let other = order_statement_holds(&w, &swapped).expect("valid statement");
    if all && other {
        Err(Failure::word(format!("{s:?} and {swapped:?} both hold"), &w))
    } else {
        Ok(())
    }
}

/// Reference evaluation: every cyclic shift, and within it every pair of
/// neighbouring anchor occurrences read left to right.
fn holds_over_shifts(w: &Word, s: &OrderStatement) -> bool {
    let scope = s.scope();
    let mut gaps = Vec::new();
    let mut shifted = w.clone();
    for _ in 0..w.len() {
        let erased = erase(&shifted, &scope);
        let at: Vec<usize> = (0..erased.len())
            .filter(|&i| erased.letters()[i] == s.anchor())
            .collect();
        for pair in at.windows(2) {
            gaps.push(erased.letters()[pair[0] + 1..pair[1]].to_vec());
        }
        shifted = cyclic_shift(&shifted);
    }
    match s.quantifier() {
        Quantifier::ForAll => gaps.iter().all(|g| s.gap_satisfies(g)),
        Quantifier::Exists => gaps.iter().any(|g| s.gap_satisfies(g)),
    }
}

fn cyclic_matches_shifts(rng: &mut ChaCha8Rng, _: &Ctx<'_>, _: &mut u64) -> Outcome {
    let w = random_uniform_word(rng, 1);
    if uniformity(&w) < Some(2) {
        return Ok(());
    }
    let q = if rng.gen_bool(0.5) {
        Quantifier::ForAll
    } else {
        Quantifier::Exists
    };
    let s = random_statement(rng, &w, q);
    let fast = order_statement_holds(&w, &s).expect("valid statement");
    if fast == holds_over_shifts(&w, &s) {
        Ok(())
    } else {
        Err(Failure::word(format!("{s:?}: cyclic evaluation gave {fast}"), &w))
    }
}

fn erase_morphism(rng: &mut ChaCha8Rng, _: &Ctx<'_>, _: &mut u64) -> Outcome {
    let w = random_word(rng);
    let cut = rng.gen_range(0..=w.len());
    let u = Word::new(w.letters()[..cut].to_vec());
    let v = Word::new(w.letters()[cut..].to_vec());
    let keep = random_subset(rng, &(0..MAX_ALPHABET).collect());
    if erase(&u.concat(&v), &keep) == erase(&u, &keep).concat(&erase(&v, &keep)) {
        Ok(())
    } else {
        Err(Failure::word(
            format!("erase not a morphism at split {cut}, keep {keep:?}"),
            &w,
        ))
    }
}

fn alternates_symmetric(rng: &mut ChaCha8Rng, _: &Ctx<'_>, _: &mut u64) -> Outcome {
    let w = random_word(rng);
    let x = rng.gen_range(0..MAX_ALPHABET);
    let y = (x + rng.gen_range(1..MAX_ALPHABET)) % MAX_ALPHABET;
    if alternates(&w, x, y).ok() == alternates(&w, y, x).ok() {
        Ok(())
    } else {
        Err(Failure::word(
            format!("alternates({x},{y}) differs from alternates({y},{x})"),
            &w,
        ))
    }
}

fn hereditary(rng: &mut ChaCha8Rng, ctx: &Ctx<'_>, expansions: &mut u64) -> Outcome {
    let w = random_uniform_word(rng, 1);
    let g = alternating_graph(&w);
    let keep = random_subset(rng, &w.alphabet());
    let vertices: Vec<usize> = keep.iter().map(|&l| l as usize).collect();
    let h = g.induced_subgraph(&vertices).expect("letters are vertex ids");
    if alternating_graph(&erase(&w, &keep)) != h {
        return Err(Failure::word(
            format!("erasing to {keep:?} does not give the induced subgraph"),
            &w,
        ));
    }
    let cert = decide_representable(&h, Strategy::Orientation, ctx.cfg.budget);
    *expansions += cert.stats.expansions();
    match cert.verdict {
        Verdict::Representable => Ok(()),
        v => Err(Failure {
            reason: format!("induced subgraph on {keep:?} decided {}", v.as_str()),
            artifacts: vec![Artifact::Word(w), Artifact::Graph(h)],
        }),
    }
}

fn soundness(rng: &mut ChaCha8Rng, ctx: &Ctx<'_>, expansions: &mut u64) -> Outcome {
    let w = random_uniform_word(rng, 1);
    let g = alternating_graph(&w);
    let cert = decide_representable(&g, Strategy::Orientation, ctx.cfg.budget);
    *expansions += cert.stats.expansions();
    match cert.verdict {
        Verdict::Representable => Ok(()),
        v => Err(Failure {
            reason: format!("word graph decided {}", v.as_str()),
            artifacts: vec![Artifact::Word(w), Artifact::Graph(g)],
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn drop_moved_letter(w: &Word) -> Word {
        Word::new(w.letters().iter().skip(1).copied().collect())
    }

    #[test]
    fn passes_and_is_deterministic() {
        let cfg = LabConfig::default();
        let a = verify_propositions(300, 7, &cfg).unwrap();
        assert!(
            a.passed(),
            "{:?}",
            a.checks
                .iter()
                .filter(|c| c.status != CheckStatus::Pass)
                .collect::<Vec<_>>()
        );
        let b = verify_propositions(300, 7, &cfg).unwrap();
        let summary = |r: &SuiteReport| {
            r.checks
                .iter()
                .map(|c| (c.name.clone(), c.status, c.detail.clone(), c.expansions))
                .collect::<Vec<_>>()
        };
        assert_eq!(summary(&a), summary(&b));
        assert!(verify_propositions(0, 7, &cfg).is_err());
    }

    #[test]
    fn broken_shift_is_caught() {
        let hooks = PropositionHooks {
            cyclic_shift: drop_moved_letter,
        };
        let r = verify_propositions_with(300, 7, &LabConfig::default(), hooks).unwrap();
        let c = r.check("cyclic-shift-invariance").unwrap();
        assert_eq!(c.status, CheckStatus::Fail);
        assert!(!c.artifacts.is_empty());
        assert!(!r.passed());
    }

    #[test]
    fn clique_power_shape() {
        assert!(is_clique_power(&Word::from_digits("120120").unwrap()));
        assert!(!is_clique_power(&Word::from_digits("120210").unwrap()));
        assert_eq!(clique_power_exhaustive().ok(), Some(clique_power_exhaustive_count()));
    }

    #[test]
    fn shift_reference_agrees_on_example() {
        let w = Word::from_digits("012012").unwrap();
        let s = OrderStatement::forall(0, [1], [2]).unwrap();
        assert!(holds_over_shifts(&w, &s));
        assert!(order_statement_holds(&w, &s).unwrap());
    }
}
