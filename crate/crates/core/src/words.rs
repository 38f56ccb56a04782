//! Words over vertex alphabets and the alternation relation.
//!
//! Letters are integers; an optional side table gives them display names so
//! that a word and a labelled graph can be matched up by name.

use alloc::borrow::Cow;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

pub type Letter = u32;

/// A finite word. The alphabet is always exactly the set of letters present.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Word {
    letters: Vec<Letter>,
    names: BTreeMap<Letter, String>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word {
            letters,
            names: BTreeMap::new(),
        }
    }

    /// The empty word.
    pub fn empty() -> Self {
        Word::default()
    }

    /// Reads a word written with one decimal digit per letter, e.g.
    /// `"12312434"`.
    pub fn from_digits(digits: &str) -> Result<Self> {
        digits
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::invalid(format!("'{c}' is not a decimal digit")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    /// Attaches display names. Names for letters that do not occur are
    /// dropped.
    pub fn with_names(mut self, names: BTreeMap<Letter, String>) -> Self {
        self.names = names;
        self.prune_names();
        self
    }

    fn prune_names(&mut self) {
        if !self.names.is_empty() {
            let alphabet = self.alphabet();
            self.names.retain(|l, _| alphabet.contains(l));
        }
    }

    pub fn names(&self) -> &BTreeMap<Letter, String> {
        &self.names
    }

    /// Display name of `letter`; its decimal value when unnamed.
    pub fn name(&self, letter: Letter) -> Cow<'_, str> {
        match self.names.get(&letter) {
            Some(n) => Cow::Borrowed(n.as_str()),
            None => Cow::Owned(letter.to_string()),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn alphabet(&self) -> BTreeSet<Letter> {
        self.letters.iter().copied().collect()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// `self` followed by `other`; names from both are kept.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        let mut names = self.names.clone();
        names.extend(other.names.iter().map(|(k, v)| (*k, v.clone())));
        Word { letters, names }
    }

    /// `self` repeated `m` times.
    pub fn power(&self, m: usize) -> Word {
        Word {
            letters: self.letters.repeat(m),
            names: if m == 0 { BTreeMap::new() } else { self.names.clone() },
        }
    }
}

/// Erasing morphism: keeps exactly the letters in `keep`, in order.
pub fn erase(w: &Word, keep: &BTreeSet<Letter>) -> Word {
    let letters = w.letters.iter().copied().filter(|l| keep.contains(l)).collect();
    Word::new(letters).with_names(w.names.clone())
}

/// Whether `x` and `y` both occur in `w` and strictly alternate once every
/// other letter is erased.
pub fn alternates(w: &Word, x: Letter, y: Letter) -> Result<bool> {
    if x == y {
        return Err(Error::invalid(format!("a letter cannot alternate with itself ({x})")));
    }
    let mut last = None;
    for &l in &w.letters {
        if l == x || l == y {
            if last == Some(l) {
                return Ok(false);
            }
            last = Some(l);
        }
    }
    Ok(w.letters.contains(&x) && w.letters.contains(&y))
}

/// The graph on the alphabet of `w` (in ascending letter order) whose edges
/// are the alternating pairs. Vertex labels are the letters' display names.
pub fn alternating_graph(w: &Word) -> Graph {
    let alphabet: Vec<Letter> = w.alphabet().into_iter().collect();
    let n = alphabet.len();
    let index = |l: Letter| alphabet.binary_search(&l).expect("letter is in the alphabet");
    // last[i * n + j] holds which of i, j was seen last among the pair.
    let mut last = alloc::vec![usize::MAX; n * n];
    let mut broken = alloc::vec![false; n * n];
    for &l in &w.letters {
        let i = index(l);
        for j in (0..n).filter(|&j| j != i) {
            let p = i.min(j) * n + i.max(j);
            if last[p] == i {
                broken[p] = true;
            }
            last[p] = i;
        }
    }
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if !broken[i * n + j] {
                g.add_edge(i, j).expect("distinct in-range vertices");
            }
        }
    }
    let labels: Vec<String> = alphabet.iter().map(|&l| w.name(l).into_owned()).collect();
    g.with_labels(labels).expect("one label per letter")
}

/// Outcome of comparing a word's alternating graph with a target graph.
/// Letters and vertices are matched by display name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepresentantCheck {
    Represents,
    AlphabetMismatch {
        /// Vertex labels with no matching letter.
        missing_letters: Vec<String>,
        /// Letters with no matching vertex.
        extra_letters: Vec<String>,
    },
    EdgeMismatch {
        /// Graph edges whose letters do not alternate.
        missing: Vec<(String, String)>,
        /// Alternating pairs that are not graph edges.
        extra: Vec<(String, String)>,
    },
}

impl RepresentantCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, RepresentantCheck::Represents)
    }
}

pub fn check_representant(w: &Word, g: &Graph) -> RepresentantCheck {
    let alt = alternating_graph(w);
    let by_label: BTreeMap<String, usize> = (0..g.vertex_count()).map(|v| (g.label(v).into_owned(), v)).collect();
    let letter_labels: BTreeSet<String> = (0..alt.vertex_count()).map(|v| alt.label(v).into_owned()).collect();
    let missing_letters: Vec<String> = by_label
        .keys()
        .filter(|k| !letter_labels.contains(*k))
        .cloned()
        .collect();
    let extra_letters: Vec<String> = letter_labels
        .iter()
        .filter(|k| !by_label.contains_key(*k))
        .cloned()
        .collect();
    let ambiguous = by_label.len() != g.vertex_count() || letter_labels.len() != alt.vertex_count();
    if ambiguous || !missing_letters.is_empty() || !extra_letters.is_empty() {
        return RepresentantCheck::AlphabetMismatch {
            missing_letters,
            extra_letters,
        };
    }
    // Position in `alt` of each vertex of `g`.
    let mut to_alt = alloc::vec![0; g.vertex_count()];
    for a in 0..alt.vertex_count() {
        to_alt[by_label[alt.label(a).as_ref()]] = a;
    }
    let mut missing = Vec::new();
    let mut extra = Vec::new();
    for u in 0..g.vertex_count() {
        for v in u + 1..g.vertex_count() {
            let want = g.has_edge(u, v);
            let have = alt.has_edge(to_alt[u], to_alt[v]);
            let pair = || (g.label(u).into_owned(), g.label(v).into_owned());
            match (want, have) {
                (true, false) => missing.push(pair()),
                (false, true) => extra.push(pair()),
                _ => {}
            }
        }
    }
    if missing.is_empty() && extra.is_empty() {
        RepresentantCheck::Represents
    } else {
        RepresentantCheck::EdgeMismatch { missing, extra }
    }
}

/// Whether the alternating graph of `w` is exactly `g`, matching letters to
/// vertices by display name.
pub fn is_representant(w: &Word, g: &Graph) -> bool {
    check_representant(w, g).is_ok()
}

/// `Some(m)` when every letter occurs exactly `m` times. The empty word has
/// no uniformity.
pub fn uniformity(w: &Word) -> Option<usize> {
    let mut counts: BTreeMap<Letter, usize> = BTreeMap::new();
    for &l in &w.letters {
        *counts.entry(l).or_default() += 1;
    }
    let mut values = counts.values();
    let m = *values.next()?;
    values.all(|&c| c == m).then_some(m)
}

/// Moves the first letter to the end.
pub fn cyclic_shift(w: &Word) -> Word {
    let mut letters = w.letters.clone();
    if !letters.is_empty() {
        letters.rotate_left(1);
    }
    Word {
        letters,
        names: w.names.clone(),
    }
}

/// Contiguous occurrence of `factor` in `w`.
pub fn occurs_as_factor(w: &Word, factor: &Word) -> bool {
    factor.is_empty()
        || w.letters
            .windows(factor.len())
            .any(|win| win == factor.letters.as_slice())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantifier {
    ForAll,
    Exists,
}

/// A statement `Q(a - S0 < S1 - a)` about the gaps between cyclically
/// consecutive occurrences of the anchor `a`.
///
/// A gap satisfies the statement when, after erasing everything outside
/// `{a} ∪ S0 ∪ S1`, each letter of `S0 ∪ S1` occurs in it exactly once and
/// every letter of `S0` precedes every letter of `S1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderStatement {
    anchor: Letter,
    before: BTreeSet<Letter>,
    after: BTreeSet<Letter>,
    quantifier: Quantifier,
}

impl OrderStatement {
    pub fn new(
        quantifier: Quantifier,
        anchor: Letter,
        before: impl IntoIterator<Item = Letter>,
        after: impl IntoIterator<Item = Letter>,
    ) -> Result<Self> {
        let before: BTreeSet<Letter> = before.into_iter().collect();
        let after: BTreeSet<Letter> = after.into_iter().collect();
        if before.contains(&anchor) || after.contains(&anchor) {
            return Err(Error::invalid(format!(
                "anchor {anchor} appears in its own letter sets"
            )));
        }
        if !before.is_disjoint(&after) {
            return Err(Error::invalid("before and after sets overlap"));
        }
        Ok(OrderStatement {
            anchor,
            before,
            after,
            quantifier,
        })
    }

    pub fn forall(
        anchor: Letter,
        before: impl IntoIterator<Item = Letter>,
        after: impl IntoIterator<Item = Letter>,
    ) -> Result<Self> {
        Self::new(Quantifier::ForAll, anchor, before, after)
    }

    pub fn exists(
        anchor: Letter,
        before: impl IntoIterator<Item = Letter>,
        after: impl IntoIterator<Item = Letter>,
    ) -> Result<Self> {
        Self::new(Quantifier::Exists, anchor, before, after)
    }

    pub fn anchor(&self) -> Letter {
        self.anchor
    }

    pub fn before(&self) -> &BTreeSet<Letter> {
        &self.before
    }

    pub fn after(&self) -> &BTreeSet<Letter> {
        &self.after
    }

    pub fn quantifier(&self) -> Quantifier {
        self.quantifier
    }

    /// The letters the statement looks at: anchor, before and after sets.
    pub fn scope(&self) -> BTreeSet<Letter> {
        let mut s: BTreeSet<Letter> = self.before.union(&self.after).copied().collect();
        s.insert(self.anchor);
        s
    }

    /// Gap predicate on the erased contents strictly between two anchors.
    pub fn gap_satisfies(&self, gap: &[Letter]) -> bool {
        if gap.len() != self.before.len() + self.after.len() {
            return false;
        }
        let (head, tail) = gap.split_at(self.before.len());
        let head: BTreeSet<Letter> = head.iter().copied().collect();
        let tail: BTreeSet<Letter> = tail.iter().copied().collect();
        head == self.before && tail == self.after
    }
}

/// Evaluates `s` on `w` read as a cyclic word.
///
/// `w` must be uniform and contain the anchor, and both letter sets must be
/// drawn from its alphabet. With a single anchor occurrence the one gap runs
/// all the way around the word.
pub fn order_statement_holds(w: &Word, s: &OrderStatement) -> Result<bool> {
    if uniformity(w).is_none() {
        return Err(Error::invalid("order statements are defined on uniform words"));
    }
    let alphabet = w.alphabet();
    if !alphabet.contains(&s.anchor) {
        return Err(Error::invalid(format!(
            "anchor {} does not occur in the word",
            s.anchor
        )));
    }
    if let Some(l) = s.before.union(&s.after).find(|l| !alphabet.contains(l)) {
        return Err(Error::invalid(format!("letter {l} does not occur in the word")));
    }
    let erased = erase(w, &s.scope()).letters;
    let first = erased.iter().position(|&l| l == s.anchor).expect("anchor occurs");
    // Rotate so the erased word starts at an anchor; gaps are then the runs
    // between consecutive anchors, the last one wrapping to the start.
    let mut rotated = erased[first..].to_vec();
    rotated.extend_from_slice(&erased[..first]);
    let mut gaps = rotated[1..].split(|&l| l == s.anchor);
    Ok(match s.quantifier {
        Quantifier::ForAll => gaps.all(|g| s.gap_satisfies(g)),
        Quantifier::Exists => gaps.any(|g| s.gap_satisfies(g)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{clique, figure1_left, petersen};
    use alloc::vec;

    const PETERSEN_WORD: &str = "027618596382430172965749083451";

    fn w(s: &str) -> Word {
        Word::from_digits(s).unwrap()
    }

    fn set(ls: &[Letter]) -> BTreeSet<Letter> {
        ls.iter().copied().collect()
    }

    #[test]
    fn erase_examples() {
        assert_eq!(erase(&w("12312434"), &set(&[1, 4])), w("1144"));
        assert!(erase(&w("12312434"), &set(&[])).is_empty());
        let word = w("12312434");
        assert_eq!(erase(&word, &word.alphabet()), word);
    }

    #[test]
    fn alternation_examples() {
        let word = w("12312434");
        assert!(alternates(&word, 1, 2).unwrap());
        assert!(!alternates(&word, 2, 4).unwrap());
        assert!(!alternates(&word, 1, 4).unwrap());
        assert!(alternates(&w("01"), 0, 1).unwrap());
        assert!(!alternates(&w("01"), 0, 7).unwrap());
        assert!(alternates(&word, 3, 3).is_err());
    }

    #[test]
    fn figure1_alternating_graphs() {
        let g = alternating_graph(&w("12312434"));
        let edges: Vec<_> = g
            .edges()
            .map(|(u, v)| (g.label(u).into_owned(), g.label(v).into_owned()))
            .collect();
        let expect = [("1", "2"), ("1", "3"), ("2", "3"), ("3", "4")];
        assert_eq!(edges.len(), expect.len());
        for (e, (a, b)) in edges.iter().zip(expect) {
            assert_eq!((e.0.as_str(), e.1.as_str()), (a, b));
        }
        assert!(is_representant(&w("12312434"), &figure1_left()));
        assert_eq!(alternating_graph(&w(PETERSEN_WORD)), petersen());
        assert!(is_representant(&w(PETERSEN_WORD), &petersen()));
    }

    #[test]
    fn repeated_single_letter() {
        let g = alternating_graph(&w("00"));
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn representant_diagnostics() {
        let k3 = clique(3).unwrap().with_labels(["1", "2", "3"]).unwrap();
        match check_representant(&w("1234"), &k3) {
            RepresentantCheck::AlphabetMismatch {
                missing_letters,
                extra_letters,
            } => {
                assert!(missing_letters.is_empty());
                assert_eq!(extra_letters, ["4"]);
            }
            other => panic!("unexpected {other:?}"),
        }
        match check_representant(&w("123"), &figure1_left()) {
            RepresentantCheck::AlphabetMismatch { missing_letters, .. } => assert_eq!(missing_letters, ["4"]),
            other => panic!("unexpected {other:?}"),
        }
        match check_representant(&w("1234"), &figure1_left()) {
            RepresentantCheck::EdgeMismatch { missing, extra } => {
                assert!(missing.is_empty());
                assert_eq!(extra.len(), 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn uniformity_examples() {
        assert_eq!(uniformity(&w("12312434")), Some(2));
        assert_eq!(uniformity(&w(PETERSEN_WORD)), Some(3));
        assert_eq!(uniformity(&Word::new(vec![0, 0, 1])), None);
        assert_eq!(uniformity(&Word::empty()), None);
    }

    #[test]
    fn cyclic_shift_examples() {
        assert_eq!(cyclic_shift(&w("123")), w("231"));
        assert_eq!(cyclic_shift(&Word::empty()), Word::empty());
        let p = w(PETERSEN_WORD);
        assert_eq!(alternating_graph(&cyclic_shift(&p)), alternating_graph(&p));
    }

    #[test]
    fn factor_examples() {
        let word = w("12312434");
        assert!(occurs_as_factor(&word, &w("124")));
        assert!(!occurs_as_factor(&word, &w("44")));
        assert!(occurs_as_factor(&word, &Word::empty()));
        assert!(occurs_as_factor(&Word::empty(), &Word::empty()));
        assert!(!occurs_as_factor(&Word::empty(), &w("1")));
    }

    #[test]
    fn order_statement_examples() {
        // a=0, b=1, c=2 in "abcabc"
        let abc = w("012012");
        assert!(order_statement_holds(&abc, &OrderStatement::forall(0, [1], [2]).unwrap()).unwrap());
        assert!(!order_statement_holds(&abc, &OrderStatement::exists(0, [2], [1]).unwrap()).unwrap());
        assert!(order_statement_holds(&abc, &OrderStatement::forall(0, [], []).unwrap()).unwrap());
        assert!(order_statement_holds(&w("0"), &OrderStatement::forall(0, [], []).unwrap()).unwrap());
    }

    #[test]
    fn order_statement_single_occurrence_wraps() {
        // One anchor: the gap is the rest of the cyclic word.
        let abc = w("012");
        assert!(order_statement_holds(&abc, &OrderStatement::forall(0, [1], [2]).unwrap()).unwrap());
        assert!(!order_statement_holds(&abc, &OrderStatement::forall(0, [2], [1]).unwrap()).unwrap());
        let bca = w("120");
        assert!(order_statement_holds(&bca, &OrderStatement::forall(0, [1], [2]).unwrap()).unwrap());
    }

    #[test]
    fn order_statement_exactly_once() {
        // Gaps of 0 are "11" and "22": no gap holds one 1 and one 2.
        let word = w("011022");
        assert!(!order_statement_holds(&word, &OrderStatement::forall(0, [1], [2]).unwrap()).unwrap());
        assert!(!order_statement_holds(&word, &OrderStatement::exists(0, [1], [2]).unwrap()).unwrap());
        // Gaps "12" and "21": exists holds for both orders, forall for neither.
        let word = w("012021");
        assert!(order_statement_holds(&word, &OrderStatement::exists(0, [1], [2]).unwrap()).unwrap());
        assert!(order_statement_holds(&word, &OrderStatement::exists(0, [2], [1]).unwrap()).unwrap());
        assert!(!order_statement_holds(&word, &OrderStatement::forall(0, [1], [2]).unwrap()).unwrap());
    }

    #[test]
    fn order_statement_errors() {
        assert!(OrderStatement::forall(0, [0], [1]).is_err());
        assert!(OrderStatement::forall(0, [1], [1]).is_err());
        let s = OrderStatement::forall(0, [1], [2]).unwrap();
        assert!(order_statement_holds(&w("0012"), &s).is_err());
        assert!(order_statement_holds(&w("12"), &s).is_err());
        assert!(order_statement_holds(&w("01"), &s).is_err());
    }
}
