//! Word text format.
//!
//! A word is either a compact string with one character per letter
//! (`12312434`) or whitespace-separated tokens (`i0 e1 i0 e2`). An optional
//! first line starting with `#` declares the alphabet as tokens.
//!
//! When every token is a decimal number the letters are those numbers.
//! Otherwise letters are numbered in declaration order (or sorted token
//! order without a declaration) and keep the tokens as names.

use std::collections::{BTreeMap, BTreeSet};

use wordrep_core::{Letter, Word};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum WordError {
    #[error("letter `{0}` is not in the declared alphabet")]
    Undeclared(String),
    #[error("declared letter `{0}` does not occur in the word")]
    Unused(String),
    #[error("letter `{0}` declared twice")]
    DuplicateDeclaration(String),
    #[error("letter `{0}` is out of range")]
    OutOfRange(String),
}

pub fn parse_word(text: &str) -> Result<Word, WordError> {
    let mut body = text.trim_start();
    let mut declared: Option<Vec<&str>> = None;
    if let Some(rest) = body.strip_prefix('#') {
        let (decl, tail) = rest.split_once('\n').unwrap_or((rest, ""));
        let tokens: Vec<&str> = decl.split_whitespace().collect();
        let mut seen = BTreeSet::new();
        for t in &tokens {
            if !seen.insert(*t) {
                return Err(WordError::DuplicateDeclaration(t.to_string()));
            }
        }
        declared = Some(tokens);
        body = tail;
    }

    let mut tokens: Vec<String> = body.split_whitespace().map(str::to_string).collect();
    let multi_char_alphabet = declared
        .as_ref()
        .is_some_and(|d| d.iter().any(|t| t.chars().count() > 1));
    if tokens.len() == 1 && !multi_char_alphabet {
        tokens = tokens[0].chars().map(String::from).collect();
    }

    if let Some(decl) = &declared {
        let used: BTreeSet<&str> = tokens.iter().map(String::as_str).collect();
        if let Some(t) = tokens.iter().find(|t| !decl.contains(&t.as_str())) {
            return Err(WordError::Undeclared(t.clone()));
        }
        if let Some(t) = decl.iter().find(|t| !used.contains(*t)) {
            return Err(WordError::Unused(t.to_string()));
        }
    }

    let numeric = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if tokens.iter().all(|t| numeric(t)) && declared.as_ref().is_none_or(|d| d.iter().all(|t| numeric(t))) {
        let letters = tokens
            .iter()
            .map(|t| t.parse::<Letter>().map_err(|_| WordError::OutOfRange(t.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        // Keep spellings like `07` that do not survive a round trip through
        // the number.
        let names: BTreeMap<Letter, String> = tokens
            .iter()
            .zip(&letters)
            .filter(|(t, l)| **t != l.to_string())
            .map(|(t, &l)| (l, t.clone()))
            .collect();
        return Ok(Word::new(letters).with_names(names));
    }

    let order: Vec<String> = match declared {
        Some(d) => d.into_iter().map(str::to_string).collect(),
        None => tokens.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect(),
    };
    let ids: BTreeMap<&str, Letter> = order
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_str(), i as Letter))
        .collect();
    let letters = tokens.iter().map(|t| ids[t.as_str()]).collect();
    let names = order
        .iter()
        .enumerate()
        .map(|(i, t)| (i as Letter, t.clone()))
        .collect();
    Ok(Word::new(letters).with_names(names))
}

/// Compact when every letter's name is one character, tokens otherwise. A
/// single multi-character token gets an alphabet line so it is not read
/// back as a compact word. Names containing whitespace do not round-trip.
pub fn format_word(w: &Word) -> String {
    let names: Vec<_> = w.letters().iter().map(|&l| w.name(l)).collect();
    match names.as_slice() {
        _ if names.iter().all(|n| n.chars().count() == 1) => names.concat(),
        [only] => format!("# {only}\n{only}"),
        _ => names.join(" "),
    }
}

/// Always space-separated, whatever the names look like.
pub fn format_word_tokens(w: &Word) -> String {
    w.letters().iter().map(|&l| w.name(l)).collect::<Vec<_>>().join(" ")
}
