//! Word-representable graphs.
//!
//! A graph is word-representable when some word over its vertex set makes
//! two letters alternate exactly when the corresponding vertices are
//! adjacent. This crate holds the pure, allocation-only parts of the
//! toolkit: graphs and their generators, the line-graph operator, induced
//! subgraph and isomorphism search, words and alternation, the two
//! representability deciders, and the reproducible experiment suites.
//!
//! Everything here is `no_std` + `alloc`. Text formats and the command-line
//! tool live in the `wordrep` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;

pub mod decide;
pub mod families;
pub mod graph;
pub mod line;
pub mod paperlab;
pub mod search;
pub mod words;

pub use error::{Error, Result};
pub use graph::{Graph, LabelMap};
pub use words::{Letter, OrderStatement, Quantifier, Word};
