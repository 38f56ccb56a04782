//! Text formats, reports and the command-line front end for `wordrep_core`.

pub mod cli;
pub mod edgelist;
pub mod report;
pub mod wordtext;
