use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wordrep_core::decide::{
    decide_representable, Budget, Strategy, Verdict, DEFAULT_ORIENTATION_BUDGET, DEFAULT_WORD_BUDGET,
};
use wordrep_core::families;
use wordrep_core::line::{iterate_line_graph, DEFAULT_VERTEX_BUDGET};
use wordrep_core::paperlab::{LabConfig, Suite, SuiteReport};
use wordrep_core::search::DEFAULT_EMBED_BUDGET;
use wordrep_core::words::alternating_graph;
use wordrep_core::{Error, Graph};

use crate::edgelist::{parse_edge_list, write_edge_list};
use crate::report::{certificate_json, certificate_text, suite_text, suites_json};
use crate::wordtext::parse_word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;
pub const EXIT_UNKNOWN: i32 = 4;
pub const EXIT_SKIPPED: i32 = 5;

pub const ENV_ORIENTATION_BUDGET: &str = "WORDREP_ORIENTATION_BUDGET";
pub const ENV_WORD_BUDGET: &str = "WORDREP_WORD_BUDGET";
pub const ENV_EMBED_BUDGET: &str = "WORDREP_EMBED_BUDGET";
pub const ENV_VERTEX_BUDGET: &str = "WORDREP_VERTEX_BUDGET";

const AFTER_HELP: &str = "\
Exit codes:
  0  success; graph representable; all checks passed
  1  graph non-representable; a check failed
  2  usage error or malformed input
  3  line-graph vertex budget exceeded
  4  decision unknown (search budget exhausted)
  5  some checks skipped for budget

Budgets are node-expansion counts. Defaults can be overridden with
WORDREP_ORIENTATION_BUDGET, WORDREP_WORD_BUDGET, WORDREP_EMBED_BUDGET and
WORDREP_VERTEX_BUDGET; command-line flags take precedence.

Graphs are read and written in the edge-list format:
  p <n> <m>
  e <u> <v>      (m lines, 0-indexed, u < v, sorted)
  c <v> <label>  (optional display labels)

Examples:
  wordrep gen wheel 5 | wordrep decide --strategy orientation
  wordrep gen wheel 4 | wordrep linegraph | wordrep decide --budget 100000000
  wordrep altgraph 12312434
  wordrep verify --suite all --seed 1 --budget 100000000";

#[derive(Parser, Debug)]
#[command(
    name = "wordrep",
    version,
    about = "Word-representable graphs: generators, line graphs, deciders and experiment suites"
)]
#[command(after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated graph as an edge list.
    Gen {
        family: Family,
        /// Size or index: n for cycle/path/clique/wheel, k for star, i for minimal-nonrep and fig6.
        params: Vec<usize>,
    },
    /// Write the k-th iterated line graph of an edge list.
    Linegraph {
        /// Edge-list file; standard input when absent or `-`.
        input: Option<PathBuf>,
        #[arg(short, long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        /// Largest vertex count any iterate may reach.
        #[arg(long)]
        vertex_budget: Option<usize>,
    },
    /// Write the alternating graph of a word.
    Altgraph {
        /// The word; standard input when absent or `-`.
        word: Option<String>,
    },
    /// Decide whether an edge-list graph is word-representable.
    Decide {
        /// Edge-list file; standard input when absent or `-`.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        /// Largest uniformity tried by word search.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        k_max: u32,
        #[command(flatten)]
        budgets: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run experiment suites.
    Verify {
        /// Suite to run; repeatable or comma-separated. `all` runs every suite
        /// except petersen-2uniform.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        #[command(flatten)]
        budgets: BudgetArgs,
        #[arg(long)]
        embed_budget: Option<u64>,
        #[arg(long)]
        vertex_budget: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Trials per randomised property check.
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        threads: Option<u32>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Expansion budget for both searches.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    orientation_budget: Option<u64>,
    #[arg(long)]
    word_budget: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Cycle,
    Path,
    Clique,
    Star,
    Claw,
    Wheel,
    Petersen,
    MinimalNonrep,
    Fig6,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Orientation,
    WordSearch,
    Auto,
}

/// A failure that ends the command with an exit code and a message.
#[derive(Debug)]
struct Exit(i32, String);

fn usage(msg: impl Into<String>) -> Exit {
    Exit(EXIT_USAGE, msg.into())
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen { family, params } => gen(family, &params).map(|g| (write_edge_list(&g), EXIT_OK)),
        Command::Linegraph {
            input,
            k,
            vertex_budget,
        } => linegraph(stdin, input, k, vertex_budget),
        Command::Altgraph { word } => altgraph(stdin, word),
        Command::Decide {
            input,
            strategy,
            k_max,
            budgets,
            json,
        } => decide(stdin, input, strategy, k_max, &budgets, json),
        Command::Verify {
            suite,
            budgets,
            embed_budget,
            vertex_budget,
            seed,
            trials,
            threads,
            json,
        } => {
            let cfg = LabConfig {
                budget: budgets.resolve(),
                embed_budget: embed_budget
                    .or_else(|| env_number(ENV_EMBED_BUDGET))
                    .unwrap_or(DEFAULT_EMBED_BUDGET),
                vertex_budget: vertex_budget
                    .or_else(|| env_number(ENV_VERTEX_BUDGET))
                    .unwrap_or(DEFAULT_VERTEX_BUDGET),
                seed,
                trials: trials as usize,
            };
            verify(&suite, &cfg, threads, json)
        }
    };
    match result {
        Ok((out, code)) => {
            if stdout.write_all(out.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(Exit(code, msg)) => {
            let _ = writeln!(stderr, "wordrep: {msg}");
            code
        }
    }
}

fn env_number<T: std::str::FromStr>(name: &str) -> Option<T> {
    std::env::var(name).ok().and_then(|v| v.trim().parse().ok())
}

impl BudgetArgs {
    fn resolve(&self) -> Budget {
        Budget {
            orientation: self
                .orientation_budget
                .or(self.budget)
                .or_else(|| env_number(ENV_ORIENTATION_BUDGET))
                .unwrap_or(DEFAULT_ORIENTATION_BUDGET),
            word: self
                .word_budget
                .or(self.budget)
                .or_else(|| env_number(ENV_WORD_BUDGET))
                .unwrap_or(DEFAULT_WORD_BUDGET),
        }
    }
}

fn read_input(stdin: &mut dyn Read, path: Option<PathBuf>) -> Result<String, Exit> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(&p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
        }
        _ => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| usage(format!("standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn read_graph(stdin: &mut dyn Read, path: Option<PathBuf>) -> Result<Graph, Exit> {
    let text = read_input(stdin, path)?;
    parse_edge_list(&text).map_err(|e| usage(format!("malformed edge list: {e}")))
}

fn gen(family: Family, params: &[usize]) -> Result<Graph, Exit> {
    let one = || match params {
        [p] => Ok(*p),
        _ => Err(usage(format!("{family:?} takes exactly one parameter").to_lowercase())),
    };
    let none = || match params {
        [] => Ok(()),
        _ => Err(usage(format!("{family:?} takes no parameters").to_lowercase())),
    };
    let g = match family {
        Family::Cycle => families::cycle(one()?),
        Family::Path => families::path(one()?),
        Family::Clique => families::clique(one()?),
        Family::Star => families::star(one()?),
        Family::Wheel => families::wheel(one()?),
        Family::MinimalNonrep => families::minimal_nonrep(one()?),
        Family::Fig6 => families::fig6_graph(one()?),
        Family::Claw => none().map(|_| families::claw()).map(Ok)?,
        Family::Petersen => none().map(|_| families::petersen()).map(Ok)?,
    };
    g.map_err(|e| usage(e.to_string()))
}

fn linegraph(
    stdin: &mut dyn Read,
    input: Option<PathBuf>,
    k: u32,
    vertex_budget: Option<usize>,
) -> Result<(String, i32), Exit> {
    let g = read_graph(stdin, input)?;
    let budget = vertex_budget
        .or_else(|| env_number(ENV_VERTEX_BUDGET))
        .unwrap_or(DEFAULT_VERTEX_BUDGET);
    // Labels name the edge of the previous iterate each vertex came from;
    // nesting them all the way back would double their length per step.
    let step = |g: &Graph, k: usize| match iterate_line_graph(g, k, budget) {
        Ok(l) => Ok(l),
        Err(e @ Error::ResourceLimit { .. }) => Err(Exit(EXIT_OVERFLOW, e.to_string())),
        Err(e) => Err(usage(e.to_string())),
    };
    let mut h = g;
    if k > 1 {
        h = step(&h, k as usize - 1)?.without_labels();
    }
    Ok((write_edge_list(&step(&h, 1)?), EXIT_OK))
}

fn altgraph(stdin: &mut dyn Read, word: Option<String>) -> Result<(String, i32), Exit> {
    let text = match word {
        Some(w) if w != "-" => w,
        _ => read_input(stdin, None)?,
    };
    let w = parse_word(&text).map_err(|e| usage(format!("malformed word: {e}")))?;
    Ok((write_edge_list(&alternating_graph(&w)), EXIT_OK))
}

fn decide(
    stdin: &mut dyn Read,
    input: Option<PathBuf>,
    strategy: StrategyArg,
    k_max: u32,
    budgets: &BudgetArgs,
    json: bool,
) -> Result<(String, i32), Exit> {
    let g = read_graph(stdin, input)?;
    let strategy = match strategy {
        StrategyArg::Orientation => Strategy::Orientation,
        StrategyArg::WordSearch => Strategy::WordSearch { k_max: k_max as usize },
        StrategyArg::Auto => Strategy::Auto,
    };
    let cert = decide_representable(&g, strategy, budgets.resolve());
    let out = if json {
        certificate_json(&cert)
    } else {
        certificate_text(&cert)
    };
    let code = match cert.verdict {
        Verdict::Representable => EXIT_OK,
        Verdict::NonRepresentable => EXIT_NEGATIVE,
        Verdict::Unknown => EXIT_UNKNOWN,
    };
    Ok((out, code))
}

fn parse_suites(names: &[String]) -> Result<Vec<Suite>, Exit> {
    let mut suites = Vec::new();
    for name in names {
        match name.as_str() {
            "all" => suites.extend(Suite::DEFAULT),
            other => suites.push(Suite::from_name(other).ok_or_else(|| {
                let known: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                usage(format!("unknown suite `{other}`; expected all, {}", known.join(", ")))
            })?),
        }
    }
    suites.sort();
    suites.dedup();
    Ok(suites)
}

/// Runs `suites` on up to `threads` workers. Reports come back in the order
/// of `suites` whatever the scheduling.
pub fn run_suites(suites: &[Suite], cfg: &LabConfig, threads: usize) -> Vec<wordrep_core::Result<SuiteReport>> {
    let slots: Vec<Mutex<Option<wordrep_core::Result<SuiteReport>>>> =
        suites.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..threads.clamp(1, suites.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(suite) = suites.get(i) else { break };
                *slots[i].lock().unwrap() = Some(suite.run(cfg));
            });
        }
    });
    slots
        .into_iter()
        .map(|s| s.into_inner().unwrap().expect("every slot filled"))
        .collect()
}

fn verify(names: &[String], cfg: &LabConfig, threads: Option<u32>, json: bool) -> Result<(String, i32), Exit> {
    let suites = parse_suites(names)?;
    let threads = threads
        .map(|t| t as usize)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let reports = run_suites(&suites, cfg, threads)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| usage(e.to_string()))?;
    let out = if json {
        suites_json(&reports)
    } else {
        reports.iter().map(suite_text).collect()
    };
    let code = if reports.iter().any(SuiteReport::has_failures) {
        EXIT_NEGATIVE
    } else if reports.iter().any(SuiteReport::has_skips) {
        EXIT_SKIPPED
    } else {
        EXIT_OK
    };
    Ok((out, code))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn suite_names() {
        let all = parse_suites(&["all".into()]).unwrap();
        assert_eq!(all, Suite::DEFAULT);
        let some = parse_suites(&["wheels".into(), "figure1".into(), "wheels".into()]).unwrap();
        assert_eq!(some, [Suite::Figure1, Suite::Wheels]);
        assert!(parse_suites(&["nope".into()]).is_err());
    }

    #[test]
    fn budget_precedence() {
        let b = BudgetArgs {
            budget: Some(10),
            orientation_budget: Some(3),
            word_budget: None,
        };
        assert_eq!(
            b.resolve(),
            Budget {
                orientation: 3,
                word: 10
            }
        );
    }
}
