mod suites;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use cubeslides::bijection::{phi_forward, phi_inverse, SignedSection};
use cubeslides::slide_graph::{self, census_csv, export_dot};
use cubeslides::slides::{
    normalize_downward, search_dependent_slides, search_excess_slides, SearchConfig, WitnessRecord,
};
use cubeslides::tree::{
    decode, for_each_spanning_tree, formula_count, kirchhoff_count, Payload, Scale, SeededSource,
    TreeRecord, TreeSampler, KIRCHHOFF_MAX_DIM, SAMPLER_ID,
};
use cubeslides::{Error, SpanningTree};

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(
    name = "cubeslides",
    version,
    about = "Edge slides on spanning trees of hypercubes"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "CUBESLIDES_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the spanning trees of Q_n.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=8))]
        n: u8,
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Allow exhaustive enumeration of Q_4.
        #[arg(long)]
        expensive: bool,
    },
    /// List every spanning tree of Q_n in canonical order.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        n: u8,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// Run the invariant suites.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=3))]
        n: u8,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Print a table of results to standard error.
        #[arg(long)]
        verbose: bool,
    },
    /// Build the edge-slide graph and report its components.
    SlideGraph {
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=3))]
        n: u8,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        census: Option<PathBuf>,
    },
    /// Map a tree of Q_3 to its signed section, or back.
    Bijection {
        /// Tree given by its 12-bit edge mask.
        #[arg(long, conflicts_with = "stdin_json")]
        tree: Option<u64>,
        /// Read a tree record (or, with --inverse, a signed section) from stdin.
        #[arg(long)]
        stdin_json: bool,
        #[arg(long, requires = "stdin_json")]
        inverse: bool,
    },
    /// Slide downward until the tree is upright.
    Normalize {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=8))]
        n: u8,
        /// Tree record as JSON.
        #[arg(long)]
        tree: String,
    },
    /// Emit uniformly random spanning trees.
    Sample {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=8))]
        n: u8,
        #[arg(long)]
        count: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Search for trees where the small-cube slide lemmas fail.
    Search {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_parser = clap::value_parser!(u8).range(4..=5))]
        n: u8,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Only accept directions with exactly this many edges.
        #[arg(long)]
        target_k: Option<usize>,
        #[arg(long, default_value_t = 32)]
        walk_length: u64,
        /// Also write the witness to this file.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Formula,
    Kirchhoff,
    Enumerate,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Mask,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Weights,
    Slides,
    Retraction,
    Bijection,
    Graph,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Excess,
    Dependent,
}

/// Bad input detected after argument parsing; exits like a usage error.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NOT_FOUND: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::from(EXIT_FAILED)
            }
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    let mut out = io::stdout().lock();
    match command {
        Command::Count {
            n,
            method,
            expensive,
        } => count(&mut out, n as usize, method, expensive),
        Command::Enumerate { n, format } => {
            for_each_spanning_tree(n as usize, Scale::Desk, |t| {
                let line = match format {
                    Format::Mask => match cubeslides::tree::encode(t) {
                        Payload::Mask(m) => m.to_string(),
                        Payload::Indices(_) => unreachable!("n <= 3"),
                    },
                    Format::Jsonl => tree_json(t).to_string(),
                };
                // A closed pipe ends the listing early, which is fine.
                let _ = writeln!(out, "{line}");
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, verbose, .. } => {
            let results = suites::run(suite);
            for r in &results {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
            if verbose {
                suites::print_table(&results);
            }
            Ok(if results.iter().all(|r| r.pass) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED)
            })
        }
        Command::SlideGraph { dot, census, .. } => {
            let graph = slide_graph::build(3)?;
            let comps = slide_graph::components(&graph);
            if let Some(path) = dot {
                fs::write(&path, export_dot(&graph, None))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if let Some(path) = census {
                fs::write(&path, census_csv(&comps))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            for c in &comps {
                let line = json!({
                    "component_id": c.id,
                    "signature": c.signature,
                    "size": c.size,
                    "q4_certified": c.q4_certified,
                    "upright_count": c.upright_count,
                });
                writeln!(out, "{line}")?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bijection {
            tree,
            stdin_json,
            inverse,
        } => bijection(&mut out, tree, stdin_json, inverse),
        Command::Normalize { n, tree } => {
            let record: TreeRecord =
                serde_json::from_str(&tree).map_err(|e| usage(format!("--tree: {e}")))?;
            if record.n != n as usize {
                return Err(usage(format!("--tree has n = {}, expected {n}", record.n)));
            }
            let tree = record
                .to_tree()
                .map_err(|e| usage(format!("--tree: {e}")))?;
            let done = normalize_downward(&tree)?;
            let steps: Vec<_> = done
                .steps
                .iter()
                .map(|m| json!({"edge": [m.edge.lower.0, m.edge.dir], "dir": m.slide_dir}))
                .collect();
            let line = json!({
                "tree": tree_json(&done.tree),
                "steps": steps,
                "upright": done.tree.is_upright(),
            });
            writeln!(out, "{line}")?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sample { n, count, seed } => {
            let root = SeededSource::new(seed);
            let lines: Vec<String> = (0..count)
                .into_par_iter()
                .map(|k| {
                    let tree = TreeSampler::new(n as usize, root.split(k))
                        .expect("n validated by the parser")
                        .sample();
                    json!({
                        "sampler": SAMPLER_ID,
                        "seed": seed,
                        "index": k,
                        "tree": tree_json(&tree),
                    })
                    .to_string()
                })
                .collect();
            for line in lines {
                writeln!(out, "{line}")?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Search {
            kind,
            n,
            budget,
            seed,
            target_k,
            walk_length,
            fixture,
        } => {
            if walk_length == 0 {
                return Err(usage("--walk-length must be positive"));
            }
            let config = SearchConfig {
                budget,
                seed,
                walk_length,
                target_k,
            };
            let found = match kind {
                Kind::Excess => search_excess_slides(n as usize, config)
                    .map(|w| WitnessRecord::excess(&w, config)),
                Kind::Dependent => search_dependent_slides(n as usize, config)
                    .map(|w| WitnessRecord::dependent(&w, config)),
            };
            let record = match found {
                Ok(r) => r,
                Err(Error::SearchExhausted { examined }) => {
                    eprintln!("no witness among {examined} candidates");
                    return Ok(ExitCode::from(EXIT_NOT_FOUND));
                }
                Err(e) => return Err(e.into()),
            };
            if !record.verify()? {
                bail!("witness failed independent re-verification");
            }
            if let Some(path) = fixture {
                let mut text = serde_json::to_string_pretty(&record)?;
                text.push('\n');
                fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
            }
            writeln!(out, "{}", serde_json::to_string(&record)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn tree_json(tree: &SpanningTree) -> serde_json::Value {
    serde_json::to_value(TreeRecord::full(tree)).expect("plain data")
}

fn count(
    out: &mut impl Write,
    n: usize,
    method: Option<Method>,
    expensive: bool,
) -> anyhow::Result<ExitCode> {
    let scale = if expensive {
        Scale::Expensive
    } else {
        Scale::Desk
    };
    let enumerate = || -> anyhow::Result<String> {
        let mut total = 0u64;
        for_each_spanning_tree(n, scale, |_| total += 1).map_err(|e| usage(e.to_string()))?;
        Ok(total.to_string())
    };
    let values: Vec<(&str, String)> = match method {
        Some(Method::Formula) => vec![("formula", formula_count(n).to_string())],
        Some(Method::Kirchhoff) => vec![(
            "kirchhoff",
            kirchhoff_count(n)
                .map_err(|e| usage(e.to_string()))?
                .to_string(),
        )],
        Some(Method::Enumerate) => vec![("enumerate", enumerate()?)],
        None => {
            let mut v = vec![("formula", formula_count(n).to_string())];
            if n <= KIRCHHOFF_MAX_DIM {
                v.push(("kirchhoff", kirchhoff_count(n)?.to_string()));
            }
            if n <= 3 || (n == 4 && expensive) {
                v.push(("enumerate", enumerate()?));
            }
            v
        }
    };
    let first = &values[0].1;
    if let Some((name, other)) = values.iter().find(|(_, v)| v != first) {
        eprintln!(
            "methods disagree: {} gives {first}, {name} gives {other}",
            values[0].0
        );
        return Ok(ExitCode::from(EXIT_FAILED));
    }
    writeln!(out, "{first}")?;
    Ok(ExitCode::SUCCESS)
}

fn bijection(
    out: &mut impl Write,
    mask: Option<u64>,
    stdin_json: bool,
    inverse: bool,
) -> anyhow::Result<ExitCode> {
    let mut input = String::new();
    if stdin_json {
        io::stdin().read_to_string(&mut input)?;
    }
    if inverse {
        let signed: SignedSection =
            serde_json::from_str(&input).map_err(|e| usage(format!("signed section: {e}")))?;
        let tree = phi_inverse(&signed).map_err(|e| usage(e.to_string()))?;
        writeln!(out, "{}", tree_json(&tree))?;
        return Ok(ExitCode::SUCCESS);
    }
    let tree = match mask {
        Some(m) => decode(3, &Payload::Mask(m)).map_err(|e| usage(format!("--tree: {e}")))?,
        None if stdin_json => {
            let record: TreeRecord =
                serde_json::from_str(&input).map_err(|e| usage(format!("tree record: {e}")))?;
            record
                .to_tree()
                .map_err(|e| usage(format!("tree record: {e}")))?
        }
        None => return Err(usage("give --tree MASK or --stdin-json")),
    };
    let signed = phi_forward(&tree).map_err(|e| usage(e.to_string()))?;
    writeln!(out, "{}", serde_json::to_string(&signed)?)?;
    Ok(ExitCode::SUCCESS)
}
