//! `mdcanon` — modular decomposition, cograph and permutation-graph
//! canonization from the command line.
//!
//! Exit codes: 0 success (and "isomorphic" / "is a cograph"), 1 negative
//! decision (not isomorphic / not a cograph), 2 input or class errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use mdcanon::canon::{canonize, CanonError};
use mdcanon::decomposition::{md_tree, quotient};
use mdcanon::generate::{random_cograph, random_graph, random_permutation_graph};
use mdcanon::realizer::find_realizers;
use mdcanon::{cotree, oracle, serialize_edge_list, serialize_graph6, Graph};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mdcanon", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Edge list: "n m" header, then "u v" lines.
    El,
    /// graph6 ASCII encoding.
    G6,
}

#[derive(Args)]
struct InputArgs {
    /// Input file, or "-" for stdin.
    path: String,
    /// Input format; by default guessed from the file extension (.g6 reads
    /// as graph6, anything else as edge list).
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the modular decomposition tree as JSON.
    Mdtree(InputArgs),
    /// Print the modular contraction as an edge list.
    Quotient {
        #[command(flatten)]
        input: InputArgs,
        /// Emit JSON with classes and edges instead.
        #[arg(long)]
        json: bool,
    },
    /// Print the decomposition levels of every vertex, or the smallest
    /// module containing a pair.
    Modules {
        #[command(flatten)]
        input: InputArgs,
        /// First vertex of a spanned-module query.
        #[arg(short = 'v', long)]
        v: Option<usize>,
        /// Second vertex of a spanned-module query.
        #[arg(short = 'w', long)]
        w: Option<usize>,
    },
    /// Decide whether the graph is a cograph; prints the cotree as JSON on
    /// success and a witness prime node on failure (exit 1).
    Cograph(InputArgs),
    /// Print all realizers of a prime graph, or "none".
    Realizers {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Print the canonical representation in its stable text form.
    Canon(InputArgs),
    /// Decide isomorphism: exit 0 when isomorphic, 1 when not.
    Iso {
        #[command(flatten)]
        first: InputArgs,
        /// Second input file, or "-" for stdin.
        path2: String,
    },
    /// Generate a seeded instance on stdout.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Vertex count.
        #[arg(short = 'n', long = "n")]
        n: usize,
        /// PRNG seed (ChaCha8, seeded with this value).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability for `random`.
        #[arg(long, default_value_t = 0.5)]
        prob: f64,
        #[arg(long, value_enum, default_value = "el")]
        format: Format,
    },
    /// Brute-force certification helpers for small graphs.
    #[command(hide = true)]
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Cograph,
    Perm,
    Random,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exhaustive isomorphism test (exit 0/1).
    Iso { path1: String, path2: String },
    /// List every module.
    Modules { path: String },
    /// Recursive cograph check (exit 0/1).
    Cograph { path: String },
    /// Exhaustive realizer search.
    Realizers { path: String },
}

/// Writes to stdout. A closed pipe downstream (`head`, `grep -q`, ...) ends
/// the program quietly with success; other write failures exit 2.
fn out(text: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(text.as_bytes()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: writing stdout: {e}");
        std::process::exit(2);
    }
}

macro_rules! outln {
    ($($arg:tt)*) => { out(&format!("{}\n", format_args!($($arg)*))) };
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buffer)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn load_graph(args: &InputArgs) -> Result<Graph, String> {
    load_graph_from(&args.path, args.format)
}

fn load_graph_from(path: &str, format: Option<Format>) -> Result<Graph, String> {
    let text = read_input(path)?;
    let format = format.unwrap_or_else(|| {
        if path.ends_with(".g6") {
            Format::G6
        } else {
            Format::El
        }
    });
    match format {
        Format::G6 => mdcanon::parse_graph6(text.trim()).map_err(|e| format!("{path}: {e}")),
        Format::El => {
            let parsed = mdcanon::parse_edge_list(&text).map_err(|e| format!("{path}: {e}"))?;
            if parsed.duplicate_edges > 0 {
                eprintln!(
                    "warning: {path}: {} duplicate edge(s) dropped",
                    parsed.duplicate_edges
                );
            }
            Ok(parsed.graph)
        }
    }
}

fn emit(g: &Graph, format: Format) -> Result<String, String> {
    match format {
        Format::El => Ok(serialize_edge_list(g)),
        Format::G6 => serialize_graph6(g)
            .map(|mut s| {
                s.push('\n');
                s
            })
            .map_err(|e| e.to_string()),
    }
}

fn vertex_list(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn class_error(e: CanonError) -> String {
    e.to_string()
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Mdtree(input) => {
            let g = load_graph(&input)?;
            outln!("{}", md_tree(&g).to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Quotient { input, json } => {
            let g = load_graph(&input)?;
            let q = quotient(&g);
            if json {
                let classes: Vec<Vec<usize>> = q.classes.iter().map(|c| c.to_vec()).collect();
                let value = serde_json::json!({ "classes": classes, "edges": q.graph.edges() });
                outln!("{value}");
            } else {
                out(&serialize_edge_list(&q.graph));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Modules { input, v, w } => {
            let g = load_graph(&input)?;
            let n = g.vertex_count();
            let check = |x: usize| {
                if x >= n {
                    Err(format!("vertex {x} out of range 0..{n}"))
                } else {
                    Ok(x)
                }
            };
            match (v, w) {
                (Some(v), Some(w)) => {
                    let m = mdcanon::spanned_module(&g, check(v)?, check(w)?);
                    outln!("{}", vertex_list(m.iter()));
                }
                (Some(v), None) => {
                    print_level_chain(&g, check(v)?);
                }
                (None, Some(_)) => return Err("-w requires -v".into()),
                (None, None) => {
                    for v in 0..n {
                        print_level_chain(&g, v);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cograph(input) => {
            let g = load_graph(&input)?;
            match cotree(&g) {
                Ok(ct) => {
                    outln!("{}", ct.to_json());
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    outln!("prime node: {}", vertex_list(e.witness));
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Realizers { input, json } => {
            let g = load_graph(&input)?;
            if quotient(&g).classes.iter().any(|c| c.len() > 1) {
                eprintln!("warning: input graph is not prime; realizers are reconstructed for prime graphs");
            }
            let realizers = find_realizers(&g);
            if json {
                let value: Vec<_> = realizers
                    .iter()
                    .map(|r| serde_json::json!({ "order1": r.order1, "order2": r.order2 }))
                    .collect();
                outln!("{}", serde_json::Value::Array(value));
            } else if realizers.is_empty() {
                outln!("none");
            } else {
                for r in &realizers {
                    outln!("{}", vertex_list(r.order1.iter().copied()));
                    outln!("{}", vertex_list(r.order2.iter().copied()));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Canon(input) => {
            let g = load_graph(&input)?;
            let canon = canonize(&g).map_err(class_error)?;
            out(&canon.to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Iso { first, path2 } => {
            let g1 = load_graph(&first)?;
            let g2 = load_graph_from(&path2, first.format)?;
            let c1 = canonize(&g1).map_err(class_error)?;
            let c2 = canonize(&g2).map_err(class_error)?;
            if c1.representation() == c2.representation() {
                outln!("isomorphic");
                Ok(ExitCode::SUCCESS)
            } else {
                outln!("not isomorphic");
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Gen {
            kind,
            n,
            seed,
            prob,
            format,
        } => {
            if n == 0 {
                return Err("-n must be at least 1".into());
            }
            let g = match kind {
                GenKind::Cograph => random_cograph(n, seed),
                GenKind::Perm => random_permutation_graph(n, seed),
                GenKind::Random => {
                    if !(0.0..=1.0).contains(&prob) {
                        return Err("--prob must lie in [0, 1]".into());
                    }
                    random_graph(n, prob, seed)
                }
            };
            out(&emit(&g, format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { command } => run_oracle(command),
    }
}

fn print_level_chain(g: &Graph, v: usize) {
    let n = g.vertex_count();
    let mut parts = Vec::new();
    let mut last = None;
    for i in 0..=n {
        let set = mdcanon::decomposition_set(g, i, v);
        if Some(&set) != last.as_ref() {
            parts.push(format!("{{{}}}", vertex_list(set.iter())));
            last = Some(set);
        }
    }
    outln!("v={v}: {}", parts.join(" > "));
}

fn oracle_guard(g: &Graph, limit: usize) -> Result<(), String> {
    if g.vertex_count() > limit {
        Err(format!(
            "oracle limit exceeded: n = {} > {limit}",
            g.vertex_count()
        ))
    } else {
        Ok(())
    }
}

fn run_oracle(command: OracleCommand) -> Result<ExitCode, String> {
    match command {
        OracleCommand::Iso { path1, path2 } => {
            let g1 = load_graph_from(&path1, None)?;
            let g2 = load_graph_from(&path2, None)?;
            oracle_guard(&g1, oracle::ISO_LIMIT)?;
            oracle_guard(&g2, oracle::ISO_LIMIT)?;
            if oracle::brute_iso(&g1, &g2) {
                outln!("isomorphic");
                Ok(ExitCode::SUCCESS)
            } else {
                outln!("not isomorphic");
                Ok(ExitCode::FAILURE)
            }
        }
        OracleCommand::Modules { path } => {
            let g = load_graph_from(&path, None)?;
            oracle_guard(&g, oracle::MODULE_LIMIT)?;
            for m in oracle::brute_modules(&g) {
                outln!("{}", vertex_list(m.iter()));
            }
            Ok(ExitCode::SUCCESS)
        }
        OracleCommand::Cograph { path } => {
            let g = load_graph_from(&path, None)?;
            oracle_guard(&g, oracle::MODULE_LIMIT)?;
            if oracle::brute_cograph(&g) {
                outln!("cograph");
                Ok(ExitCode::SUCCESS)
            } else {
                outln!("not a cograph");
                Ok(ExitCode::FAILURE)
            }
        }
        OracleCommand::Realizers { path } => {
            let g = load_graph_from(&path, None)?;
            oracle_guard(&g, oracle::REALIZER_LIMIT)?;
            let realizers = oracle::brute_realizer_search(&g);
            if realizers.is_empty() {
                outln!("none");
            } else {
                for r in &realizers {
                    outln!("{}", vertex_list(r.order1.iter().copied()));
                    outln!("{}", vertex_list(r.order2.iter().copied()));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
