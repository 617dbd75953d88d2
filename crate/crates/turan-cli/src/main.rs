//! Command-line front end: build constructions, run containment checks,
//! execute exact searches, run the verification playbook, and scan the
//! conjectured bound.
//!
//! Exit codes: 0 success, 1 failed verification or partial search,
//! 2 invalid parameters.

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use turan_core::{
    build, closed_form_ex, conjecture_bound, contains_subgraph, graph6, search_max_edges,
    verify_claim, vertex_labels, ConstructionSpec, Error, Graph, Pattern, SearchConfig,
    TuranTarget,
};

#[derive(Parser)]
#[command(
    name = "turan",
    version,
    about = "Turán numbers for squared paths: constructions, containment, exact search, verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Graph6,
    Dot,
    Json,
}

#[derive(Copy, Clone, ValueEnum)]
enum TableFormat {
    Table,
    Json,
}

/// Print a line, tolerating a closed stdout (e.g. piped into `head`).
fn out(s: impl std::fmt::Display) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{s}");
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a named construction and print it
    Construct {
        /// Family selector, e.g. `e:4:9`, `square-path:6`, `flat-tetra`,
        /// `f:5:2:9`, `turan:10:3`, `bipartite:4:5`
        #[arg(long)]
        family: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Decide whether a host graph contains a pattern subgraph
    Check {
        /// Host graph: a family selector or `g6:<string>`
        #[arg(long)]
        host: String,
        /// Pattern selector: `square-path:<k>`, `flat-tetra`, `t-prime`,
        /// `clique:<n>`, `path:<l>`, or `g6:<string>`
        #[arg(long)]
        pattern: String,
    },
    /// Exact maximum edges over pattern-free graphs, with extremal classes
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        /// Worker threads (default: $TURAN_THREADS or 1)
        #[arg(long)]
        threads: Option<usize>,
        /// Abort (exit 1) once this many nodes have been explored
        #[arg(long)]
        node_limit: Option<u64>,
        /// Known achievable edge count, used to prune
        #[arg(long)]
        seed: Option<usize>,
    },
    /// Run one claim of the verification playbook
    Verify {
        #[arg(long)]
        claim: String,
        /// Inclusive range `a..b` (or a single value); claim default otherwise
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Tabulate the conjectured bound against known values
    Conjecture {
        #[arg(long)]
        k: usize,
        /// Inclusive range `a..b` (or a single value)
        #[arg(long)]
        n: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
    },
}

fn parse_usize(field: &str, s: &str) -> Result<usize, String> {
    s.parse()
        .map_err(|_| format!("expected a non-negative integer for {field}, got `{s}`"))
}

fn parse_family(sel: &str) -> Result<ConstructionSpec, String> {
    let parts: Vec<&str> = sel.split(':').collect();
    let arity = parts.len() - 1;
    let arg = |i: usize| parse_usize(parts[0], parts[i + 1]);
    let bad = || format!("`{}` takes {} parameter(s)", parts[0], arity);
    use ConstructionSpec::*;
    let spec = match (parts[0], arity) {
        ("square-path", 1) => SquarePath { k: arg(0)? },
        ("flat-tetra", 0) => FlattenedTetrahedron,
        ("t-prime", 0) => TPrime,
        ("g0", 0) => G0,
        ("e", 2) => E { i: arg(0)?, n: arg(1)? },
        ("tmatch", 2) => Tmatch { i: arg(0)?, n: arg(1)? },
        ("s", 2) => S { i: arg(0)?, n: arg(1)? },
        ("f", 3) => F { i: arg(0)?, j: arg(1)?, n: arg(2)? },
        ("h", 2) => H { i: arg(0)?, n: arg(1)? },
        ("turan", 2) => Turan { n: arg(0)?, r: arg(1)? },
        ("bipartite", 2) => CompleteBipartite { a: arg(0)?, b: arg(1)? },
        ("conjecture", 3) => ConjectureGraph { k: arg(0)?, i: arg(1)?, n: arg(2)? },
        ("fs-a", 2) => FaudreeSchelpA { n: arg(0)?, l: arg(1)? },
        ("fs-b", 3) => FaudreeSchelpB { n: arg(0)?, l: arg(1)?, t: arg(2)? },
        ("square-path" | "e" | "tmatch" | "s" | "f" | "h" | "turan" | "bipartite"
        | "conjecture" | "fs-a" | "fs-b" | "flat-tetra" | "t-prime" | "g0", _) => {
            return Err(bad())
        }
        _ => return Err(format!("unknown family `{}`", parts[0])),
    };
    Ok(spec)
}

fn parse_graph(sel: &str) -> Result<Graph, String> {
    if let Some(code) = sel.strip_prefix("g6:") {
        return graph6::decode(code).map_err(|e| e.to_string());
    }
    let parts: Vec<&str> = sel.split(':').collect();
    match (parts[0], parts.len() - 1) {
        ("clique", 1) => Graph::complete(parse_usize("clique", parts[1])?).map_err(|e| e.to_string()),
        ("path", 1) => {
            let l = parse_usize("path", parts[1])?;
            Graph::from_edges(l, (0..l.saturating_sub(1)).map(|v| (v, v + 1)))
                .map_err(|e| e.to_string())
        }
        _ => build(&parse_family(sel)?).map_err(|e| e.to_string()),
    }
}

/// `a..b` inclusive, or a single integer.
fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse_usize("range", a)?, parse_usize("range", b)?),
        None => {
            let v = parse_usize("range", s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok((lo, hi))
}

fn thread_budget(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("TURAN_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(1)
    .max(1)
}

fn to_dot(g: &Graph, labels: &[String]) -> String {
    let mut out = String::from("graph {\n");
    for (v, label) in labels.iter().enumerate() {
        out.push_str(&format!("  v{v} [label=\"{label}\"];\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  v{u} -- v{v};\n"));
    }
    out.push('}');
    out
}

fn graph_json(g: &Graph) -> serde_json::Value {
    serde_json::json!({
        "n": g.n(),
        "m": g.m(),
        "edges": g.edges().collect::<Vec<_>>(),
        "graph6": graph6::encode(g),
    })
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Construct { family, format } => {
            let spec = parse_family(&family)?;
            let g = build(&spec).map_err(|e| e.to_string())?;
            match format {
                Format::Graph6 => out(graph6::encode(&g)),
                Format::Dot => {
                    let labels = vertex_labels(&spec).map_err(|e| e.to_string())?;
                    out(to_dot(&g, &labels));
                }
                Format::Json => out(graph_json(&g)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Check { host, pattern } => {
            let host = parse_graph(&host)?;
            let pattern = Pattern::new(parse_graph(&pattern)?);
            let witness = contains_subgraph(&host, &pattern);
            let verdict = serde_json::json!({
                "contains": witness.is_some(),
                "witness": witness.map(|e| e.map().to_vec()),
            });
            out(verdict);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Search {
            n,
            pattern,
            threads,
            node_limit,
            seed,
        } => {
            let pattern = Pattern::new(parse_graph(&pattern)?);
            let cfg = SearchConfig {
                threads: thread_budget(threads),
                seed_lower_bound: seed,
                node_limit,
                collect_extremal: true,
            };
            match search_max_edges(n, &pattern, &cfg) {
                Ok(result) => {
                    out(result.to_json());
                    Ok(ExitCode::SUCCESS)
                }
                Err(e @ Error::NodeLimit { .. }) => {
                    eprintln!("search inexact: {e}");
                    Ok(ExitCode::FAILURE)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Cmd::Verify { claim, n, threads } => {
            let range = n.as_deref().map(parse_range).transpose()?;
            let cfg = SearchConfig {
                threads: thread_budget(threads),
                ..Default::default()
            };
            let report = verify_claim(&claim, range, &cfg).map_err(|e| e.to_string())?;
            out(report.to_json());
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                eprintln!("claim `{claim}` failed");
                ExitCode::FAILURE
            })
        }
        Cmd::Conjecture { k, n, format } => {
            let (lo, hi) = parse_range(&n)?;
            let target = match k {
                3 => Some(TuranTarget::P3sq),
                4 => Some(TuranTarget::P4sq),
                5 => Some(TuranTarget::P5sq),
                6 => Some(TuranTarget::P6sq),
                _ => None,
            };
            let mut rows = Vec::new();
            for n in lo..=hi {
                let bound = conjecture_bound(k, n).map_err(|e| e.to_string())?;
                let known = target.and_then(|t| closed_form_ex(t, n).ok());
                let gap = known.map(|v| bound.value - num_rational(v));
                rows.push((n, bound, known, gap));
            }
            match format {
                TableFormat::Json => {
                    let json: Vec<_> = rows
                        .iter()
                        .map(|(n, bound, known, gap)| {
                            serde_json::json!({
                                "n": n,
                                "bound": bound.value.to_string(),
                                "argmax_i": bound.argmax_i,
                                "known_ex": known,
                                "gap": gap.map(|g| g.to_string()),
                            })
                        })
                        .collect();
                    out(serde_json::Value::Array(json));
                }
                TableFormat::Table => {
                    out(format!("{:>5} {:>10} {:>9} {:>9} {:>6}", "n", "bound", "argmax_i", "known", "gap"));
                    for (n, bound, known, gap) in rows {
                        out(format!(
                            "{:>5} {:>10} {:>9} {:>9} {:>6}",
                            n,
                            bound.value.to_string(),
                            bound.argmax_i,
                            known.map_or("-".into(), |v| v.to_string()),
                            gap.map_or("-".into(), |g| g.to_string()),
                        ));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn num_rational(v: usize) -> num_rational::Rational64 {
    num_rational::Rational64::from_integer(v as i64)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
