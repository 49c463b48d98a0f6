use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use forestry::degseq::{degree_sequence_multiplicities, enumerate_degree_sequences};
use forestry::generators::Family;
use forestry::orientations::{count_distinct_indeg, count_distinct_outdeg, count_distinct_score};
use forestry::tutte::{count_forests_brute, evaluate, t21, tutte_subset_expansion};
use forestry::verify::{
    compare_counts, render_table, sweep, verify_equivalence_chain, ChainReport, SweepSummary,
    VerifyReport,
};
use forestry::{parse_edge_list, to_edge_list, EnumerationCap, Error, Multigraph};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "forestry",
    version,
    about = "Forest counts, Tutte polynomials, orientation vectors and degree sequences of multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Enumeration cap: refuse to walk more than 2^N subsets or orientations.
    #[arg(long, global = true, default_value_t = EnumerationCap::DEFAULT.0)]
    cap: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    parallel: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full Tutte polynomial, or its value at --point.
    Tutte {
        #[command(flatten)]
        source: Source,
        /// Evaluation point `X,Y`.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        point: Option<(i64, i64)>,
    },
    /// T(2,1) by memoized deletion-contraction.
    T21 {
        #[command(flatten)]
        source: Source,
    },
    /// Forests by enumerating every edge subset.
    Forests {
        #[command(flatten)]
        source: Source,
    },
    /// Degree sequences of spanning subgraphs.
    Degseqs {
        #[command(flatten)]
        source: Source,
    },
    /// Distinct indegree, outdegree and score vector counts.
    OrientCounts {
        #[command(flatten)]
        source: Source,
    },
    /// Forest count against degree-sequence count.
    Verify {
        #[command(flatten)]
        source: Source,
    },
    /// Orientation counting chain.
    Chain {
        #[command(flatten)]
        source: Source,
    },
    /// `verify` over many generated instances.
    Sweep {
        /// Generator, `FAMILY:PARAMS`.
        #[arg(long = "gen", value_name = "FAMILY:PARAMS")]
        family: Family,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of instances.
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Print a generated graph as an edge list.
    Gen {
        #[arg(value_name = "FAMILY:PARAMS")]
        family: Family,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct Source {
    /// Edge-list file, or `-` for stdin.
    #[arg(required_unless_present = "family", conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Generate the graph instead, `FAMILY:PARAMS`.
    #[arg(long = "gen", value_name = "FAMILY:PARAMS")]
    family: Option<Family>,
    /// Seed for random families.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

fn parse_point(s: &str) -> Result<(i64, i64), String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected X,Y, got {s:?}"))?;
    let int = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|err| format!("{t:?}: {err}"))
    };
    Ok((int(x)?, int(y)?))
}

/// A failed run: exit status plus a one-line diagnostic.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::EnumerationCapExceeded { .. } => 3,
            Error::ChainBroken(_) | Error::ForestRoutesDisagree { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

struct Loaded {
    graph: Multigraph,
    family: Option<Family>,
    seed: Option<u64>,
}

impl Source {
    fn load(&self) -> Result<Loaded, Failure> {
        if let Some(family) = &self.family {
            return Ok(Loaded {
                graph: family.generate(self.seed)?,
                family: Some(family.clone()),
                seed: family.is_random().then_some(self.seed),
            });
        }
        let path = self.input.as_ref().expect("clap requires a source");
        let text = if path.as_os_str() == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|err| io_failure("stdin", err))?;
            buf
        } else {
            std::fs::read_to_string(path)
                .map_err(|err| io_failure(&path.display().to_string(), err))?
        };
        Ok(Loaded {
            graph: parse_edge_list(&text)?,
            family: None,
            seed: None,
        })
    }
}

fn io_failure(what: &str, err: std::io::Error) -> Failure {
    Failure {
        code: 2,
        message: format!("cannot read {what}: {err}"),
    }
}

fn tag(report: VerifyReport, loaded: &Loaded) -> VerifyReport {
    match &loaded.family {
        Some(f) => report.with_source(f, loaded.seed),
        None => report,
    }
}

fn verdict_exit(report: &VerifyReport) -> u8 {
    u8::from(report.verdict.is_failure())
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn chain_table(r: &ChainReport) -> String {
    let rows = [
        ("n", r.graph.n.to_string()),
        ("m", r.graph.m.to_string()),
        ("t21", r.t21_value.to_string()),
        ("indegree_vectors", r.indegree_vectors.to_string()),
        ("outdegree_vectors", r.outdegree_vectors.to_string()),
        ("score_vectors", r.score_vectors.to_string()),
        ("orientations_checked", r.orientations_checked.to_string()),
        ("exhaustive", r.exhaustive.to_string()),
        ("common_value", r.common_value.to_string()),
    ];
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<21} {v}");
    }
    out
}

/// Output text and exit status for one subcommand.
fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    let cap = EnumerationCap(cli.cap);
    let table = cli.format == Format::Table;
    let line = |s: String| format!("{s}\n");
    Ok(match &cli.command {
        Command::Tutte { source, point } => {
            let g = source.load()?.graph;
            let poly = tutte_subset_expansion(&g, cap)?;
            match point {
                Some((x, y)) => (line(evaluate(&poly, *x, *y).to_string()), 0),
                None if table => (line(poly.to_string()), 0),
                None => (line(to_json(&poly)), 0),
            }
        }
        Command::T21 { source } => (line(t21(&source.load()?.graph).to_string()), 0),
        Command::Forests { source } => {
            let g = source.load()?.graph;
            (line(count_forests_brute(&g, cap)?.to_string()), 0)
        }
        Command::Degseqs { source } => {
            let g = source.load()?.graph;
            if table {
                let mut out = String::new();
                for (d, k) in degree_sequence_multiplicities(&g, cap)? {
                    let _ = writeln!(out, "{d}  {k}");
                }
                (out, 0)
            } else {
                (line(to_json(&enumerate_degree_sequences(&g, cap)?)), 0)
            }
        }
        Command::OrientCounts { source } => {
            let g = source.load()?.graph;
            let counts = [
                ("indegree", count_distinct_indeg(&g, cap)?),
                ("outdegree", count_distinct_outdeg(&g, cap)?),
                ("score", count_distinct_score(&g, cap)?),
            ];
            if table {
                let mut out = String::new();
                for (k, v) in counts {
                    let _ = writeln!(out, "{k:<9} {v}");
                }
                (out, 0)
            } else {
                let [(_, i), (_, o), (_, s)] = counts;
                let value = json!({
                    "indegree": i.to_string(),
                    "outdegree": o.to_string(),
                    "score": s.to_string(),
                });
                (line(value.to_string()), 0)
            }
        }
        Command::Verify { source } => {
            let loaded = source.load()?;
            let report = tag(compare_counts(&loaded.graph, cap)?, &loaded);
            let code = verdict_exit(&report);
            if table {
                (render_table(std::slice::from_ref(&report)), code)
            } else {
                (line(to_json(&report)), code)
            }
        }
        Command::Chain { source } => {
            let loaded = source.load()?;
            let mut report = verify_equivalence_chain(&loaded.graph, cap)?;
            report.graph.family = loaded.family.as_ref().map(Family::to_string);
            report.graph.seed = loaded.seed;
            if table {
                (chain_table(&report), 0)
            } else {
                (line(to_json(&report)), 0)
            }
        }
        Command::Sweep {
            family,
            seed,
            count,
        } => {
            let reports = sweep(family, *count, *seed, cap)?;
            let summary = SweepSummary::of(&reports);
            let code = u8::from(summary.equality_violated > 0);
            if table {
                let mut out = render_table(&reports);
                let _ = writeln!(
                    out,
                    "total {}: {} equality_holds, {} strict_inequality_holds, {} equality_violated, {} inequality_violated",
                    summary.total,
                    summary.equality_holds,
                    summary.strict_inequality_holds,
                    summary.equality_violated,
                    summary.inequality_violated
                );
                (out, code)
            } else {
                let mut out = String::new();
                for r in &reports {
                    let _ = writeln!(out, "{}", to_json(r));
                }
                (out, code)
            }
        }
        Command::Gen { family, seed } => (to_edge_list(&family.generate(*seed)?), 0),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.parallel {
        if let Err(err) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("forestry: {err}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("forestry: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
