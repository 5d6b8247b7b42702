//! Command-line front end.
//!
//! Exit codes: 0 success, 1 internal or I/O error, 2 parse error, 3 the
//! input is outside the class a forced algorithm needs, 4 not α-acyclic.

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperacyclic::bachman::build_bachman;
use hyperacyclic::bench::{series, Algo, BenchRow};
use hyperacyclic::generators::{generate, GenClass, GenSpec};
use hyperacyclic::hgfile::{format_set, read_hg, write_hg};
use hyperacyclic::oracle::subset_graph_naive;
use hyperacyclic::recognition::classify;
use hyperacyclic::sperner::sperner_acyclic;
use hyperacyclic::subset::{subset_graph_baseline, subset_graph_beta, subset_graph_gamma, subset_graph_interval};
use hyperacyclic::unionjoin::{union_join_gamma, union_join_interval, union_join_via_subset_with_stats};
use hyperacyclic::{build_join_tree, DirectedGraph, Error, Hypergraph, Result, UndirectedGraph};
use rayon::prelude::*;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hyperacyclic",
    version,
    about = "Acyclic hypergraph recognition, subset graphs and union join graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, m, N and the class flags.
    Classify { path: PathBuf },
    /// Print the subset graph: `i -> j` means hyperedge i is contained in
    /// hyperedge j (ids are 1-based line numbers).
    SubsetGraph {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = SubsetAlgo::Auto)]
        algo: SubsetAlgo,
        #[command(flatten)]
        out: OutputFormat,
    },
    /// Print the union join graph: `i j` means some join tree has the edge.
    UnionJoin {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = UnionAlgo::Auto)]
        algo: UnionAlgo,
        /// Subset graph routine used on the separators by `--algo generic`.
        #[arg(long, value_enum, default_value_t = SeparatorSubset::Baseline)]
        subset: SeparatorSubset,
        /// Report pair emission counts of the generic method on stderr.
        #[arg(long)]
        stats: bool,
        #[command(flatten)]
        out: OutputFormat,
    },
    /// Print whether two hyperedges are nested (`true`/`false`).
    Sperner { path: PathBuf },
    /// Print the simplified Bachman diagram of a γ-acyclic hypergraph.
    Bachman {
        path: PathBuf,
        #[command(flatten)]
        out: OutputFormat,
    },
    /// Write a random hypergraph file.
    Gen {
        #[command(flatten)]
        spec: SpecArgs,
        /// Output file (stdout if absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time algorithms on size-doubling series; CSV on stdout.
    /// HYPERACYCLIC_THREADS caps the number of cells run in parallel.
    Bench {
        /// Algorithms (comma separated); default: all linear-time ones.
        #[arg(long, value_delimiter = ',')]
        algo: Vec<Algo>,
        /// Instance classes (comma separated); default: the natural class
        /// of each algorithm.
        #[arg(long, value_delimiter = ',')]
        class: Vec<GenClass>,
        /// Smallest target N.
        #[arg(long, default_value_t = 20_000)]
        start: usize,
        /// Largest target N.
        #[arg(long, default_value_t = 2_000_000)]
        end: usize,
        /// Runs per cell; the median is reported.
        #[arg(long, default_value_t = 5)]
        runs: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args)]
struct OutputFormat {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long)]
    class: GenClass,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 10)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.3)]
    density: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SubsetAlgo {
    Auto,
    Naive,
    Baseline,
    Beta,
    Gamma,
    Interval,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum UnionAlgo {
    Auto,
    Generic,
    Gamma,
    Interval,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeparatorSubset {
    Naive,
    Baseline,
    Beta,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Empty | Error::EmptyHyperedge(_) | Error::DuplicateVertex { .. } => 2,
        Error::NotBeta | Error::NotGamma | Error::NotInterval => 3,
        Error::NotAcyclic => 4,
        _ => 1,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn run(command: Command, out: &mut impl Write) -> Result<()> {
    match command {
        Command::Classify { path } => {
            let h = read_hg(path)?;
            let c = classify(&h);
            writeln!(out, "n: {}\nm: {}\nN: {}\n{c}", h.n(), h.m(), h.size()).map_err(io)?;
            if !c.is_alpha {
                writeln!(out, "not acyclic").map_err(io)?;
            }
        }
        Command::SubsetGraph { path, algo, out: fmt } => {
            let h = read_hg(path)?;
            let g = subset_graph(&h, algo)?;
            match fmt.format {
                Format::Text => {
                    for &(a, b) in g.edges() {
                        writeln!(out, "{} -> {}", a + 1, b + 1).map_err(io)?;
                    }
                }
                Format::Dot => write_dot(out, &h, "digraph", "->", g.edges())?,
            }
        }
        Command::UnionJoin { path, algo, subset, stats, out: fmt } => {
            let h = read_hg(path)?;
            let g = union_join(&h, algo, subset, stats)?;
            match fmt.format {
                Format::Text => {
                    for &(a, b) in g.edges() {
                        writeln!(out, "{} {}", a + 1, b + 1).map_err(io)?;
                    }
                }
                Format::Dot => write_dot(out, &h, "graph", "--", g.edges())?,
            }
        }
        Command::Sperner { path } => {
            let h = read_hg(path)?;
            writeln!(out, "{}", sperner_acyclic(&h)?).map_err(io)?;
        }
        Command::Bachman { path, out: fmt } => {
            let h = read_hg(path)?;
            bachman(out, &h, fmt.format)?;
        }
        Command::Gen { spec, output } => {
            let h = generate(&GenSpec::new(spec.class, spec.n, spec.m, spec.seed, spec.density))?;
            match output {
                Some(p) => std::fs::write(&p, write_hg(&h)).map_err(io)?,
                None => out.write_all(write_hg(&h).as_bytes()).map_err(io)?,
            }
        }
        Command::Bench { algo, class, start, end, runs, seed } => bench(out, &algo, &class, start, end, runs, seed)?,
    }
    Ok(())
}

/// Fails with the error of the first unmet class requirement.
fn require_alpha(h: &Hypergraph) -> Result<()> {
    build_join_tree(h).map(|_| ()).ok_or(Error::NotAcyclic)
}

fn subset_graph(h: &Hypergraph, algo: SubsetAlgo) -> Result<DirectedGraph> {
    match algo {
        SubsetAlgo::Auto => {
            let c = classify(h);
            if c.is_interval {
                subset_graph_interval(h)
            } else if c.is_gamma {
                subset_graph_gamma(h)
            } else if c.is_beta {
                subset_graph_beta(h)
            } else {
                Ok(subset_graph_baseline(h))
            }
        }
        SubsetAlgo::Naive => Ok(subset_graph_naive(h)),
        SubsetAlgo::Baseline => Ok(subset_graph_baseline(h)),
        SubsetAlgo::Beta => subset_graph_beta(h),
        SubsetAlgo::Gamma => subset_graph_gamma(h),
        SubsetAlgo::Interval => subset_graph_interval(h),
    }
}

fn union_join(h: &Hypergraph, algo: UnionAlgo, subset: SeparatorSubset, stats: bool) -> Result<UndirectedGraph> {
    require_alpha(h)?;
    let generic = || {
        let (g, s) = union_join_via_subset_with_stats(h, |sh: &Hypergraph| match subset {
            SeparatorSubset::Naive => Ok(subset_graph_naive(sh)),
            SeparatorSubset::Baseline => Ok(subset_graph_baseline(sh)),
            SeparatorSubset::Beta => subset_graph_beta(sh),
        })?;
        if stats {
            eprintln!(
                "raw_emissions={} distinct={} max_multiplicity={}",
                s.raw_emissions, s.distinct, s.max_multiplicity
            );
        }
        Ok(g)
    };
    if stats && algo != UnionAlgo::Generic {
        eprintln!("note: --stats applies to --algo generic only");
    }
    match algo {
        UnionAlgo::Auto => {
            let c = classify(h);
            if c.is_gamma {
                union_join_gamma(h)
            } else if c.is_interval {
                union_join_interval(h)
            } else {
                generic()
            }
        }
        UnionAlgo::Generic => generic(),
        UnionAlgo::Gamma => union_join_gamma(h),
        UnionAlgo::Interval => union_join_interval(h),
    }
}

fn write_dot(out: &mut impl Write, h: &Hypergraph, kind: &str, arrow: &str, edges: &[(usize, usize)]) -> Result<()> {
    writeln!(out, "{kind} G {{").map_err(io)?;
    for j in 0..h.m() {
        writeln!(out, "  {} [label=\"{}: {}\"];", j + 1, j + 1, format_set(h, h.edge(j))).map_err(io)?;
    }
    for &(a, b) in edges {
        writeln!(out, "  {} {arrow} {};", a + 1, b + 1).map_err(io)?;
    }
    writeln!(out, "}}").map_err(io)
}

fn bachman(out: &mut impl Write, h: &Hypergraph, format: Format) -> Result<()> {
    let d = build_bachman(h)?;
    let phi_inv = d.phi_inverse();
    let ids = |es: &[usize]| es.iter().map(|e| (e + 1).to_string()).collect::<Vec<_>>().join(",");
    match format {
        Format::Text => {
            for (x, label) in d.labels.iter().enumerate() {
                writeln!(out, "node {}: label {} phi [{}]", x + 1, format_set(h, label), ids(&phi_inv[x]))
                    .map_err(io)?;
            }
            for &(a, b) in &d.edges {
                writeln!(out, "{} -> {}", a + 1, b + 1).map_err(io)?;
            }
        }
        Format::Dot => {
            writeln!(out, "digraph Bachman {{").map_err(io)?;
            for (x, label) in d.labels.iter().enumerate() {
                writeln!(out, "  {} [label=\"{} [{}]\"];", x + 1, format_set(h, label), ids(&phi_inv[x]))
                    .map_err(io)?;
            }
            for &(a, b) in &d.edges {
                writeln!(out, "  {} -> {};", a + 1, b + 1).map_err(io)?;
            }
            writeln!(out, "}}").map_err(io)?;
        }
    }
    Ok(())
}

fn bench(
    out: &mut impl Write,
    algos: &[Algo],
    classes: &[GenClass],
    start: usize,
    end: usize,
    runs: usize,
    seed: u64,
) -> Result<()> {
    let algos: Vec<Algo> = if algos.is_empty() {
        vec![
            Algo::SubsetBeta,
            Algo::SubsetGamma,
            Algo::SubsetInterval,
            Algo::UnionJoinGamma,
            Algo::UnionJoinInterval,
            Algo::Sperner,
        ]
    } else {
        algos.to_vec()
    };
    let cells: Vec<(GenClass, Algo)> = algos
        .iter()
        .flat_map(|&a| {
            if classes.is_empty() {
                vec![(a.natural_class(), a)]
            } else {
                classes.iter().map(|&c| (c, a)).collect()
            }
        })
        .collect();

    let threads = std::env::var("HYPERACYCLIC_THREADS").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| Error::Io(e.to_string()))?;
    let results: Vec<Result<Vec<BenchRow>>> =
        pool.install(|| cells.par_iter().map(|&(c, a)| series(c, a, start, end, runs, seed)).collect());

    let mut w = csv::Writer::from_writer(out);
    w.write_record(["class", "algo", "n", "m", "N", "G_edges", "millis"]).map_err(|e| Error::Io(e.to_string()))?;
    for rows in results {
        for r in rows? {
            w.write_record([
                r.class.to_string(),
                r.algo.to_string(),
                r.n.to_string(),
                r.m.to_string(),
                r.size.to_string(),
                r.output_edges.to_string(),
                format!("{:.3}", r.millis),
            ])
            .map_err(|e| Error::Io(e.to_string()))?;
        }
    }
    w.flush().map_err(io)
}
