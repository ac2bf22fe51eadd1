//! Command-line front end for the coloring library: file-based coloring,
//! verification, exact oracles, seeded generation, and the exhaustive
//! small-graph sweep.
//!
//! Exit codes: 0 success, 1 failed verification, 2 unreadable or malformed
//! input, 3 violated class precondition, 4 exhausted search budget.

mod format;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use tlir_core::acyclic::{maximal_outerplanar_order, outerplanar_tlir3, planar_tlir_k};
use tlir_core::bipartite::{bipartite_tlir2, Bipartition};
use tlir_core::cactus::cactus_tlir2;
use tlir_core::chromatic::chromatic_tlir;
use tlir_core::classify::{bipartition_sets, classify};
use tlir_core::coloring::{is_valid_tlir, verify_tlir, TlirIssue, TotalColoring};
use tlir_core::error::Error;
use tlir_core::generate::{enumerate_connected, gen, GraphClass};
use tlir_core::graph::TotalGraph;
use tlir_core::oracle::{
    exact_acyclic, exact_lir, exact_tlir, AcyclicOracle, LirOracle, SearchBudget, TlirOracle,
};
use tlir_core::split::split_tlir2;
use tlir_core::subcubic::subcubic_tlir2;

#[derive(Parser)]
#[command(
    name = "tlir",
    about = "Total colorings whose color classes are locally irregular",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Color a graph file and write the verified coloring.
    Color {
        /// Algorithm to run; `auto` picks the one with the smallest
        /// guaranteed color bound whose class test passes.
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Graph file to color.
        #[arg(long = "in")]
        input: PathBuf,
        /// Where to write the coloring file.
        #[arg(long)]
        out: PathBuf,
        /// Also write a Graphviz rendering here.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Time budget in milliseconds for exact searches
        /// (default: the TLIR_BUDGET_MS variable, else unlimited).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check a coloring file against its graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        /// Accept uncolored elements; only colored edges are checked.
        #[arg(long)]
        partial: bool,
    },
    /// Print an exact minimum (vertex-and-edge, edge-only, or acyclic).
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Largest palette the search may try.
        #[arg(long = "max-colors")]
        max_colors: u32,
    },
    /// Write a seeded random instance of a graph class.
    Gen {
        #[arg(long, value_enum)]
        class: GenClass,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Degree for the regular class (ignored otherwise).
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
    /// Exactly color every connected graph up to a vertex count and
    /// report the largest minimum seen; exits 1 if any exceeds 2.
    Sweep {
        #[arg(long = "n-max")]
        n_max: usize,
        /// Worker threads to spread the graphs across.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Auto,
    Bipartite,
    Cactus,
    Subcubic,
    Split,
    Chromatic,
    Outerplanar,
    Planar,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Tlir,
    Lir,
    Acyclic,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenClass {
    Tree,
    Bipartite,
    Cactus,
    Subcubic,
    Split,
    Regular,
    MaximalOuterplanar,
    PlanarTriangulation,
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Color {
            algo,
            input,
            out,
            dot,
            budget,
        } => cmd_color(algo, &input, &out, dot.as_deref(), budget),
        Cmd::Verify {
            graph,
            coloring,
            partial,
        } => cmd_verify(&graph, &coloring, partial),
        Cmd::Oracle {
            graph,
            mode,
            max_colors,
        } => cmd_oracle(&graph, mode, max_colors),
        Cmd::Gen {
            class,
            n,
            seed,
            out,
            degree,
        } => cmd_gen(class, n, seed, &out, degree),
        Cmd::Sweep { n_max, jobs } => cmd_sweep(n_max, jobs),
    };
    std::process::exit(code);
}

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::Input(_) => 2,
        Error::ClassPrecondition(_) | Error::Precondition(_) | Error::NoColoring(_) => 3,
        Error::BudgetExhausted(_) => 4,
        Error::InternalInvariant(_) => 1,
    }
}

/// The default time budget for exact searches, from the environment.
fn env_budget() -> Option<Duration> {
    std::env::var("TLIR_BUDGET_MS")
        .ok()?
        .parse::<u64>()
        .ok()
        .filter(|&ms| ms > 0)
        .map(Duration::from_millis)
}

fn read_graph(path: &Path) -> Result<TotalGraph, i32> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("cannot read {}: {e}", path.display());
        2
    })?;
    format::parse_graph(&text).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        2
    })
}

fn cmd_color(
    algo: Algo,
    input: &Path,
    out: &Path,
    dot: Option<&Path>,
    budget_ms: Option<u64>,
) -> i32 {
    let g = match read_graph(input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let budget = budget_ms.map(Duration::from_millis).or_else(env_budget);
    let c = match run_algo(algo, &g, budget) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            return exit_for(&e);
        }
    };
    // Nothing leaves this program unverified, whatever the algorithm says.
    if !is_valid_tlir(&g, &c, true) {
        eprintln!("internal error: the coloring failed verification; nothing was written");
        return 1;
    }
    if let Err(e) = fs::write(out, format::serialize_coloring(&c)) {
        eprintln!("cannot write {}: {e}", out.display());
        return 2;
    }
    if let Some(path) = dot {
        if let Err(e) = fs::write(path, format::to_dot(&g, &c)) {
            eprintln!("cannot write {}: {e}", path.display());
            return 2;
        }
    }
    println!("{} colors", c.colors_used().len());
    0
}

fn run_algo(
    algo: Algo,
    g: &TotalGraph,
    budget: Option<Duration>,
) -> Result<TotalColoring, Error> {
    match algo {
        Algo::Auto => color_auto(g, budget),
        Algo::Bipartite => {
            let (x, y) = bipartition_sets(g).ok_or_else(|| {
                Error::ClassPrecondition("the graph has an odd cycle".into())
            })?;
            bipartite_tlir2(g, &Bipartition::new(x, y))
        }
        Algo::Cactus => cactus_tlir2(g),
        Algo::Subcubic => subcubic_tlir2(g),
        Algo::Split => split_tlir2(g),
        Algo::Chromatic => chromatic_tlir(g),
        Algo::Outerplanar => outerplanar_tlir3(g),
        Algo::Planar => planar_tlir_k(g, 5),
        Algo::Oracle => color_oracle(g, budget),
    }
}

/// Tries the specialized algorithms in order of their guaranteed bounds
/// (2, then 3, then 5, then twice-the-class-count; exact search last).
/// A failed attempt falls through to the next candidate.
fn color_auto(g: &TotalGraph, budget: Option<Duration>) -> Result<TotalColoring, Error> {
    let report = classify(g);
    if let Some((x, y)) = report.bipartition.clone() {
        if let Ok(c) = bipartite_tlir2(g, &Bipartition::new(x, y)) {
            return Ok(c);
        }
    }
    if report.is_cactus {
        if let Ok(c) = cactus_tlir2(g) {
            return Ok(c);
        }
    }
    if report.is_subcubic {
        if let Ok(c) = subcubic_tlir2(g) {
            return Ok(c);
        }
    }
    if report.split_partition.is_some() {
        if let Ok(c) = split_tlir2(g) {
            return Ok(c);
        }
    }
    if report.regular_degree.is_some() {
        if let Ok(c) = tlir_core::subcubic::regular_layered_tlir2(g, &BTreeSet::new()) {
            return Ok(c);
        }
    }
    if maximal_outerplanar_order(g).is_ok() {
        if let Ok(c) = outerplanar_tlir3(g) {
            return Ok(c);
        }
    }
    // The five-color route rests on a search, so only attempt it where the
    // edge count allows planarity and the graph is small enough to search.
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n <= 20 && (n < 3 || m <= 3 * n - 6) {
        if let Ok(c) = planar_tlir_k(g, 5) {
            return Ok(c);
        }
    }
    if let Ok(c) = chromatic_tlir(g) {
        return Ok(c);
    }
    color_oracle(g, budget)
}

/// Exact minimum coloring; the palette cap is a formality since every
/// graph here has a small minimum, and the search stops at the first hit.
fn color_oracle(g: &TotalGraph, budget: Option<Duration>) -> Result<TotalColoring, Error> {
    let cap = (2 * g.vertex_count().max(1)) as u32;
    let mut b = SearchBudget::colors(cap);
    if let Some(limit) = budget {
        b = b.with_time_limit(limit);
    }
    match exact_tlir(g, &b) {
        TlirOracle::Min(_, c) => Ok(c),
        TlirOracle::Unknown => Err(Error::BudgetExhausted(
            "the exact search gave up before finding a minimum".into(),
        )),
    }
}

fn cmd_verify(graph: &Path, coloring: &Path, partial: bool) -> i32 {
    let g = match read_graph(graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let text = match fs::read_to_string(coloring) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {e}", coloring.display());
            return 2;
        }
    };
    let c = match format::parse_coloring(&text, &g) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{}: {e}", coloring.display());
            return 2;
        }
    };
    let issues = verify_tlir(&g, &c, !partial);
    if issues.is_empty() {
        println!("VALID");
        return 0;
    }
    for issue in &issues {
        match issue {
            TlirIssue::Conflict(v) => println!(
                "edge {} {} class {} degrees {} {}",
                v.edge.0, v.edge.1, v.class, v.left_degree, v.right_degree
            ),
            TlirIssue::UncoloredEdge { edge } => println!("edge {} {} uncolored", edge.0, edge.1),
            TlirIssue::UncoloredVertex { vertex } => println!("vertex {vertex} uncolored"),
        }
    }
    1
}

fn cmd_oracle(graph: &Path, mode: Mode, max_colors: u32) -> i32 {
    let g = match read_graph(graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if max_colors == 0 {
        eprintln!("--max-colors must be at least 1");
        return 2;
    }
    let mut b = SearchBudget::colors(max_colors);
    if let Some(limit) = env_budget() {
        b = b.with_time_limit(limit);
    }
    match mode {
        Mode::Tlir => match exact_tlir(&g, &b) {
            TlirOracle::Min(k, _) => {
                println!("{k}");
                0
            }
            TlirOracle::Unknown => {
                println!("UNKNOWN");
                4
            }
        },
        Mode::Lir => match exact_lir(&g, &b) {
            LirOracle::Min(k, _) => {
                println!("{k}");
                0
            }
            LirOracle::Uncolorable => {
                println!("UNCOLORABLE");
                0
            }
            LirOracle::Unknown => {
                println!("UNKNOWN");
                4
            }
        },
        Mode::Acyclic => match exact_acyclic(&g, &b) {
            AcyclicOracle::Min(k, _) => {
                println!("{k}");
                0
            }
            AcyclicOracle::Unknown => {
                println!("UNKNOWN");
                4
            }
        },
    }
}

fn cmd_gen(class: GenClass, n: usize, seed: u64, out: &Path, degree: usize) -> i32 {
    let class = match class {
        GenClass::Tree => GraphClass::Tree,
        GenClass::Bipartite => GraphClass::Bipartite,
        GenClass::Cactus => GraphClass::Cactus,
        GenClass::Subcubic => GraphClass::Subcubic,
        GenClass::Split => GraphClass::Split,
        GenClass::Regular => GraphClass::Regular { d: degree },
        GenClass::MaximalOuterplanar => GraphClass::MaximalOuterplanar,
        GenClass::PlanarTriangulation => GraphClass::PlanarTriangulation,
    };
    match gen(class, n, seed) {
        Ok(g) => {
            if let Err(e) = fs::write(out, format::serialize_graph(&g)) {
                eprintln!("cannot write {}: {e}", out.display());
                return 2;
            }
            0
        }
        Err(e) => {
            eprintln!("{e}");
            exit_for(&e)
        }
    }
}

fn cmd_sweep(n_max: usize, jobs: usize) -> i32 {
    let mut graphs = Vec::new();
    for n in 1..=n_max {
        match enumerate_connected(n) {
            Ok(batch) => graphs.extend(batch),
            Err(e) => {
                eprintln!("{e}");
                return exit_for(&e);
            }
        }
    }
    let jobs = jobs.clamp(1, 64);
    let budget = env_budget();
    // Workers take every jobs-th graph; results merge by graph index, so
    // the report never depends on scheduling.
    let minima = std::thread::scope(|scope| {
        let graphs = &graphs;
        let mut handles = Vec::new();
        for worker in 0..jobs {
            handles.push(scope.spawn(move || {
                let mut local = Vec::new();
                let mut i = worker;
                while i < graphs.len() {
                    let mut b = SearchBudget::colors(3);
                    if let Some(limit) = budget {
                        b = b.with_time_limit(limit);
                    }
                    let min = match exact_tlir(&graphs[i], &b) {
                        TlirOracle::Min(k, _) => Some(k),
                        TlirOracle::Unknown => None,
                    };
                    local.push((i, min));
                    i += jobs;
                }
                local
            }));
        }
        let mut merged: Vec<(usize, Option<u32>)> = handles
            .into_iter()
            .flat_map(|h| h.join().expect("sweep worker panicked"))
            .collect();
        merged.sort_unstable_by_key(|&(i, _)| i);
        merged
    });
    if let Some(&(i, _)) = minima.iter().find(|(_, min)| min.is_none()) {
        if budget.is_some() {
            eprintln!("budget exhausted on graph {i}; the sweep is inconclusive");
            return 4;
        }
        // Unlimited search exhausted a three-color palette: something
        // needs at least four.
        println!("max tlir observed > 3 over {} graphs", graphs.len());
        return 1;
    }
    let max = minima.iter().filter_map(|&(_, min)| min).max().unwrap_or(0);
    println!("max tlir observed = {max} over {} graphs", graphs.len());
    i32::from(max > 2)
}
