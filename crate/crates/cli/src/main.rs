use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use matchstick::analysis::{analyze, Status};
use matchstick::bounds::{
    constant_inequalities, inequality_three_sweep, lemma_sqrt2_sweep, settled_list, BoundsError,
};
use matchstick::construct::{spiral_graph, spiral_points, unit_pairs};
use matchstick::io::{GraphFile, GraphFileError};
use matchstick::planegraph::{validate, MatchstickGraph};
use matchstick::search::{lattice_max_edges, SearchConfig, SearchError};
use matchstick::svg::render_svg;
use matchstick::{Exec, Tolerance};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_AMBIGUOUS: u8 = 3;
const EXIT_TOO_LARGE: u8 = 4;

#[derive(Parser)]
#[command(name = "matchstick", version, about = "Validate, analyse and generate matchstick graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a graph file is a matchstick graph
    Validate {
        path: PathBuf,
        /// Absolute tolerance for floating coordinates
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Faces, bounds and structural identities of a graph file
    Analyze {
        path: PathBuf,
        #[arg(long)]
        tolerance: Option<f64>,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Write the n-vertex hexagonal spiral penny graph
    Generate {
        n: u64,
        /// Graph file to write; stdout if omitted
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write an SVG drawing
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Draw the pennies in the SVG
        #[arg(long)]
        pennies: bool,
    },
    /// List n for which the conjectured maximum is proven
    Settled {
        #[arg(long, default_value_t = 130)]
        max: u64,
    },
    /// Exhaustively check the square-root lemmas and the numerical constants
    Lemmas {
        #[arg(long, default_value_t = 500)]
        sweep_max: u64,
    },
    /// Exact maximum edge count of n points on a hexagonal lattice patch
    Search {
        n: u64,
        /// Ring bound of the candidate patch; defaults to ceil(sqrt(n))
        #[arg(long)]
        radius: Option<u64>,
        /// Witness graph file to write
        #[arg(long)]
        out: Option<PathBuf>,
        /// Disable branch-and-bound pruning
        #[arg(long)]
        no_prune: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

impl From<GraphFileError> for Failure {
    fn from(e: GraphFileError) -> Self {
        Failure::new(EXIT_USAGE, e.to_string())
    }
}

impl From<BoundsError> for Failure {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::AmbiguousFloor(n) => Failure::new(EXIT_AMBIGUOUS, format!("ambiguous floor at n = {n}")),
            other => Failure::new(EXIT_USAGE, other.to_string()),
        }
    }
}

fn tolerance(flag: Option<f64>, file: &GraphFile) -> Result<Tolerance, Failure> {
    match flag {
        Some(eps) => Tolerance::new(eps).map_err(|e| Failure::new(EXIT_USAGE, e.to_string())),
        None => Ok(file.tolerance_or(Tolerance::default())?),
    }
}

/// Reads and validates; violations are printed one per line.
fn load(path: &Path, flag: Option<f64>) -> Result<MatchstickGraph, Failure> {
    let file = GraphFile::read(path)?;
    let tol = tolerance(flag, &file)?;
    validate(file.to_graph()?, tol).map_err(|e| {
        let lines: Vec<String> = e.violations.iter().map(ToString::to_string).collect();
        Failure::new(EXIT_CHECK_FAILED, lines.join("\n"))
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::new(EXIT_CHECK_FAILED, format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { path, tolerance } => {
            load(&path, tolerance)?;
            println!("VALID");
        }
        Command::Analyze { path, tolerance, json } => {
            let m = load(&path, tolerance)?;
            if m.vertex_count() == 0 {
                return Err(Failure::new(EXIT_USAGE, "graph has no vertices"));
            }
            let a = analyze(&m)?;
            if json {
                println!("{}", a.to_json());
            } else {
                let b = a.b.map_or("-".to_string(), |b| b.to_string());
                println!("n={} e={} b={} f={} f3={} g={}", a.n, a.e, b, a.f, a.f3, a.g);
                println!("conjectured_max={} components={}", a.bounds.conjectured_max, a.components);
                for (name, c) in &a.checks {
                    let tag = match c.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Skipped => "SKIP",
                    };
                    println!("{tag} {name}: {}", c.detail);
                }
            }
            if !a.all_pass() {
                return Err(Failure::new(EXIT_CHECK_FAILED, "some checks failed"));
            }
        }
        Command::Generate { n, out, svg, pennies } => {
            if n == 0 {
                return Err(Failure::new(EXIT_USAGE, "n must be at least 1"));
            }
            let points = spiral_points(n).expect("n >= 1");
            let edges = unit_pairs(&points).expect("spiral points are distinct");
            let file = GraphFile::from_lattice(&points, &edges);
            match out {
                Some(path) => {
                    write_file(&path, &(file.to_json() + "\n"))?;
                    eprintln!("n={n} edges={}", edges.len());
                }
                None => println!("{}", file.to_json()),
            }
            if let Some(path) = svg {
                let m = spiral_graph(n).expect("n >= 1");
                write_file(&path, &render_svg(m.graph(), pennies))?;
            }
        }
        Command::Settled { max } => {
            if max == 0 {
                return Err(Failure::new(EXIT_USAGE, "--max must be at least 1"));
            }
            for n in settled_list(max, Exec::Parallel)? {
                println!("{n}");
            }
        }
        Command::Lemmas { sweep_max } => {
            if sweep_max < 4 {
                return Err(Failure::new(EXIT_USAGE, "--sweep-max must be at least 4"));
            }
            let triples = lemma_sqrt2_sweep(sweep_max, Exec::Parallel).map_err(|c| {
                Failure::new(EXIT_CHECK_FAILED, format!("sqrt2 lemma fails at n={} n1={} n2={}", c.n, c.n1, c.n2))
            })?;
            println!("PASS sqrt2 lemma: {triples} triples with n <= {sweep_max}");
            let pairs = inequality_three_sweep(sweep_max, Exec::Parallel).map_err(|(n, b)| {
                Failure::new(EXIT_CHECK_FAILED, format!("boundary inequality fails at n={n} b={b}"))
            })?;
            println!("PASS boundary inequality: {pairs} pairs with n <= {sweep_max}");
            let mut ok = true;
            for c in constant_inequalities() {
                let tag = if c.holds { "PASS" } else { "FAIL" };
                println!("{tag} {}: {} (margin in [{:e}, {:e}])", c.name, c.statement, c.margin_lo, c.margin_hi);
                ok &= c.holds;
            }
            if !ok {
                return Err(Failure::new(EXIT_CHECK_FAILED, "a constant inequality failed"));
            }
        }
        Command::Search { n, radius, out, no_prune } => {
            let mut cfg = SearchConfig::new(n);
            if let Some(r) = radius {
                cfg.radius = r;
            }
            cfg.prune = !no_prune;
            let result = lattice_max_edges(cfg).map_err(|e| match e {
                SearchError::TooLarge(_) => Failure::new(EXIT_TOO_LARGE, e.to_string()),
                SearchError::InvalidConfig(_) => Failure::new(EXIT_USAGE, e.to_string()),
            })?;
            println!("n={} radius={} max_edges={}", n, cfg.radius, result.best);
            let witness: Vec<String> = result.witness.iter().map(ToString::to_string).collect();
            println!("witness: {}", witness.join(" "));
            if let Some(path) = out {
                let edges = unit_pairs(&result.witness).expect("witness points are distinct");
                write_file(&path, &(GraphFile::from_lattice(&result.witness, &edges).to_json() + "\n"))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                if f.code == EXIT_CHECK_FAILED {
                    println!("{}", f.message);
                } else {
                    eprintln!("error: {}", f.message);
                }
            }
            ExitCode::from(f.code)
        }
    }
}
