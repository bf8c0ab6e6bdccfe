//! `crossfree`: classify, draw, verify, generate and render instances.
//!
//! Exit codes: 0 success, 1 instance or drawing rejected, 2 input error,
//! 3 internal error (a drawer produced an invalid drawing).

mod bench;
mod draw;

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use crossfree::harness::{fixture, gen_instance, Fixture, InstanceKind, InstanceRecipe};
use crossfree::io::{
    emit_drawing, emit_graph, emit_svg, parse_drawing, parse_graph, DrawingDocument, GraphDocument, Provenance,
    SvgOptions,
};
use crossfree::{classify, verify, Graph, SubgraphClass, SubgraphSpec, VerificationReport};

use draw::Algorithm;

#[derive(Debug)]
pub enum CliError {
    Rejected(String),
    Input(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Rejected(_) => 1,
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Rejected(m) => write!(f, "rejected: {m}"),
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

#[derive(Parser)]
#[command(name = "crossfree", version, about = "Drawings in which a spanning subgraph stays uncrossed")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the class of the subgraph as JSON.
    Classify { graph: PathBuf },
    /// Draw an instance and write a drawing document.
    Draw {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
        algorithm: Algorithm,
        /// Recorded in the provenance; every drawer is deterministic.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a drawing and print a summary; exits 1 if the subgraph is crossed or the drawing is invalid.
    Verify {
        graph: PathBuf,
        drawing: PathBuf,
        /// Also fail on near-degeneracies of float drawings.
        #[arg(long)]
        strict: bool,
    },
    /// Generate a random instance (or a shipped fixture) as a graph document.
    Gen {
        /// spider, caterpillar, bfs_tree, general_tree, triconnected or biconnected
        #[arg(long, value_parser = parse_kind, required_unless_present = "fixture")]
        kind: Option<InstanceKind>,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        extra: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// K13_TERNARY or K22_BINARY
        #[arg(long, value_parser = parse_fixture, conflicts_with = "kind")]
        fixture: Option<Fixture>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw and verify a generated suite, writing one CSV row per drawing.
    Bench(bench::BenchArgs),
    /// Render a drawing as SVG.
    Render {
        graph: PathBuf,
        drawing: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        mark_crossings: bool,
        /// Longer side of the picture in SVG units.
        #[arg(long, default_value_t = 800.0)]
        size: f64,
    },
}

fn parse_kind(s: &str) -> Result<InstanceKind, String> {
    InstanceKind::parse(s).ok_or_else(|| format!("unknown instance kind {s:?}"))
}

fn parse_fixture(s: &str) -> Result<Fixture, String> {
    Fixture::from_name(&s.to_uppercase()).ok_or_else(|| format!("unknown fixture {s:?}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("crossfree: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Classify { graph } => {
            let (g, s) = read_graph(&graph)?;
            let class = classify(&g, &s).map_err(|e| CliError::Input(e.to_string()))?;
            let value = match class {
                SubgraphClass::BfsTree(r) => json!({ "class": class.name(), "root": r }),
                _ => json!({ "class": class.name() }),
            };
            println!("{value}");
        }
        Command::Draw { graph, algorithm, seed, out } => {
            let (g, s) = read_graph(&graph)?;
            let drawn = draw::draw(&g, &s, algorithm)?;
            let report = check(&g, &s, &drawn.drawing)?;
            if !report.is_compatible() {
                return Err(CliError::Internal(format!(
                    "{} produced an invalid drawing: {} crossings on S, {} violations",
                    drawn.algorithm.name(),
                    report.s_crossing_count,
                    report.violations.len()
                )));
            }
            let provenance =
                Provenance { algorithm: drawn.algorithm.name().into(), parameters: drawn.parameters, seed };
            write_out(out.as_deref(), &emit_drawing(&DrawingDocument::from_drawing(&drawn.drawing, provenance)))?;
        }
        Command::Verify { graph, drawing, strict } => {
            let (g, s) = read_graph(&graph)?;
            let d = read_drawing(&drawing)?;
            let report = check(&g, &s, &d)?;
            println!("{}", summary(&report));
            if !report.is_compatible() {
                return Err(CliError::Rejected("the drawing is not compatible".into()));
            }
            if strict && !report.near_degeneracies.is_empty() {
                return Err(CliError::Rejected(format!("{} near-degeneracies", report.near_degeneracies.len())));
            }
        }
        Command::Gen { kind, n, extra, seed, fixture: named, out } => {
            let mut metadata = BTreeMap::new();
            let (g, s) = match (named, kind) {
                (Some(f), _) => {
                    metadata.insert("fixture".to_string(), f.name().to_string());
                    fixture(f)
                }
                (None, Some(kind)) => {
                    let recipe = InstanceRecipe { kind, n, extra_edge_count: extra, seed };
                    metadata.insert("recipe".to_string(), serde_json::to_string(&recipe).expect("recipe serializes"));
                    gen_instance(&recipe).map_err(|e| CliError::Input(e.to_string()))?
                }
                (None, None) => unreachable!("clap requires --kind or --fixture"),
            };
            let mut doc = GraphDocument::from_instance(&g, &s);
            doc.metadata = metadata;
            write_out(out.as_deref(), &emit_graph(&doc))?;
        }
        Command::Bench(args) => bench::run(&args)?,
        Command::Render { graph, drawing, out, mark_crossings, size } => {
            let (g, s) = read_graph(&graph)?;
            let d = read_drawing(&drawing)?;
            if d.positions.len() != g.vertex_count() || d.curves.len() != g.edge_count() {
                return Err(CliError::Input("the drawing does not match the graph".into()));
            }
            let opts = SvgOptions { size, mark_crossings, ..SvgOptions::default() };
            write_out(out.as_deref(), &emit_svg(&d, &g, &s, &opts))?;
        }
    }
    Ok(())
}

fn read_graph(path: &Path) -> Result<(Graph, SubgraphSpec), CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&bytes).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_drawing(path: &Path) -> Result<crossfree::Drawing, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_drawing(&bytes)
        .and_then(|doc| doc.to_drawing())
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub(crate) fn check(g: &Graph, s: &SubgraphSpec, d: &crossfree::Drawing) -> Result<VerificationReport, CliError> {
    verify(g, s, d).map_err(|e| CliError::Input(e.to_string()))
}

fn summary(r: &VerificationReport) -> serde_json::Value {
    json!({
        "compatible": r.is_compatible(),
        "crossings": r.crossing_count,
        "s_crossings": r.s_crossing_count,
        "non_right_crossings": r.non_right_crossings,
        "max_bends": r.max_bends,
        "width": r.bounding_box.width,
        "height": r.bounding_box.height,
        "min_separation": r.min_separation,
        "near_degeneracies": r.near_degeneracies.len(),
        "violations": r.violations,
    })
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
