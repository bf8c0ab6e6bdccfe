//! `bench`: generate a suite, draw and verify every instance, emit CSV.

use std::io::Write;
use std::path::PathBuf;

use clap::Args;
use crossfree::harness::{gen_instance, InstanceKind, InstanceRecipe};
use crossfree::io::BenchRow;

use crate::draw::{self, Algorithm};
use crate::{check, parse_kind, CliError};

#[derive(Args)]
pub struct BenchArgs {
    /// Instance kinds, comma separated.
    #[arg(long, value_parser = parse_kind, value_delimiter = ',',
          default_value = "spider,caterpillar,bfs_tree,general_tree,triconnected,biconnected")]
    kinds: Vec<InstanceKind>,
    /// Vertex counts, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "10,20,40")]
    sizes: Vec<usize>,
    /// Instances per kind and size.
    #[arg(long, default_value_t = 3)]
    count: u64,
    /// Extra edges per vertex.
    #[arg(long, default_value_t = 1.0)]
    density: f64,
    /// Drawers to run on every instance, comma separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "auto")]
    algorithms: Vec<Algorithm>,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run(args: &BenchArgs) -> Result<(), CliError> {
    let sink: Box<dyn Write> = match &args.out {
        Some(p) => Box::new(std::fs::File::create(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut csv = csv::Writer::from_writer(sink);
    let io = |e: csv::Error| CliError::Internal(e.to_string());
    for &kind in &args.kinds {
        for &n in &args.sizes {
            for seed in 0..args.count {
                let extra = (args.density * n as f64).round() as usize;
                let recipe = InstanceRecipe { kind, n, extra_edge_count: extra, seed };
                let label = format!("{}-n{n}-s{seed}", serde_json::to_value(kind).expect("kind serializes").as_str().unwrap_or("?"));
                let (g, s) = match gen_instance(&recipe) {
                    Ok(inst) => inst,
                    Err(e) => {
                        eprintln!("skipping {label}: {e}");
                        continue;
                    }
                };
                for &algorithm in &args.algorithms {
                    let drawn = match draw::draw(&g, &s, algorithm) {
                        Ok(d) => d,
                        Err(e @ (CliError::Rejected(_) | CliError::Input(_))) => {
                            eprintln!("skipping {label} with {}: {e}", algorithm.name());
                            continue;
                        }
                        Err(e) => return Err(e),
                    };
                    let r = check(&g, &s, &drawn.drawing)?;
                    csv.serialize(BenchRow {
                        instance: label.clone(),
                        algorithm: drawn.algorithm.name().into(),
                        n: g.vertex_count(),
                        m: g.edge_count(),
                        s_crossings: r.s_crossing_count,
                        max_bends: r.max_bends,
                        width: r.bounding_box.width,
                        height: r.bounding_box.height,
                        crossings: r.crossing_count,
                    })
                    .map_err(io)?;
                }
            }
        }
    }
    csv.flush().map_err(|e| CliError::Internal(e.to_string()))
}
