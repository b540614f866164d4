use std::path::PathBuf;

use mesoscope::gen::{generate, GeneratorSpec};

use super::ModelArgs;
use crate::artifacts::ArtifactSet;
use crate::manifest::Manifest;
use crate::{CliError, CliResult};

/// Generate a graph from a reference model and write it as an edge list.
#[derive(Debug, clap::Args)]
pub struct Args {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Generator seed
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output directory
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run(args: &Args) -> CliResult<()> {
    let model = args.model.build()?;
    let spec = GeneratorSpec { model, seed: args.seed };
    // Any generation failure is a bad parameter combination.
    let g = generate(&spec).map_err(|e| CliError::Usage(e.to_string()))?;

    let mut manifest = Manifest::new("generate");
    args.model.describe(&mut manifest);
    manifest.seed("generator", args.seed);
    manifest.result("nodes", g.n());
    manifest.result("edges", g.m());

    let mut set = ArtifactSet::new(&args.out);
    set.add("graph", "graph.txt", g.to_edge_list_string());
    manifest.outputs = set.stamps();
    set.add("manifest", "manifest.json", manifest.to_json());
    let graph_path = set.path_of("graph.txt");
    set.write_all()?;
    println!("wrote {} nodes, {} edges to {}", g.n(), g.m(), graph_path.display());
    Ok(())
}
