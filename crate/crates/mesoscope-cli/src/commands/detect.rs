use std::path::PathBuf;

use mesoscope::detect::{modularity, run_detector, DEFAULT_SEED, DEFAULT_WALK_LENGTH};
use mesoscope::{export_partition, load_edge_list};

use super::{check_guardrail, parse_method, read_input, report_load, usage};
use crate::artifacts::ArtifactSet;
use crate::manifest::Manifest;
use crate::CliResult;

/// Detect communities in an edge-list graph and write the partition.
#[derive(Debug, clap::Args)]
pub struct Args {
    /// Edge-list input file
    #[arg(long)]
    pub input: PathBuf,
    /// Detector: gn, cnm, louvain, lpa, or walktrap
    #[arg(long)]
    pub method: String,
    /// Seed for the randomized detectors (louvain, lpa)
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Walktrap random-walk length
    #[arg(long, default_value_t = DEFAULT_WALK_LENGTH)]
    pub walk_length: usize,
    /// Override the girvan-newman edge-count guardrail
    #[arg(long)]
    pub force: bool,
    /// Output directory
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run(args: &Args) -> CliResult<()> {
    let method = parse_method(&args.method)?;
    if args.walk_length == 0 {
        return Err(usage("--walk-length must be positive"));
    }
    let text = read_input(&args.input)?;
    let (g, report) = load_edge_list(&text)?;
    report_load(&report);
    check_guardrail(&g, method, args.force)?;
    let partition = run_detector(&g, method, args.seed, args.walk_length)?;
    let q = modularity(&g, &partition)?;

    let mut manifest = Manifest::new("detect");
    manifest.input("graph", &args.input, text.as_bytes());
    manifest.param("method", method.name());
    manifest.param("walk_length", args.walk_length);
    manifest.seed("detector", args.seed);
    manifest.result("communities", partition.k());
    manifest.result("modularity", q);

    let mut set = ArtifactSet::new(&args.out);
    set.add("partition", "partition.txt", export_partition(&g, &partition));
    manifest.outputs = set.stamps();
    set.add("manifest", "manifest.json", manifest.to_json());
    set.write_all()?;
    println!("{} communities, Q = {:.6}", partition.k(), q);
    Ok(())
}
