use std::path::PathBuf;

use mesoscope::metrics::{metrics_to_csv, score_partition};
use mesoscope::{import_partition, load_edge_list};

use super::{read_input, report_load, usage};
use crate::artifacts::ArtifactSet;
use crate::manifest::Manifest;
use crate::CliResult;

/// Score every community of a partition on the nine structural metrics.
#[derive(Debug, clap::Args)]
pub struct Args {
    /// Edge-list input file
    #[arg(long)]
    pub input: PathBuf,
    /// Partition file ("node community" per line)
    #[arg(long)]
    pub partition: PathBuf,
    /// Skip communities smaller than this
    #[arg(long, default_value_t = 3)]
    pub min_size: usize,
    /// Output directory
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run(args: &Args) -> CliResult<()> {
    if args.min_size < 1 {
        return Err(usage("--min-size must be at least 1"));
    }
    let graph_text = read_input(&args.input)?;
    let partition_text = read_input(&args.partition)?;
    let (g, report) = load_edge_list(&graph_text)?;
    report_load(&report);
    let partition = import_partition(&g, &partition_text)?;
    let records = score_partition(&g, &partition, args.min_size);

    let mut manifest = Manifest::new("metrics");
    manifest.input("graph", &args.input, graph_text.as_bytes());
    manifest.input("partition", &args.partition, partition_text.as_bytes());
    manifest.param("min_size", args.min_size);
    manifest.result("communities_total", partition.k());
    manifest.result("communities_scored", records.len());

    let mut set = ArtifactSet::new(&args.out);
    set.add("metrics", "metrics.csv", metrics_to_csv(&records));
    manifest.outputs = set.stamps();
    set.add("manifest", "manifest.json", manifest.to_json());
    set.write_all()?;
    println!(
        "scored {} of {} communities (min size {})",
        records.len(),
        partition.k(),
        args.min_size
    );
    Ok(())
}
