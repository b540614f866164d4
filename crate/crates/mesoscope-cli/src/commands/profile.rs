use std::path::PathBuf;

use mesoscope::metrics::{metrics_from_csv, MetricRecord};
use mesoscope::profile::{
    bivariate_map, correlation_matrix, correlation_to_csv, heatmap_svg, mask_to_csv, Thresholds,
};

use super::{read_input, usage};
use crate::artifacts::ArtifactSet;
use crate::manifest::Manifest;
use crate::CliResult;

/// Build the correlation matrix and the binned (CCF, hub dominance) map
/// from one or more metrics CSVs, pooled.
#[derive(Debug, clap::Args)]
pub struct Args {
    /// Metrics CSV (repeat to pool several corpora)
    #[arg(long = "metrics", required = true)]
    pub metrics: Vec<PathBuf>,
    /// Heatmap resolution per axis
    #[arg(long, default_value_t = 20)]
    pub bins: usize,
    /// Micro/macro community size split
    #[arg(long, default_value_t = 10)]
    pub scale_split: usize,
    /// CCF decision boundary
    #[arg(long, default_value_t = 0.4)]
    pub tau_ccf: f64,
    /// Hub-dominance decision boundary
    #[arg(long, default_value_t = 0.5)]
    pub tau_hub: f64,
    /// Correlations with p above this are masked
    #[arg(long, default_value_t = 0.01)]
    pub mask_threshold: f64,
    /// Output directory
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run(args: &Args) -> CliResult<()> {
    if args.bins < 2 {
        return Err(usage("--bins must be at least 2"));
    }
    if !(0.0..=1.0).contains(&args.mask_threshold) {
        return Err(usage("--mask-threshold must lie in [0, 1]"));
    }
    let mut manifest = Manifest::new("profile");
    let mut records: Vec<MetricRecord> = Vec::new();
    for (i, path) in args.metrics.iter().enumerate() {
        let text = read_input(path)?;
        manifest.input(&format!("metrics_{i}"), path, text.as_bytes());
        records.extend(metrics_from_csv(&text)?);
    }
    let thresholds = Thresholds { tau_ccf: args.tau_ccf, tau_hub: args.tau_hub };
    let matrix = correlation_matrix(&records, args.mask_threshold)?;
    let profile = bivariate_map(&records, args.bins, args.scale_split, &thresholds)?;

    manifest.param("bins", args.bins);
    manifest.param("scale_split", args.scale_split);
    manifest.param("tau_ccf", args.tau_ccf);
    manifest.param("tau_hub", args.tau_hub);
    manifest.param("mask_threshold", args.mask_threshold);
    manifest.result("records", records.len());
    manifest.result("unclassified", profile.unclassified_count);
    manifest.result(
        "label_totals",
        serde_json::to_value(&profile.label_totals).expect("label totals serialize"),
    );

    let mut set = ArtifactSet::new(&args.out);
    set.add("correlations", "correlations.csv", correlation_to_csv(&matrix));
    set.add("correlations_mask", "correlations_mask.csv", mask_to_csv(&matrix));
    set.add("profile", "profile.json", profile.to_json());
    set.add(
        "heatmap_micro",
        "heatmap_micro.svg",
        heatmap_svg(&profile.grids.micro, "CCF", "hub_dom"),
    );
    set.add(
        "heatmap_macro",
        "heatmap_macro.svg",
        heatmap_svg(&profile.grids.macro_, "CCF", "hub_dom"),
    );
    manifest.outputs = set.stamps();
    set.add("manifest", "manifest.json", manifest.to_json());
    set.write_all()?;
    let classified: usize = profile.label_totals.values().sum();
    println!(
        "profiled {} records: {} classified, {} unclassified",
        records.len(),
        classified,
        profile.unclassified_count
    );
    Ok(())
}
