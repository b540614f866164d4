use std::path::PathBuf;

use mesoscope::detect::{modularity, run_detector, DEFAULT_SEED, DEFAULT_WALK_LENGTH};
use mesoscope::gen::{generate, GeneratorSpec};
use mesoscope::metrics::{metrics_to_csv, score_partition};
use mesoscope::profile::{
    bivariate_map, correlation_matrix, correlation_to_csv, heatmap_svg, mask_to_csv, Thresholds,
};
use mesoscope::{export_partition, load_edge_list, Error, Graph};

use super::{check_guardrail, parse_method, read_input, report_load, usage, ModelArgs};
use crate::artifacts::ArtifactSet;
use crate::manifest::Manifest;
use crate::{CliError, CliResult};

/// Run the whole characterization end to end: load or generate a graph,
/// detect communities, score them, correlate the metrics, and map the
/// communities on the (CCF, hub dominance) plane.
#[derive(Debug, clap::Args)]
pub struct Args {
    /// Edge-list input file (alternative to --model)
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub model: ModelArgs,
    /// Generator seed (with --model)
    #[arg(long, default_value_t = 0)]
    pub gen_seed: u64,
    /// Detector: gn, cnm, louvain, lpa, or walktrap
    #[arg(long, default_value = "louvain")]
    pub method: String,
    /// Seed for the randomized detectors
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Walktrap random-walk length
    #[arg(long, default_value_t = DEFAULT_WALK_LENGTH)]
    pub walk_length: usize,
    /// Override the girvan-newman edge-count guardrail
    #[arg(long)]
    pub force: bool,
    /// Skip communities smaller than this
    #[arg(long, default_value_t = 3)]
    pub min_size: usize,
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
    if args.min_size < 1 {
        return Err(usage("--min-size must be at least 1"));
    }
    if args.bins < 2 {
        return Err(usage("--bins must be at least 2"));
    }
    if !(0.0..=1.0).contains(&args.mask_threshold) {
        return Err(usage("--mask-threshold must lie in [0, 1]"));
    }
    if args.walk_length == 0 {
        return Err(usage("--walk-length must be positive"));
    }
    let method = parse_method(&args.method)?;

    let mut manifest = Manifest::new("pipeline");
    let mut set = ArtifactSet::new(&args.out);

    let g: Graph = match (&args.input, args.model.is_set()) {
        (Some(path), false) => {
            let text = read_input(path)?;
            manifest.input("graph", path, text.as_bytes());
            let (g, report) = load_edge_list(&text)?;
            report_load(&report);
            g
        }
        (None, true) => {
            let model = args.model.build()?;
            let spec = GeneratorSpec { model, seed: args.gen_seed };
            let g = generate(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
            args.model.describe(&mut manifest);
            manifest.seed("generator", args.gen_seed);
            set.add("graph", "graph.txt", g.to_edge_list_string());
            g
        }
        _ => return Err(usage("pass exactly one of --input or --model")),
    };

    check_guardrail(&g, method, args.force)?;
    let partition = run_detector(&g, method, args.seed, args.walk_length)?;
    let q = modularity(&g, &partition)?;
    let records = score_partition(&g, &partition, args.min_size);

    let correlation = match correlation_matrix(&records, args.mask_threshold) {
        Ok(m) => Some(m),
        Err(Error::TooFewObservations { needed, got }) => {
            eprintln!(
                "note: skipping correlation outputs ({got} scored communities, {needed} needed)"
            );
            None
        }
        Err(Error::ConstantSeries) => {
            eprintln!("note: skipping correlation outputs (a metric column is constant)");
            None
        }
        Err(e) => return Err(e.into()),
    };
    let thresholds = Thresholds { tau_ccf: args.tau_ccf, tau_hub: args.tau_hub };
    let profile = bivariate_map(&records, args.bins, args.scale_split, &thresholds)?;

    manifest.param("method", method.name());
    manifest.param("walk_length", args.walk_length);
    manifest.param("min_size", args.min_size);
    manifest.param("bins", args.bins);
    manifest.param("scale_split", args.scale_split);
    manifest.param("tau_ccf", args.tau_ccf);
    manifest.param("tau_hub", args.tau_hub);
    manifest.param("mask_threshold", args.mask_threshold);
    manifest.seed("detector", args.seed);
    manifest.result("nodes", g.n());
    manifest.result("edges", g.m());
    manifest.result("communities", partition.k());
    manifest.result("modularity", q);
    manifest.result("communities_scored", records.len());
    manifest.result("unclassified", profile.unclassified_count);
    manifest.result("correlation_skipped", correlation.is_none());
    manifest.result(
        "label_totals",
        serde_json::to_value(&profile.label_totals).expect("label totals serialize"),
    );

    set.add("partition", "partition.txt", export_partition(&g, &partition));
    set.add("metrics", "metrics.csv", metrics_to_csv(&records));
    if let Some(matrix) = &correlation {
        set.add("correlations", "correlations.csv", correlation_to_csv(matrix));
        set.add("correlations_mask", "correlations_mask.csv", mask_to_csv(matrix));
    }
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
    println!(
        "{} nodes, {} edges -> {} communities (Q = {:.6}), {} scored",
        g.n(),
        g.m(),
        partition.k(),
        q,
        records.len()
    );
    Ok(())
}
