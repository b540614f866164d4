use mesoscope::profile::{classify_topology, Thresholds};

use crate::{CliError, CliResult};

/// Classify one (CCF, hub dominance) coordinate pair on the topology map.
#[derive(Debug, clap::Args)]
pub struct Args {
    /// Community transitivity in [0, 1]
    #[arg(long)]
    pub ccf: f64,
    /// Hub dominance in [0, 1]
    #[arg(long = "hub-dom")]
    pub hub_dom: f64,
    /// CCF decision boundary (values at or above are "high")
    #[arg(long, default_value_t = 0.4)]
    pub tau_ccf: f64,
    /// Hub-dominance decision boundary
    #[arg(long, default_value_t = 0.5)]
    pub tau_hub: f64,
}

pub fn run(args: &Args) -> CliResult<()> {
    let thresholds = Thresholds { tau_ccf: args.tau_ccf, tau_hub: args.tau_hub };
    let label = classify_topology(args.ccf, args.hub_dom, &thresholds)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    println!("{label}");
    Ok(())
}
