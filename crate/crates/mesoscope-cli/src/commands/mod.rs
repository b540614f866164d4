pub mod classify;
pub mod detect;
pub mod generate;
pub mod metrics;
pub mod pipeline;
pub mod profile;

use std::path::Path;

use mesoscope::detect::{Method, GN_EDGE_LIMIT};
use mesoscope::gen::Model;
use mesoscope::graph::LoadReport;
use mesoscope::Graph;

use crate::{CliError, CliResult};

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Read a required input file. A path that does not exist is an argument
/// error; everything after that is a runtime failure.
pub fn read_input(path: &Path) -> CliResult<String> {
    if !path.exists() {
        return Err(usage(format!("input file {} does not exist", path.display())));
    }
    std::fs::read_to_string(path).map_err(|e| {
        CliError::Runtime(anyhow::anyhow!("reading {}: {e}", path.display()))
    })
}

pub fn parse_method(s: &str) -> CliResult<Method> {
    s.parse::<Method>().map_err(|e| usage(e.to_string()))
}

/// Exhaustive edge betweenness makes Girvan–Newman quadratic-ish in m;
/// refuse large graphs unless the caller insists.
pub fn check_guardrail(g: &Graph, method: Method, force: bool) -> CliResult<()> {
    if method == Method::GirvanNewman && g.m() > GN_EDGE_LIMIT && !force {
        return Err(usage(format!(
            "girvan-newman on {} edges exceeds the {GN_EDGE_LIMIT}-edge guardrail; \
             pass --force to run anyway",
            g.m()
        )));
    }
    Ok(())
}

pub fn report_load(report: &LoadReport) {
    if report.self_loops_dropped > 0 {
        eprintln!("note: dropped {} self-loop line(s)", report.self_loops_dropped);
    }
    if report.duplicate_edges_dropped > 0 {
        eprintln!("note: dropped {} duplicate edge(s)", report.duplicate_edges_dropped);
    }
    if report.weights_ignored > 0 {
        eprintln!("note: ignored weights on {} line(s)", report.weights_ignored);
    }
}

/// Generator choice shared by `generate` and `pipeline`.
#[derive(Debug, clap::Args)]
pub struct ModelArgs {
    /// Generative model: er, ws, or ba
    #[arg(long)]
    pub model: Option<String>,
    /// Number of nodes
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge probability (er) or rewiring probability (ws)
    #[arg(long)]
    pub p: Option<f64>,
    /// Even ring-lattice degree (ws)
    #[arg(long)]
    pub k: Option<usize>,
    /// Edges added per new node (ba)
    #[arg(long = "m-attach")]
    pub m_attach: Option<usize>,
}

impl ModelArgs {
    pub fn is_set(&self) -> bool {
        self.model.is_some()
    }

    pub fn build(&self) -> CliResult<Model> {
        let name = self.model.as_deref().ok_or_else(|| usage("--model is required"))?;
        let n = self.n.ok_or_else(|| usage("--n is required with --model"))?;
        match name {
            "er" => {
                if self.k.is_some() || self.m_attach.is_some() {
                    return Err(usage("er takes only --n and --p"));
                }
                let p = self.p.ok_or_else(|| usage("er needs --p"))?;
                Ok(Model::Er { n, p })
            }
            "ws" => {
                if self.m_attach.is_some() {
                    return Err(usage("ws takes only --n, --k, and --p"));
                }
                let k = self.k.ok_or_else(|| usage("ws needs --k"))?;
                let p = self.p.ok_or_else(|| usage("ws needs --p"))?;
                Ok(Model::Ws { n, k, p })
            }
            "ba" => {
                if self.p.is_some() || self.k.is_some() {
                    return Err(usage("ba takes only --n and --m-attach"));
                }
                let m_attach = self.m_attach.ok_or_else(|| usage("ba needs --m-attach"))?;
                Ok(Model::Ba { n, m_attach })
            }
            other => Err(usage(format!("unknown model {other:?} (expected er|ws|ba)"))),
        }
    }

    /// Record the effective generator configuration in a manifest.
    pub fn describe(&self, manifest: &mut crate::manifest::Manifest) {
        if let Some(model) = &self.model {
            manifest.param("model", model.as_str());
        }
        if let Some(n) = self.n {
            manifest.param("n", n);
        }
        if let Some(p) = self.p {
            manifest.param("p", p);
        }
        if let Some(k) = self.k {
            manifest.param("k", k);
        }
        if let Some(m) = self.m_attach {
            manifest.param("m_attach", m);
        }
    }
}
