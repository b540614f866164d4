use std::collections::BTreeMap;

use serde::Serialize;

use crate::detect::{run_detector, Method};
use crate::error::{Error, Result};
use crate::gen::{generate, GeneratorSpec};
use crate::metrics::{score_partition, MetricRecord};

/// Decision boundaries on the (CCF, hub dominance) plane. A coordinate
/// equal to its threshold counts as high.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Thresholds {
    pub tau_ccf: f64,
    pub tau_hub: f64,
}

impl Default for Thresholds {
    fn default() -> Thresholds {
        Thresholds { tau_ccf: 0.4, tau_hub: 0.5 }
    }
}

/// Quadrant of the (CCF, hub dominance) plane a community falls in, or
/// UNCLASSIFIED when either coordinate is undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TopologyLabel {
    StringBased,
    GridBased,
    StarBased,
    CliqueBased,
    Unclassified,
}

impl TopologyLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            TopologyLabel::StringBased => "STRING_BASED",
            TopologyLabel::GridBased => "GRID_BASED",
            TopologyLabel::StarBased => "STAR_BASED",
            TopologyLabel::CliqueBased => "CLIQUE_BASED",
            TopologyLabel::Unclassified => "UNCLASSIFIED",
        }
    }
}

impl std::fmt::Display for TopologyLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

fn check_coordinate(v: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::CoordinateRange { value: v });
    }
    Ok(())
}

/// Place one community on the topology map: low/high CCF crossed with
/// low/high hub dominance.
pub fn classify_topology(ccf: f64, hub_dom: f64, th: &Thresholds) -> Result<TopologyLabel> {
    check_coordinate(ccf)?;
    check_coordinate(hub_dom)?;
    let ccf_high = ccf >= th.tau_ccf;
    let hub_high = hub_dom >= th.tau_hub;
    Ok(match (ccf_high, hub_high) {
        (false, false) => TopologyLabel::StringBased,
        (true, false) => TopologyLabel::GridBased,
        (false, true) => TopologyLabel::StarBased,
        (true, true) => TopologyLabel::CliqueBased,
    })
}

/// Binned (CCF, hub dominance) density split by community scale, plus the
/// per-label totals and the count of communities with an undefined
/// coordinate. Grids are indexed `[ccf_bin][hub_bin]`.
#[derive(Debug, Clone, Serialize)]
pub struct Grids {
    pub micro: Vec<Vec<u64>>,
    #[serde(rename = "macro")]
    pub macro_: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BivariateProfile {
    pub scale_split: usize,
    pub bins: usize,
    pub thresholds: Thresholds,
    pub grids: Grids,
    pub label_totals: BTreeMap<String, usize>,
    pub unclassified_count: usize,
}

/// Bin index on a uniform grid over [0, 1]; the last bin is closed above.
fn bin_of(v: f64, bins: usize) -> usize {
    ((v * bins as f64) as usize).min(bins - 1)
}

pub fn bivariate_map(
    records: &[MetricRecord],
    bins: usize,
    scale_split: usize,
    thresholds: &Thresholds,
) -> Result<BivariateProfile> {
    if bins < 2 {
        return Err(Error::InvalidParameter(format!("bins={bins} must be at least 2")));
    }
    let mut grids = Grids {
        micro: vec![vec![0; bins]; bins],
        macro_: vec![vec![0; bins]; bins],
    };
    let mut label_totals: BTreeMap<String, usize> = BTreeMap::new();
    let mut unclassified = 0usize;
    for rec in records {
        let (ccf, hub) = match (rec.ccf, rec.hub_dom) {
            (Some(c), Some(h)) => (c, h),
            _ => {
                unclassified += 1;
                continue;
            }
        };
        let grid = if rec.size <= scale_split { &mut grids.micro } else { &mut grids.macro_ };
        grid[bin_of(ccf, bins)][bin_of(hub, bins)] += 1;
        let label = classify_topology(ccf, hub, thresholds)?;
        *label_totals.entry(label.as_str().to_string()).or_insert(0) += 1;
    }
    Ok(BivariateProfile {
        scale_split,
        bins,
        thresholds: *thresholds,
        grids,
        label_totals,
        unclassified_count: unclassified,
    })
}

impl BivariateProfile {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("profile serializes");
        s.push('\n');
        s
    }
}

/// Label tally over the macro-scale communities found across a batch of
/// generated graphs.
#[derive(Debug, Clone)]
pub struct PlacementRow {
    pub label_counts: BTreeMap<String, usize>,
    pub macro_communities: usize,
}

impl PlacementRow {
    /// The label with the highest count (ties broken alphabetically).
    pub fn plurality(&self) -> Option<&str> {
        self.label_counts
            .iter()
            .max_by_key(|(_, &c)| c)
            .map(|(l, _)| l.as_str())
    }
}

/// Generate each spec'd graph, detect communities, and classify every
/// community larger than `scale_split` nodes. Singleton and micro
/// communities are excluded: the map's scale split exists because small
/// communities crowd the extremes of both axes.
pub fn model_placement(
    specs: &[GeneratorSpec],
    method: Method,
    detector_seed: u64,
    walk_length: usize,
    scale_split: usize,
    thresholds: &Thresholds,
) -> Result<PlacementRow> {
    if specs.is_empty() {
        return Err(Error::InvalidParameter("model placement needs at least one spec".into()));
    }
    let mut label_counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut total = 0usize;
    for spec in specs {
        let g = generate(spec)?;
        let partition = run_detector(&g, method, detector_seed, walk_length)?;
        for rec in score_partition(&g, &partition, 1) {
            if rec.size <= scale_split {
                continue;
            }
            total += 1;
            let label = match (rec.ccf, rec.hub_dom) {
                (Some(c), Some(h)) => classify_topology(c, h, thresholds)?,
                _ => TopologyLabel::Unclassified,
            };
            *label_counts.entry(label.as_str().to_string()).or_insert(0) += 1;
        }
    }
    Ok(PlacementRow { label_counts, macro_communities: total })
}
