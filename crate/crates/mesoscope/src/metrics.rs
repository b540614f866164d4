use crate::error::{Error, Result};
use crate::graph::{community_view, CommunityView, Graph};
use crate::partition::Partition;
use crate::text::format_float;

/// Fraction of possible internal edges present: m_S / (n_S·(n_S−1)/2).
/// Undefined for singletons.
pub fn density(v: &CommunityView) -> Option<f64> {
    let n = v.n_s();
    if n < 2 {
        return None;
    }
    Some(v.m_s() as f64 / ((n * (n - 1) / 2) as f64))
}

/// Average internal degree relative to community size: 2·m_S / (n_S−1).
/// Undefined for singletons.
pub fn scaled_density(v: &CommunityView) -> Option<f64> {
    let n = v.n_s();
    if n < 2 {
        return None;
    }
    Some((2 * v.m_s()) as f64 / ((n - 1) as f64))
}

/// Largest internal degree relative to the maximum possible:
/// max_u d_int(u) / (n_S−1). Undefined for singletons.
pub fn hub_dominance(v: &CommunityView) -> Option<f64> {
    let n = v.n_s();
    if n < 2 {
        return None;
    }
    let max_int = v.d_int().iter().copied().max().unwrap_or(0);
    Some(max_int as f64 / ((n - 1) as f64))
}

/// Count internal triangles and flag which members sit in at least one.
fn internal_triangles(g: &Graph, v: &CommunityView) -> (u64, Vec<bool>) {
    let nodes = v.nodes();
    let mut in_triangle = vec![false; nodes.len()];
    // Internal adjacency restricted to the community, as positions in `nodes`.
    let mut adj_int: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for (i, &u) in nodes.iter().enumerate() {
        for &w in g.neighbors(u) {
            if let Ok(j) = nodes.binary_search(&w) {
                adj_int[i].push(j);
            }
        }
    }
    let mut triangles = 0u64;
    for i in 0..nodes.len() {
        for &j in &adj_int[i] {
            if j <= i {
                continue;
            }
            // Sorted-list intersection; count common neighbors beyond j so
            // each triangle is seen exactly once (i < j < k).
            let (mut a, mut b) = (0, 0);
            let (la, lb) = (&adj_int[i], &adj_int[j]);
            while a < la.len() && b < lb.len() {
                match la[a].cmp(&lb[b]) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => {
                        let k = la[a];
                        if k > j {
                            triangles += 1;
                            in_triangle[i] = true;
                            in_triangle[j] = true;
                            in_triangle[k] = true;
                        }
                        a += 1;
                        b += 1;
                    }
                }
            }
        }
    }
    (triangles, in_triangle)
}

/// Internal transitivity: 3·Δ_S / T_S, where Δ_S counts internal triangles
/// and T_S = Σ_u C(d_int(u), 2) counts internal open triads. Undefined when
/// there are no triads (T_S = 0), which is distinct from a defined 0.
pub fn clustering_coefficient(g: &Graph, v: &CommunityView) -> Option<f64> {
    let triads: u64 = v
        .d_int()
        .iter()
        .map(|&d| (d as u64) * (d as u64).saturating_sub(1) / 2)
        .sum();
    if triads == 0 {
        return None;
    }
    let (triangles, _) = internal_triangles(g, v);
    Some((3 * triangles) as f64 / triads as f64)
}

/// Fraction of members that sit in at least one internal triangle.
pub fn triangle_participation(g: &Graph, v: &CommunityView) -> Option<f64> {
    let (_, flags) = internal_triangles(g, v);
    let hit = flags.iter().filter(|&&f| f).count();
    Some(hit as f64 / v.n_s() as f64)
}

/// Boundary edges per member: c_S / n_S.
pub fn expansion(v: &CommunityView) -> Option<f64> {
    Some(v.c_s() as f64 / v.n_s() as f64)
}

/// Cut fraction of total incident volume: c_S / (2·m_S + c_S).
/// Undefined when the community touches no edges at all.
pub fn conductance(v: &CommunityView) -> Option<f64> {
    let denom = 2 * v.m_s() + v.c_s();
    if denom == 0 {
        return None;
    }
    Some(v.c_s() as f64 / denom as f64)
}

/// Mean out-degree fraction: average of d_ext(u)/d(u), counting isolated
/// members as 0.
pub fn mean_odf(v: &CommunityView) -> Option<f64> {
    let sum: f64 = v
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, _)| {
            let d = v.d_int()[i] + v.d_ext()[i];
            if d == 0 {
                0.0
            } else {
                v.d_ext()[i] as f64 / d as f64
            }
        })
        .sum();
    Some(sum / v.n_s() as f64)
}

/// Worst out-degree fraction: max of d_ext(u)/d(u), isolated members as 0.
pub fn max_odf(v: &CommunityView) -> Option<f64> {
    let mut best = 0.0f64;
    for i in 0..v.n_s() {
        let d = v.d_int()[i] + v.d_ext()[i];
        let f = if d == 0 { 0.0 } else { v.d_ext()[i] as f64 / d as f64 };
        best = best.max(f);
    }
    Some(best)
}

/// Whole-graph transitivity: the clustering coefficient of the community
/// containing every node.
pub fn global_clustering(g: &Graph) -> Option<f64> {
    let all: Vec<usize> = (0..g.n()).collect();
    if all.is_empty() {
        return None;
    }
    let v = community_view(g, &all).expect("full node set is a valid community");
    clustering_coefficient(g, &v)
}

/// One scored community. `None` marks metrics that are undefined for the
/// community (e.g. density of a singleton), which exports as an empty CSV
/// field rather than a number.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricRecord {
    pub community_id: usize,
    pub size: usize,
    pub density: Option<f64>,
    pub sc_den: Option<f64>,
    pub hub_dom: Option<f64>,
    pub ccf: Option<f64>,
    pub tpr: Option<f64>,
    pub expansion: Option<f64>,
    pub conductance: Option<f64>,
    pub mean_odf: Option<f64>,
    pub max_odf: Option<f64>,
}

/// Column names used by the correlation profile, in CSV order.
pub const PROFILE_COLUMNS: [&str; 10] = [
    "size",
    "density",
    "sc_den",
    "hub_dom",
    "ccf",
    "tpr",
    "expansion",
    "conductance",
    "mean_odf",
    "max_odf",
];

impl MetricRecord {
    /// Value of a profile column by index into `PROFILE_COLUMNS`.
    pub fn profile_value(&self, col: usize) -> Option<f64> {
        match col {
            0 => Some(self.size as f64),
            1 => self.density,
            2 => self.sc_den,
            3 => self.hub_dom,
            4 => self.ccf,
            5 => self.tpr,
            6 => self.expansion,
            7 => self.conductance,
            8 => self.mean_odf,
            9 => self.max_odf,
            _ => panic!("no profile column {col}"),
        }
    }
}

/// Score one community of a graph.
pub fn score_community(g: &Graph, v: &CommunityView, community_id: usize) -> MetricRecord {
    MetricRecord {
        community_id,
        size: v.n_s(),
        density: density(v),
        sc_den: scaled_density(v),
        hub_dom: hub_dominance(v),
        ccf: clustering_coefficient(g, v),
        tpr: triangle_participation(g, v),
        expansion: expansion(v),
        conductance: conductance(v),
        mean_odf: mean_odf(v),
        max_odf: max_odf(v),
    }
}

/// Score every community of at least `min_size` members, in community order.
pub fn score_partition(g: &Graph, p: &Partition, min_size: usize) -> Vec<MetricRecord> {
    assert!(min_size >= 1, "min_size must be at least 1");
    let mut records = Vec::new();
    for (c, members) in p.communities().iter().enumerate() {
        if members.len() < min_size {
            continue;
        }
        let v = community_view(g, members).expect("partition communities are valid");
        records.push(score_community(g, &v, c));
    }
    records
}

pub const METRICS_CSV_HEADER: &str =
    "community_id,size,density,sc_den,hub_dom,ccf,tpr,expansion,conductance,mean_odf,max_odf";

fn opt_field(x: Option<f64>) -> String {
    x.map(format_float).unwrap_or_default()
}

/// Render records as CSV; undefined metrics become empty fields.
pub fn metrics_to_csv(records: &[MetricRecord]) -> String {
    let mut out = String::from(METRICS_CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            r.community_id,
            r.size,
            opt_field(r.density),
            opt_field(r.sc_den),
            opt_field(r.hub_dom),
            opt_field(r.ccf),
            opt_field(r.tpr),
            opt_field(r.expansion),
            opt_field(r.conductance),
            opt_field(r.mean_odf),
            opt_field(r.max_odf),
        ));
    }
    out
}

fn parse_opt(field: &str, line: usize) -> Result<Option<f64>> {
    if field.is_empty() {
        return Ok(None);
    }
    field
        .parse::<f64>()
        .map(Some)
        .map_err(|e| Error::Parse { line, msg: format!("bad float {field:?}: {e}") })
}

/// Parse CSV produced by `metrics_to_csv`.
pub fn metrics_from_csv(text: &str) -> Result<Vec<MetricRecord>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim_end() == METRICS_CSV_HEADER => {}
        Some((_, header)) => {
            return Err(Error::Parse { line: 1, msg: format!("unexpected header {header:?}") });
        }
        None => return Err(Error::EmptyInput),
    }
    let mut records = Vec::new();
    for (i, row) in lines {
        let line = i + 1;
        if row.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = row.trim_end().split(',').collect();
        if f.len() != 11 {
            return Err(Error::Parse { line, msg: format!("expected 11 fields, got {}", f.len()) });
        }
        let community_id = f[0]
            .parse()
            .map_err(|e| Error::Parse { line, msg: format!("bad id {:?}: {e}", f[0]) })?;
        let size = f[1]
            .parse()
            .map_err(|e| Error::Parse { line, msg: format!("bad size {:?}: {e}", f[1]) })?;
        records.push(MetricRecord {
            community_id,
            size,
            density: parse_opt(f[2], line)?,
            sc_den: parse_opt(f[3], line)?,
            hub_dom: parse_opt(f[4], line)?,
            ccf: parse_opt(f[5], line)?,
            tpr: parse_opt(f[6], line)?,
            expansion: parse_opt(f[7], line)?,
            conductance: parse_opt(f[8], line)?,
            mean_odf: parse_opt(f[9], line)?,
            max_odf: parse_opt(f[10], line)?,
        });
    }
    Ok(records)
}
