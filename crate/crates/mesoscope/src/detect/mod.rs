use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

mod agglom;
pub mod betweenness;
mod fast_greedy;
mod girvan_newman;
mod label_propagation;
mod louvain;
mod walktrap;

pub use betweenness::edge_betweenness;
pub use fast_greedy::fast_greedy;
pub use girvan_newman::girvan_newman;
pub use label_propagation::label_propagation;
pub use louvain::{louvain, louvain_with_trace};
pub use walktrap::{walktrap, DEFAULT_WALK_LENGTH};

/// Seed used by seeded detectors when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 42;

/// Edge-count guardrail above which the CLI refuses Girvan–Newman unless
/// forced: its cost grows like n·m² and becomes impractical long before
/// memory does.
pub const GN_EDGE_LIMIT: usize = 20_000;

/// Newman modularity Q = Σ_c [m_c/m − (d_c/2m)²] under the
/// degree-preserving null model.
pub fn modularity(g: &Graph, p: &Partition) -> Result<f64> {
    if g.m() == 0 {
        return Err(Error::EdgelessGraph);
    }
    assert_eq!(g.n(), p.n(), "partition and graph sizes differ");
    let k = p.k();
    let mut mc = vec![0u64; k];
    let mut dc = vec![0u64; k];
    for &(u, v) in g.edges() {
        if p.community_of(u) == p.community_of(v) {
            mc[p.community_of(u)] += 1;
        }
    }
    for u in 0..g.n() {
        dc[p.community_of(u)] += g.degree(u) as u64;
    }
    let m = g.m() as f64;
    let m2 = 2.0 * m;
    Ok((0..k)
        .map(|c| mc[c] as f64 / m - (dc[c] as f64 / m2).powi(2))
        .sum())
}

/// Component label per node for a raw adjacency structure (used on the
/// working copies detectors mutate).
pub(crate) fn component_labels(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if label[v] == usize::MAX {
                    label[v] = next;
                    stack.push(v);
                }
            }
        }
        next += 1;
    }
    label
}

#[derive(Debug, Clone)]
enum Step {
    /// Merge the communities currently represented by `a` and `b` (their
    /// smallest node ids); the union is represented by the smaller.
    Merge { a: usize, b: usize },
    /// Replace the whole assignment (divisive methods snapshot instead of
    /// merging).
    Snapshot(Vec<usize>),
}

/// A hierarchy of partitions with modularity recorded per level. Level 0 is
/// the starting partition; each step produces the next level.
#[derive(Debug, Clone)]
pub struct Dendrogram {
    base_rep: Vec<usize>,
    steps: Vec<Step>,
    q: Vec<f64>,
    k: Vec<usize>,
}

/// Per-community representative labels: each node maps to the smallest node
/// id in its community.
fn rep_labels(assign: &[usize]) -> Vec<usize> {
    let mut min_node: HashMap<usize, usize> = HashMap::new();
    for (u, &c) in assign.iter().enumerate() {
        min_node.entry(c).or_insert(u);
    }
    assign.iter().map(|c| min_node[c]).collect()
}

fn resolve(redirect: &mut HashMap<usize, usize>, mut l: usize) -> usize {
    let mut seen = Vec::new();
    while let Some(&t) = redirect.get(&l) {
        seen.push(l);
        l = t;
    }
    for s in seen {
        redirect.insert(s, l);
    }
    l
}

impl Dendrogram {
    pub(crate) fn new(base: Partition, q0: f64) -> Dendrogram {
        let base_rep = rep_labels(base.assignment());
        let k0 = base.k();
        Dendrogram { base_rep, steps: Vec::new(), q: vec![q0], k: vec![k0] }
    }

    pub(crate) fn push_merge(&mut self, a: usize, b: usize, q: f64, k: usize) {
        self.steps.push(Step::Merge { a, b });
        self.q.push(q);
        self.k.push(k);
    }

    pub(crate) fn push_snapshot(&mut self, assign: Vec<usize>, q: f64, k: usize) {
        self.steps.push(Step::Snapshot(assign));
        self.q.push(q);
        self.k.push(k);
    }

    /// Number of levels (at least 1).
    pub fn levels(&self) -> usize {
        self.q.len()
    }

    /// Modularity at each level.
    pub fn q_trace(&self) -> &[f64] {
        &self.q
    }

    /// Community count at each level.
    pub fn k_trace(&self) -> &[usize] {
        &self.k
    }

    /// Reconstruct the partition at a level by replaying steps.
    pub fn partition_at(&self, level: usize) -> Partition {
        assert!(level < self.levels(), "level {level} out of range");
        let mut labels = self.base_rep.clone();
        let mut start = 0;
        for (i, s) in self.steps[..level].iter().enumerate() {
            if let Step::Snapshot(a) = s {
                labels = rep_labels(a);
                start = i + 1;
            }
        }
        let mut redirect: HashMap<usize, usize> = HashMap::new();
        for s in &self.steps[start..level] {
            if let Step::Merge { a, b } = s {
                let ra = resolve(&mut redirect, *a);
                let rb = resolve(&mut redirect, *b);
                debug_assert_ne!(ra, rb);
                redirect.insert(ra.max(rb), ra.min(rb));
            }
        }
        let labels: Vec<usize> = labels
            .iter()
            .map(|&l| resolve(&mut redirect, l))
            .collect();
        Partition::from_assignment(&labels)
    }

    /// Level with maximal Q; ties (within 1e-12) go to the fewest
    /// communities.
    pub fn best_level(&self) -> usize {
        let mut best = 0;
        for i in 1..self.levels() {
            if self.q[i] > self.q[best] + 1e-12
                || (self.q[i] >= self.q[best] - 1e-12 && self.k[i] < self.k[best])
            {
                best = i;
            }
        }
        best
    }

    pub fn best_cut(&self) -> Partition {
        self.partition_at(self.best_level())
    }
}

/// The five native detectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    GirvanNewman,
    FastGreedy,
    Louvain,
    LabelPropagation,
    Walktrap,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::GirvanNewman,
        Method::FastGreedy,
        Method::Louvain,
        Method::LabelPropagation,
        Method::Walktrap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::GirvanNewman => "gn",
            Method::FastGreedy => "cnm",
            Method::Louvain => "louvain",
            Method::LabelPropagation => "lpa",
            Method::Walktrap => "walktrap",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        match s {
            "gn" => Ok(Method::GirvanNewman),
            "cnm" => Ok(Method::FastGreedy),
            "louvain" => Ok(Method::Louvain),
            "lpa" => Ok(Method::LabelPropagation),
            "walktrap" => Ok(Method::Walktrap),
            other => Err(Error::InvalidParameter(format!(
                "unknown method {other:?} (expected gn|cnm|louvain|lpa|walktrap)"
            ))),
        }
    }
}

/// Run a detector to a flat partition: hierarchical methods are cut at their
/// best-Q level; `seed` drives Louvain and label propagation; `t` is the
/// Walktrap walk length.
pub fn run_detector(g: &Graph, method: Method, seed: u64, t: usize) -> Result<Partition> {
    match method {
        Method::GirvanNewman => Ok(girvan_newman(g, usize::MAX)?.best_cut()),
        Method::FastGreedy => Ok(fast_greedy(g)?.best_cut()),
        Method::Louvain => louvain(g, seed),
        Method::LabelPropagation => Ok(label_propagation(g, seed)),
        Method::Walktrap => Ok(walktrap(g, t)?.best_cut()),
    }
}
