use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The three reference generative models.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Model {
    /// Erdős–Rényi G(n, p): every pair connected independently.
    Er { n: usize, p: f64 },
    /// Watts–Strogatz: ring lattice of even degree `k`, each lattice edge
    /// rewired with probability `p`.
    Ws { n: usize, k: usize, p: f64 },
    /// Barabási–Albert: growth with preferential attachment, `m_attach`
    /// edges per new node.
    Ba { n: usize, m_attach: usize },
}

/// A model plus the seed that makes its output reproducible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub model: Model,
    pub seed: u64,
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    match spec.model {
        Model::Er { n, p } => generate_er(n, p, spec.seed),
        Model::Ws { n, k, p } => generate_ws(n, k, p, spec.seed),
        Model::Ba { n, m_attach } => generate_ba(n, m_attach, spec.seed),
    }
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("probability {p} outside [0, 1]")));
    }
    Ok(())
}

/// G(n, p): pairs are scanned in lexicographic order, one uniform draw each,
/// so a fixed seed always yields the same edge set.
pub fn generate_er(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Watts–Strogatz small world. The ring lattice connects node `i` to its
/// k/2 nearest neighbors on each side. Lattice edges are visited by offset
/// (all offset-1 edges, then offset-2, …), each rewired with probability
/// `p`: the near endpoint `i` is kept and the far endpoint is resampled
/// uniformly, rejecting self-loops and existing edges; a rewire is skipped
/// when `i` already neighbors everyone.
pub fn generate_ws(n: usize, k: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if k % 2 != 0 {
        return Err(Error::InvalidParameter(format!("ring degree k={k} must be even")));
    }
    if k >= n {
        return Err(Error::InvalidParameter(format!("ring degree k={k} must be below n={n}")));
    }
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for j in 1..=(k / 2) {
        for i in 0..n {
            let w = (i + j) % n;
            adj[i].insert(w);
            adj[w].insert(i);
        }
    }
    for j in 1..=(k / 2) {
        for i in 0..n {
            if rng.random::<f64>() >= p {
                continue;
            }
            let old = (i + j) % n;
            if adj[i].len() >= n - 1 {
                continue;
            }
            let new = loop {
                let cand = rng.random_range(0..n);
                if cand != i && !adj[i].contains(&cand) {
                    break cand;
                }
            };
            adj[i].remove(&old);
            adj[old].remove(&i);
            adj[i].insert(new);
            adj[new].insert(i);
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for &v in &adj[u] {
            if v > u {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Barabási–Albert preferential attachment. Seeded with a complete graph on
/// `m_attach` nodes; each new node picks `m_attach` distinct targets by
/// uniform draws from the endpoint pool (every edge contributes both
/// endpoints, making the draw degree-proportional), redrawing duplicates.
/// While the pool is empty (only for m_attach = 1, whose seed graph has no
/// edges) the target is uniform over existing nodes. A node's own edges
/// enter the pool only after all its targets are chosen.
pub fn generate_ba(n: usize, m_attach: usize, seed: u64) -> Result<Graph> {
    if m_attach < 1 || m_attach >= n {
        return Err(Error::InvalidParameter(format!(
            "m_attach={m_attach} must satisfy 1 <= m_attach < n={n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut pool = Vec::new();
    for u in 0..m_attach {
        for v in (u + 1)..m_attach {
            edges.push((u, v));
            pool.push(u);
            pool.push(v);
        }
    }
    let mut targets = Vec::with_capacity(m_attach);
    for v in m_attach..n {
        targets.clear();
        while targets.len() < m_attach {
            let t = if pool.is_empty() {
                rng.random_range(0..v)
            } else {
                pool[rng.random_range(0..pool.len())]
            };
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((t, v));
            pool.push(t);
            pool.push(v);
        }
    }
    Graph::from_edges(n, &edges)
}

/// A fitted discrete power-law tail p(d) ∝ d^(−α) for d ≥ xmin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeFit {
    pub alpha: f64,
    pub xmin: usize,
    pub n_tail: usize,
}

/// Maximum-likelihood exponent for the tail d ≥ xmin:
/// α = 1 + n_tail / Σ ln(d_i / (xmin − ½)).
pub fn fit_power_law(degrees: &[usize], xmin: usize) -> Result<DegreeFit> {
    if xmin < 1 {
        return Err(Error::InvalidParameter("xmin must be at least 1".into()));
    }
    let tail: Vec<usize> = degrees.iter().copied().filter(|&d| d >= xmin).collect();
    if tail.len() < 100 {
        return Err(Error::TooFewObservations { needed: 100, got: tail.len() });
    }
    if tail.iter().all(|&d| d == tail[0]) {
        return Err(Error::DegenerateDegrees);
    }
    let shift = xmin as f64 - 0.5;
    let log_sum: f64 = tail.iter().map(|&d| (d as f64 / shift).ln()).sum();
    Ok(DegreeFit {
        alpha: 1.0 + tail.len() as f64 / log_sum,
        xmin,
        n_tail: tail.len(),
    })
}
