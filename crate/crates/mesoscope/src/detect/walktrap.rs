use std::collections::{BTreeMap, HashMap};

use crate::detect::agglom::Tracker;
use crate::detect::Dendrogram;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{connected_components, Partition};

/// Default random-walk length.
pub const DEFAULT_WALK_LENGTH: usize = 4;

/// Row `i` of Pᵗ restricted to one connected component: the distribution of
/// a t-step walk started at `nodes[i]`, over component positions.
fn walk_rows(g: &Graph, nodes: &[usize], t: usize) -> Vec<Vec<f64>> {
    let nc = nodes.len();
    let pos: HashMap<usize, usize> = nodes.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let mut rows = Vec::with_capacity(nc);
    for i in 0..nc {
        let mut row = vec![0.0; nc];
        row[i] = 1.0;
        let mut next = vec![0.0; nc];
        for _ in 0..t {
            next.iter_mut().for_each(|x| *x = 0.0);
            for (j, &p) in row.iter().enumerate() {
                if p == 0.0 {
                    continue;
                }
                let u = nodes[j];
                let share = p / g.degree(u) as f64;
                for &v in g.neighbors(u) {
                    next[pos[&v]] += share;
                }
            }
            std::mem::swap(&mut row, &mut next);
        }
        rows.push(row);
    }
    rows
}

/// Squared walk distance between two community distributions:
/// Σ_k (μ₁[k] − μ₂[k])² / d(k).
fn walk_distance_sq(mu1: &[f64], mu2: &[f64], deg: &[f64]) -> f64 {
    mu1.iter()
        .zip(mu2)
        .zip(deg)
        .map(|((a, b), d)| (a - b) * (a - b) / d)
        .sum()
}

/// Ward-style merge cost: s₁s₂/(s₁+s₂) · r²(μ₁, μ₂). (The conventional 1/n
/// factor is constant and dropped — it cannot change any argmin.)
fn merge_cost(s1: f64, s2: f64, r2: f64) -> f64 {
    s1 * s2 / (s1 + s2) * r2
}

/// Random-walk agglomeration: start from singletons, repeatedly merge the
/// adjacent pair of communities with the smallest Ward-style increase in
/// squared walk distance (ties: smallest representative pair), recording
/// modularity per level. Components are processed independently in order;
/// isolated nodes stay singletons.
pub fn walktrap(g: &Graph, t: usize) -> Result<Dendrogram> {
    if g.m() == 0 {
        return Err(Error::EdgelessGraph);
    }
    if t < 1 {
        return Err(Error::InvalidParameter("walk length t must be >= 1".into()));
    }
    let comps = connected_components(g);
    let mut tr = Tracker::from_singletons(g);
    let mut dend = Dendrogram::new(Partition::singletons(g.n()), tr.q());

    for comp in comps.communities() {
        if comp.len() < 2 {
            continue;
        }
        let nodes = comp.as_slice();
        let deg: Vec<f64> = nodes.iter().map(|&u| g.degree(u) as f64).collect();
        let rows = walk_rows(g, nodes, t);
        // Live community state within this component, keyed by representative.
        let mut mean: HashMap<usize, (Vec<f64>, f64)> = nodes
            .iter()
            .enumerate()
            .map(|(i, &u)| (u, (rows[i].clone(), 1.0)))
            .collect();
        // Merge costs for adjacent pairs, keyed (low, high).
        let mut cost: BTreeMap<(usize, usize), f64> = BTreeMap::new();
        for (&a, comm) in tr.communities() {
            if !mean.contains_key(&a) {
                continue;
            }
            for (&b, _) in comm.e.range((a + 1)..) {
                let (m1, s1) = &mean[&a];
                let (m2, s2) = &mean[&b];
                cost.insert((a, b), merge_cost(*s1, *s2, walk_distance_sq(m1, m2, &deg)));
            }
        }
        while mean.len() > 1 {
            // Smallest cost, ties to the smallest (a, b) pair.
            let (&(a, b), _) = cost
                .iter()
                .reduce(|best, cur| if cur.1 < &(best.1 - 1e-12) { cur } else { best })
                .expect("adjacent pair must exist inside a component");
            tr.merge(a, b);
            dend.push_merge(a, b, tr.q(), tr.k());
            let (m2, s2) = mean.remove(&b).expect("community state missing");
            let entry = mean.get_mut(&a).expect("community state missing");
            let s1 = entry.1;
            for (x, y) in entry.0.iter_mut().zip(&m2) {
                *x = (s1 * *x + s2 * y) / (s1 + s2);
            }
            entry.1 = s1 + s2;
            cost.retain(|&(x, y), _| x != a && y != a && x != b && y != b);
            let (ma, sa) = mean[&a].clone();
            for (&c, _) in &tr.communities()[&a].e {
                let (mc, sc) = &mean[&c];
                let key = (a.min(c), a.max(c));
                cost.insert(key, merge_cost(sa, *sc, walk_distance_sq(&ma, mc, &deg)));
            }
        }
    }
    Ok(dend)
}
