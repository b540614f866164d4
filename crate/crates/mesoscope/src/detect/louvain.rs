use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

/// Weighted multigraph used for the aggregated levels. `loops[u]` carries
/// twice the internal mass of the super-node so that strengths keep summing
/// to 2m across levels.
struct WGraph {
    adj: Vec<Vec<(usize, f64)>>,
    loops: Vec<f64>,
    strength: Vec<f64>,
    m2: f64,
}

impl WGraph {
    fn from_graph(g: &Graph) -> WGraph {
        let n = g.n();
        let adj: Vec<Vec<(usize, f64)>> = (0..n)
            .map(|u| g.neighbors(u).iter().map(|&v| (v, 1.0)).collect())
            .collect();
        let strength: Vec<f64> = (0..n).map(|u| g.degree(u) as f64).collect();
        let m2 = 2.0 * g.m() as f64;
        WGraph { adj, loops: vec![0.0; n], strength, m2 }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn modularity(&self, assign: &[usize], k: usize) -> f64 {
        let mut internal = vec![0.0; k];
        let mut tot = vec![0.0; k];
        for u in 0..self.n() {
            let cu = assign[u];
            internal[cu] += self.loops[u];
            tot[cu] += self.strength[u];
            for &(v, w) in &self.adj[u] {
                if assign[v] == cu {
                    internal[cu] += w;
                }
            }
        }
        (0..k)
            .map(|c| internal[c] / self.m2 - (tot[c] / self.m2).powi(2))
            .sum()
    }

    fn aggregate(&self, assign: &[usize], k: usize) -> WGraph {
        let mut loops = vec![0.0; k];
        let mut maps: Vec<std::collections::BTreeMap<usize, f64>> =
            vec![std::collections::BTreeMap::new(); k];
        for u in 0..self.n() {
            let cu = assign[u];
            loops[cu] += self.loops[u];
            for &(v, w) in &self.adj[u] {
                let cv = assign[v];
                if cv == cu {
                    loops[cu] += w;
                } else {
                    *maps[cu].entry(cv).or_insert(0.0) += w;
                }
            }
        }
        let adj: Vec<Vec<(usize, f64)>> = maps
            .into_iter()
            .map(|m| m.into_iter().collect())
            .collect();
        let strength: Vec<f64> = (0..k)
            .map(|c| loops[c] + adj[c].iter().map(|&(_, w)| w).sum::<f64>())
            .collect();
        WGraph { adj, loops, strength, m2: self.m2 }
    }
}

/// One local-moving phase. Nodes are visited in one seeded-shuffled order,
/// swept repeatedly until a full sweep moves nothing. A node moves to the
/// neighboring community with maximal gain (ties: smallest community id)
/// when the real modularity change exceeds 1e-12.
fn local_move(wg: &WGraph, rng: &mut ChaCha8Rng) -> (Vec<usize>, bool) {
    let n = wg.n();
    let mut comm: Vec<usize> = (0..n).collect();
    let mut tot: Vec<f64> = wg.strength.clone();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut any_moved = false;
    loop {
        let mut moved = false;
        for &u in &order {
            if wg.adj[u].is_empty() {
                continue;
            }
            let cu = comm[u];
            // Neighboring communities in first-appearance order for a
            // deterministic scan.
            let mut seen: HashMap<usize, usize> = HashMap::new();
            let mut wlist: Vec<(usize, f64)> = Vec::new();
            for &(v, w) in &wg.adj[u] {
                let c = comm[v];
                match seen.get(&c) {
                    Some(&i) => wlist[i].1 += w,
                    None => {
                        seen.insert(c, wlist.len());
                        wlist.push((c, w));
                    }
                }
            }
            tot[cu] -= wg.strength[u];
            let w_stay = seen.get(&cu).map_or(0.0, |&i| wlist[i].1);
            let gain_stay = w_stay - tot[cu] * wg.strength[u] / wg.m2;
            let mut best_c = cu;
            let mut best_gain = gain_stay;
            for &(c, w) in &wlist {
                if c == cu {
                    continue;
                }
                let gain = w - tot[c] * wg.strength[u] / wg.m2;
                if gain > best_gain + 1e-12
                    || ((gain - best_gain).abs() <= 1e-12 && c < best_c)
                {
                    best_c = c;
                    best_gain = gain;
                }
            }
            let dq = 2.0 * (best_gain - gain_stay) / wg.m2;
            if best_c != cu && dq > 1e-12 {
                comm[u] = best_c;
                tot[best_c] += wg.strength[u];
                moved = true;
                any_moved = true;
            } else {
                tot[cu] += wg.strength[u];
            }
        }
        if !moved {
            break;
        }
    }
    (comm, any_moved)
}

/// Louvain modularity optimization: seeded local moving, then aggregation
/// with self-loops, repeated until modularity stops improving. Returns the
/// flattened partition.
pub fn louvain(g: &Graph, seed: u64) -> Result<Partition> {
    Ok(louvain_with_trace(g, seed)?.0)
}

/// Same as [`louvain`], also returning modularity after the initial level
/// and after each completed phase pair (the trace is non-decreasing).
pub fn louvain_with_trace(g: &Graph, seed: u64) -> Result<(Partition, Vec<f64>)> {
    if g.m() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut wg = WGraph::from_graph(g);
    let mut flat: Vec<usize> = (0..g.n()).collect();
    let singleton: Vec<usize> = (0..g.n()).collect();
    let mut trace = vec![wg.modularity(&singleton, g.n())];
    loop {
        let (comm, moved) = local_move(&wg, &mut rng);
        if !moved {
            break;
        }
        let p = Partition::from_assignment(&comm);
        let q = wg.modularity(p.assignment(), p.k());
        for l in flat.iter_mut() {
            *l = p.community_of(*l);
        }
        let prev = *trace.last().unwrap();
        trace.push(q);
        wg = wg.aggregate(p.assignment(), p.k());
        if q <= prev + 1e-12 {
            break;
        }
    }
    Ok((Partition::from_assignment(&flat), trace))
}
