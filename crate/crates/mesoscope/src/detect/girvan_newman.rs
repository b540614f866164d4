use crate::detect::betweenness::edge_betweenness_on;
use crate::detect::{component_labels, modularity, Dendrogram};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

/// Divisive hierarchy: repeatedly recompute exact edge betweenness, remove
/// one maximum-betweenness edge (ties: lexicographically smallest edge), and
/// snapshot the component partition whenever the component count grows.
/// Level 0 is the initial component partition. `max_levels` caps the number
/// of recorded levels; pass `usize::MAX` for the full hierarchy.
pub fn girvan_newman(g: &Graph, max_levels: usize) -> Result<Dendrogram> {
    if g.m() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let mut adj: Vec<Vec<usize>> = g.adjacency().to_vec();
    let labels = component_labels(&adj);
    let base = Partition::from_assignment(&labels);
    let mut k = base.k();
    let q0 = modularity(g, &base)?;
    let mut dend = Dendrogram::new(base, q0);
    let mut m_left = g.m();

    while m_left > 0 && dend.levels() < max_levels {
        let (edges, scores) = edge_betweenness_on(&adj);
        // Edges come out lexicographically sorted; requiring a strict
        // improvement keeps the first (smallest) edge among near-ties.
        let mut best = 0;
        for i in 1..edges.len() {
            if scores[i] > scores[best] + 1e-9 {
                best = i;
            }
        }
        let (u, v) = edges[best];
        let iu = adj[u].binary_search(&v).expect("edge endpoint missing");
        adj[u].remove(iu);
        let iv = adj[v].binary_search(&u).expect("edge endpoint missing");
        adj[v].remove(iv);
        m_left -= 1;

        let labels = component_labels(&adj);
        let parts = labels.iter().copied().max().unwrap_or(0) + 1;
        if parts > k {
            k = parts;
            let p = Partition::from_assignment(&labels);
            let q = modularity(g, &p)?;
            dend.push_snapshot(labels, q, k);
        }
    }
    Ok(dend)
}
