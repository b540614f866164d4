use std::collections::{HashMap, VecDeque};

use crate::graph::Graph;

/// Exact edge betweenness (Brandes' dependency accumulation over every
/// source). Returns the edge list with endpoints low-high in lexicographic
/// order, and scores aligned with it. Each unordered node pair contributes
/// once: the two BFS directions are summed and halved.
pub fn edge_betweenness(g: &Graph) -> (Vec<(usize, usize)>, Vec<f64>) {
    edge_betweenness_on(g.adjacency())
}

pub(crate) fn edge_betweenness_on(adj: &[Vec<usize>]) -> (Vec<(usize, usize)>, Vec<f64>) {
    let n = adj.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for &v in &adj[u] {
            if v > u {
                edges.push((u, v));
            }
        }
    }
    let index: HashMap<(usize, usize), usize> = edges
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let mut score = vec![0.0; edges.len()];

    let mut dist = vec![-1i64; n];
    let mut sigma = vec![0.0f64; n];
    let mut delta = vec![0.0f64; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();

    for s in 0..n {
        dist.fill(-1);
        sigma.fill(0.0);
        delta.fill(0.0);
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &adj[v] {
                if dist[w] < 0 {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                }
            }
        }
        for &w in order.iter().rev() {
            for &v in &adj[w] {
                if dist[v] + 1 == dist[w] {
                    let c = sigma[v] / sigma[w] * (1.0 + delta[w]);
                    let e = index[&(v.min(w), v.max(w))];
                    score[e] += c;
                    delta[v] += c;
                }
            }
        }
    }
    for x in &mut score {
        *x /= 2.0;
    }
    (edges, score)
}
