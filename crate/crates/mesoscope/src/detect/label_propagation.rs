use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::partition::Partition;

/// Asynchronous label propagation. Every sweep visits all nodes in a fresh
/// seeded-shuffled order; a node keeps its label when that label is already
/// among the most frequent in its neighborhood, otherwise it adopts one of
/// the most frequent labels uniformly at random. Terminates when a full
/// sweep changes nothing (each change strictly increases the number of
/// same-label edges, so this always happens). Isolated nodes keep their own
/// label.
pub fn label_propagation(g: &Graph, seed: u64) -> Partition {
    let n = g.n();
    let mut labels: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        order.shuffle(&mut rng);
        let mut changed = false;
        for &u in &order {
            if g.degree(u) == 0 {
                continue;
            }
            // Tally neighbor labels, remembering first-appearance order so
            // the candidate list is deterministic.
            let mut seen: HashMap<usize, usize> = HashMap::new();
            let mut tally: Vec<(usize, usize)> = Vec::new();
            for &v in g.neighbors(u) {
                let l = labels[v];
                match seen.get(&l) {
                    Some(&i) => tally[i].1 += 1,
                    None => {
                        seen.insert(l, tally.len());
                        tally.push((l, 1));
                    }
                }
            }
            let max = tally.iter().map(|&(_, c)| c).max().unwrap();
            if seen.get(&labels[u]).is_some_and(|&i| tally[i].1 == max) {
                continue;
            }
            let candidates: Vec<usize> = tally
                .iter()
                .filter(|&&(_, c)| c == max)
                .map(|&(l, _)| l)
                .collect();
            labels[u] = if candidates.len() == 1 {
                candidates[0]
            } else {
                candidates[rng.random_range(0..candidates.len())]
            };
            changed = true;
        }
        if !changed {
            break;
        }
    }
    Partition::from_assignment(&labels)
}
