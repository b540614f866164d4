use crate::detect::agglom::Tracker;
use crate::detect::Dendrogram;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

/// Greedy agglomeration from singletons: always merge the adjacent pair of
/// communities with maximal modularity gain (ties: smallest representative
/// pair), recording Q after each merge, until no adjacent pair remains.
/// Merges never cross connected components.
pub fn fast_greedy(g: &Graph) -> Result<Dendrogram> {
    if g.m() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let mut tr = Tracker::from_singletons(g);
    let mut dend = Dendrogram::new(Partition::singletons(g.n()), tr.q());
    loop {
        // Scan adjacent pairs in ascending (a, b); strict improvement keeps
        // the smallest pair among ties.
        let mut best: Option<(f64, usize, usize)> = None;
        for (&a, comm) in tr.communities() {
            for (&b, _) in comm.e.range((a + 1)..) {
                let dq = tr.delta_q(a, b);
                if best.map_or(true, |(bq, _, _)| dq > bq + 1e-12) {
                    best = Some((dq, a, b));
                }
            }
        }
        let Some((_, a, b)) = best else { break };
        tr.merge(a, b);
        dend.push_merge(a, b, tr.q(), tr.k());
    }
    Ok(dend)
}
