use std::collections::BTreeMap;

use crate::graph::Graph;

/// Bookkeeping shared by the agglomerative detectors: live communities keyed
/// by representative (their smallest node id), inter-community edge counts,
/// and integer running sums that give an exact modularity at every level.
#[derive(Debug, Clone)]
pub(crate) struct Tracker {
    m: u64,
    comms: BTreeMap<usize, Comm>,
    sum_mc: u64,
    sum_dsq: u64,
}

#[derive(Debug, Clone)]
pub(crate) struct Comm {
    pub d: u64,
    pub mc: u64,
    pub e: BTreeMap<usize, u64>,
}

impl Tracker {
    pub fn from_singletons(g: &Graph) -> Tracker {
        let mut comms = BTreeMap::new();
        let mut sum_dsq = 0u64;
        for u in 0..g.n() {
            let d = g.degree(u) as u64;
            sum_dsq += d * d;
            let e: BTreeMap<usize, u64> = g.neighbors(u).iter().map(|&v| (v, 1)).collect();
            comms.insert(u, Comm { d, mc: 0, e });
        }
        Tracker { m: g.m() as u64, comms, sum_mc: 0, sum_dsq }
    }

    pub fn k(&self) -> usize {
        self.comms.len()
    }

    pub fn communities(&self) -> &BTreeMap<usize, Comm> {
        &self.comms
    }

    /// Modularity of the current level, from integer sums:
    /// Σ m_c/m − Σ d_c²/(2m)².
    pub fn q(&self) -> f64 {
        let m = self.m as f64;
        let m2 = 2.0 * m;
        self.sum_mc as f64 / m - self.sum_dsq as f64 / (m2 * m2)
    }

    /// Modularity change if `a` and `b` were merged: e_ab/m − d_a·d_b/(2m²).
    pub fn delta_q(&self, a: usize, b: usize) -> f64 {
        let e_ab = *self.comms[&a].e.get(&b).expect("communities not adjacent") as f64;
        let (da, db) = (self.comms[&a].d, self.comms[&b].d);
        let m = self.m as f64;
        e_ab / m - (da * db) as f64 / (2.0 * m * m)
    }

    /// Merge community `b` into `a`; requires `a < b` so the representative
    /// stays the smallest node id of the union.
    pub fn merge(&mut self, a: usize, b: usize) {
        assert!(a < b);
        let cb = self.comms.remove(&b).expect("unknown community");
        let ca = self.comms.get_mut(&a).expect("unknown community");
        let e_ab = ca.e.remove(&b).unwrap_or(0);
        self.sum_mc += e_ab;
        self.sum_dsq += 2 * ca.d * cb.d;
        ca.d += cb.d;
        ca.mc += cb.mc + e_ab;
        let mut moved: Vec<(usize, u64)> = Vec::new();
        for (&c, &w) in &cb.e {
            if c != a {
                *ca.e.entry(c).or_insert(0) += w;
                moved.push((c, w));
            }
        }
        for (c, w) in moved {
            let cc = self.comms.get_mut(&c).expect("unknown neighbor");
            cc.e.remove(&b);
            *cc.e.entry(a).or_insert(0) += w;
        }
    }
}
