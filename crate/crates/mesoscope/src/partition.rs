use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A partition of `0..n` into non-empty communities.
///
/// Community ids are dense (`0..k`) in first-appearance order over node ids;
/// member lists are sorted. Every node belongs to exactly one community.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    assignment: Vec<usize>,
    communities: Vec<Vec<usize>>,
}

impl Partition {
    /// Build from arbitrary per-node labels, renumbering them densely in
    /// first-appearance order.
    pub fn from_assignment(labels: &[usize]) -> Partition {
        let mut dense: HashMap<usize, usize> = HashMap::new();
        let mut assignment = Vec::with_capacity(labels.len());
        let mut communities: Vec<Vec<usize>> = Vec::new();
        for (u, &raw) in labels.iter().enumerate() {
            let next = communities.len();
            let c = *dense.entry(raw).or_insert(next);
            if c == communities.len() {
                communities.push(Vec::new());
            }
            communities[c].push(u);
            assignment.push(c);
        }
        Partition { assignment, communities }
    }

    pub fn singletons(n: usize) -> Partition {
        let labels: Vec<usize> = (0..n).collect();
        Partition::from_assignment(&labels)
    }

    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    /// Number of communities.
    pub fn k(&self) -> usize {
        self.communities.len()
    }

    pub fn community_of(&self, u: usize) -> usize {
        self.assignment[u]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn communities(&self) -> &[Vec<usize>] {
        &self.communities
    }

    pub fn community(&self, c: usize) -> &[usize] {
        &self.communities[c]
    }
}

/// Connected components by breadth-first search, numbered in order of their
/// smallest node.
pub fn connected_components(g: &Graph) -> Partition {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let mut queue = std::collections::VecDeque::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = next;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if label[v] == usize::MAX {
                    label[v] = next;
                    queue.push_back(v);
                }
            }
        }
        next += 1;
    }
    Partition::from_assignment(&label)
}

/// Write "node_label community_id" lines in node order.
pub fn export_partition(g: &Graph, p: &Partition) -> String {
    assert_eq!(g.n(), p.n(), "partition and graph sizes differ");
    let mut out = String::new();
    for u in 0..g.n() {
        out.push_str(g.label(u));
        out.push(' ');
        out.push_str(&p.community_of(u).to_string());
        out.push('\n');
    }
    out
}

/// Parse "node_label community_label" lines against a graph. `#` comment
/// lines and blank lines are skipped. Every graph node must be assigned
/// exactly once; unknown node labels are rejected.
pub fn import_partition(g: &Graph, text: &str) -> Result<Partition> {
    let mut raw = vec![None::<usize>; g.n()];
    let mut groups: HashMap<String, usize> = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: format!("expected \"node community\", got {} fields", fields.len()),
            });
        }
        let u = g.node_id(fields[0]).ok_or_else(|| Error::Parse {
            line: lineno + 1,
            msg: format!("unknown node {:?}", fields[0]),
        })?;
        if raw[u].is_some() {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: format!("node {:?} assigned twice", fields[0]),
            });
        }
        let next = groups.len();
        let c = *groups.entry(fields[1].to_string()).or_insert(next);
        raw[u] = Some(c);
    }
    let mut labels = Vec::with_capacity(g.n());
    for (u, slot) in raw.iter().enumerate() {
        match slot {
            Some(c) => labels.push(*c),
            None => {
                return Err(Error::MissingNode { label: g.label(u).to_string() });
            }
        }
    }
    Ok(Partition::from_assignment(&labels))
}
