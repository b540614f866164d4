use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

/// Simple undirected graph: no self-loops, no parallel edges, no weights.
///
/// Nodes are dense indices `0..n` in first-appearance order of their labels.
/// Adjacency lists are kept sorted so membership tests can binary-search;
/// edges are also kept in insertion order so writing a graph back out
/// reproduces the original label-appearance order (round-trip identity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// What the edge-list loader dropped or ignored on the way in.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub self_loops_dropped: usize,
    pub duplicate_edges_dropped: usize,
    pub weights_ignored: usize,
}

impl Graph {
    /// Build from `(u, v)` pairs over nodes `0..n`; labels are the indices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::NodeOutOfRange { node: u.max(v), n });
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at node {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidParameter(format!("duplicate edge {u}-{v}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Ok(Graph { adj, edges: edges.to_vec(), labels, index })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    /// Edges in insertion order, endpoints in insertion orientation.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node_id(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Edge-list text that, when loaded, reproduces this graph exactly —
    /// same node numbering, same adjacency. Edges are written in insertion
    /// order so labels reappear in the order they were first seen.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&self.labels[u]);
            out.push(' ');
            out.push_str(&self.labels[v]);
            out.push('\n');
        }
        out
    }
}

/// Parse a whitespace-separated edge list.
///
/// Lines starting with `#` or `%` and blank lines are skipped. A line has
/// two endpoint labels, optionally followed by a numeric weight, which is
/// ignored (counted in the report). Self-loops and repeated edges are
/// dropped, also counted.
pub fn load_edge_list(text: &str) -> Result<(Graph, LoadReport)> {
    let mut report = LoadReport::default();
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.len() {
            2 => {}
            3 => {
                if fields[2].parse::<f64>().is_err() {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("third field {:?} is not a numeric weight", fields[2]),
                    });
                }
                report.weights_ignored += 1;
            }
            k => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("expected 2 endpoints (plus optional weight), got {k} fields"),
                });
            }
        }
        if fields[0] == fields[1] {
            report.self_loops_dropped += 1;
            continue;
        }
        let mut intern = |label: &str| -> usize {
            if let Some(&id) = index.get(label) {
                return id;
            }
            let id = labels.len();
            labels.push(label.to_string());
            index.insert(label.to_string(), id);
            id
        };
        let u = intern(fields[0]);
        let v = intern(fields[1]);
        if !seen.insert((u.min(v), u.max(v))) {
            report.duplicate_edges_dropped += 1;
            continue;
        }
        edges.push((u, v));
    }

    if edges.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut adj = vec![Vec::new(); labels.len()];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok((Graph { adj, edges, labels, index }, report))
}

/// A community seen as a node set, with internal/external degree splits
/// precomputed for every member.
#[derive(Debug, Clone)]
pub struct CommunityView {
    nodes: Vec<usize>,
    d_int: Vec<usize>,
    d_ext: Vec<usize>,
    m_s: usize,
    c_s: usize,
}

impl CommunityView {
    pub fn n_s(&self) -> usize {
        self.nodes.len()
    }

    /// Number of internal edges.
    pub fn m_s(&self) -> usize {
        self.m_s
    }

    /// Number of boundary (cut) edges.
    pub fn c_s(&self) -> usize {
        self.c_s
    }

    /// Member node ids, sorted ascending.
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// Internal degrees, aligned with `nodes()`.
    pub fn d_int(&self) -> &[usize] {
        &self.d_int
    }

    /// External degrees, aligned with `nodes()`.
    pub fn d_ext(&self) -> &[usize] {
        &self.d_ext
    }

    pub fn contains(&self, u: usize) -> bool {
        self.nodes.binary_search(&u).is_ok()
    }
}

/// Split each member's degree into inside/outside parts for one community.
pub fn community_view(g: &Graph, members: &[usize]) -> Result<CommunityView> {
    let mut nodes = members.to_vec();
    nodes.sort_unstable();
    nodes.dedup();
    if nodes.is_empty() {
        return Err(Error::EmptyCommunity);
    }
    if let Some(&bad) = nodes.iter().find(|&&u| u >= g.n()) {
        return Err(Error::NodeOutOfRange { node: bad, n: g.n() });
    }
    let mut d_int = Vec::with_capacity(nodes.len());
    let mut d_ext = Vec::with_capacity(nodes.len());
    let mut int_sum = 0usize;
    let mut ext_sum = 0usize;
    for &u in &nodes {
        let inside = g
            .neighbors(u)
            .iter()
            .filter(|&&v| nodes.binary_search(&v).is_ok())
            .count();
        let outside = g.degree(u) - inside;
        int_sum += inside;
        ext_sum += outside;
        d_int.push(inside);
        d_ext.push(outside);
    }
    debug_assert_eq!(int_sum % 2, 0);
    Ok(CommunityView {
        nodes,
        d_int,
        d_ext,
        m_s: int_sum / 2,
        c_s: ext_sum,
    })
}
