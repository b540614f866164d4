//! End-to-end acceptance checks: every guarantee the project makes is
//! exercised here against independent oracles, exhaustive small-graph
//! enumeration, or fixed-seed statistical baselines.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use mesoscope::detect::{
    edge_betweenness, label_propagation, modularity, run_detector, Method, DEFAULT_SEED,
    DEFAULT_WALK_LENGTH,
};
use mesoscope::gen::{fit_power_law, generate, generate_er, generate_ws, GeneratorSpec, Model};
use mesoscope::metrics::{global_clustering, score_partition, MetricRecord, PROFILE_COLUMNS};
use mesoscope::profile::{classify_topology, correlation_matrix, model_placement, Thresholds, TopologyLabel};
use mesoscope::{Graph, Partition};

// ---------------------------------------------------------------------------
// shared enumeration helpers

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn edges_of_mask(pairs: &[(usize, usize)], mask: u32) -> Vec<(usize, usize)> {
    pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect()
}

fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

/// Visit every set partition of {0..n} as an assignment vector, using
/// restricted growth strings.
fn for_each_partition(n: usize, mut f: impl FnMut(&[usize])) {
    let mut assign = vec![0usize; n];
    loop {
        f(&assign);
        // Increment the restricted growth string.
        let mut i = n;
        loop {
            if i == 1 {
                return;
            }
            i -= 1;
            let max_prefix = assign[..i].iter().copied().max().unwrap();
            if assign[i] <= max_prefix {
                assign[i] += 1;
                for x in assign.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            }
            assign[i] = 0;
        }
    }
}

/// Two cliques of size k joined by one edge; the planted split.
fn barbell(k: usize) -> (Graph, Vec<Vec<usize>>) {
    let mut edges = Vec::new();
    for base in [0, k] {
        for i in 0..k {
            for j in (i + 1)..k {
                edges.push((base + i, base + j));
            }
        }
    }
    edges.push((k - 1, k));
    let left: Vec<usize> = (0..k).collect();
    let right: Vec<usize> = (k..2 * k).collect();
    (Graph::from_edges(2 * k, &edges).unwrap(), vec![left, right])
}

fn sorted_communities(p: &Partition) -> Vec<Vec<usize>> {
    let mut cs: Vec<Vec<usize>> = p.communities().to_vec();
    for c in &mut cs {
        c.sort_unstable();
    }
    cs.sort();
    cs
}

// ---------------------------------------------------------------------------
// 1. nine metrics vs. brute force on every connected graph up to 6 nodes

#[derive(Debug, Clone, Copy, PartialEq)]
struct BruteRow {
    density: Option<f64>,
    sc_den: Option<f64>,
    hub_dom: Option<f64>,
    ccf: Option<f64>,
    tpr: Option<f64>,
    expansion: Option<f64>,
    conductance: Option<f64>,
    mean_odf: Option<f64>,
    max_odf: Option<f64>,
}

/// Straight-from-definition metrics over an adjacency matrix; no sharing
/// with the library implementation.
fn brute_metrics(adjm: &[Vec<bool>], members: &[usize]) -> BruteRow {
    let ns = members.len();
    let inside = |x: usize| members.contains(&x);
    let n = adjm.len();

    let mut m_s = 0u64;
    let mut c_s = 0u64;
    let mut d_int = vec![0u64; ns];
    let mut d_ext = vec![0u64; ns];
    for (i, &u) in members.iter().enumerate() {
        for w in 0..n {
            if !adjm[u][w] {
                continue;
            }
            if inside(w) {
                d_int[i] += 1;
            } else {
                d_ext[i] += 1;
            }
        }
    }
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if adjm[u][v] {
                m_s += 1;
            }
        }
        c_s += d_ext[i];
    }

    let mut triangles = 0u64;
    let mut in_triangle = vec![false; ns];
    for i in 0..ns {
        for j in (i + 1)..ns {
            for k in (j + 1)..ns {
                if adjm[members[i]][members[j]]
                    && adjm[members[j]][members[k]]
                    && adjm[members[i]][members[k]]
                {
                    triangles += 1;
                    in_triangle[i] = true;
                    in_triangle[j] = true;
                    in_triangle[k] = true;
                }
            }
        }
    }
    let wedges: u64 = d_int.iter().map(|&d| d * (d.saturating_sub(1)) / 2).sum();

    let nsf = ns as f64;
    let density = if ns >= 2 {
        Some(m_s as f64 / (nsf * (nsf - 1.0) / 2.0))
    } else {
        None
    };
    let sc_den = if ns >= 2 { Some(2.0 * m_s as f64 / (nsf - 1.0)) } else { None };
    let hub_dom = if ns >= 2 {
        Some(*d_int.iter().max().unwrap() as f64 / (nsf - 1.0))
    } else {
        None
    };
    let ccf = if wedges > 0 { Some(3.0 * triangles as f64 / wedges as f64) } else { None };
    let tpr = Some(in_triangle.iter().filter(|&&b| b).count() as f64 / nsf);
    let expansion = Some(c_s as f64 / nsf);
    let conductance = if 2 * m_s + c_s > 0 {
        Some(c_s as f64 / (2 * m_s + c_s) as f64)
    } else {
        None
    };
    let odf: Vec<f64> = (0..ns)
        .map(|i| {
            let deg = d_int[i] + d_ext[i];
            if deg == 0 {
                0.0
            } else {
                d_ext[i] as f64 / deg as f64
            }
        })
        .collect();
    let mean_odf = Some(odf.iter().sum::<f64>() / nsf);
    let max_odf = Some(odf.iter().fold(0.0f64, |a, &b| a.max(b)));
    BruteRow {
        density,
        sc_den,
        hub_dom,
        ccf,
        tpr,
        expansion,
        conductance,
        mean_odf,
        max_odf,
    }
}

fn close(a: Option<f64>, b: Option<f64>, tol: f64) -> bool {
    match (a, b) {
        (None, None) => true,
        (Some(x), Some(y)) => (x - y).abs() <= tol,
        _ => false,
    }
}

fn assert_record_matches(rec: &MetricRecord, brute: &BruteRow, n: usize, mask: u32, sub: u32) {
    let pairs = [
        ("density", rec.density, brute.density),
        ("sc_den", rec.sc_den, brute.sc_den),
        ("hub_dom", rec.hub_dom, brute.hub_dom),
        ("ccf", rec.ccf, brute.ccf),
        ("tpr", rec.tpr, brute.tpr),
        ("expansion", rec.expansion, brute.expansion),
        ("conductance", rec.conductance, brute.conductance),
        ("mean_odf", rec.mean_odf, brute.mean_odf),
        ("max_odf", rec.max_odf, brute.max_odf),
    ];
    for (name, got, want) in pairs {
        assert!(
            close(got, want, 1e-12),
            "{name} mismatch ({got:?} vs {want:?}) on n={n} mask={mask:b} members={sub:b}"
        );
    }
}

#[test]
fn metrics_match_brute_force_on_all_small_connected_graphs() {
    let start = Instant::now();
    let mut graphs = 0u64;
    let mut rows = 0u64;
    for n in 1..=6usize {
        let pairs = pair_list(n);
        for mask in 0..(1u32 << pairs.len()) {
            let edges = edges_of_mask(&pairs, mask);
            if !is_connected(n, &edges) {
                continue;
            }
            graphs += 1;
            let g = Graph::from_edges(n, &edges).unwrap();
            let mut adjm = vec![vec![false; n]; n];
            for &(u, v) in &edges {
                adjm[u][v] = true;
                adjm[v][u] = true;
            }
            // Member sets recur across partitions; score each subset once.
            let brute_rows: Vec<BruteRow> = (0..1u32 << n)
                .map(|sub| {
                    let members: Vec<usize> = (0..n).filter(|&i| sub >> i & 1 == 1).collect();
                    brute_metrics(&adjm, &members)
                })
                .collect();
            for_each_partition(n, |assign| {
                let p = Partition::from_assignment(assign);
                let records = score_partition(&g, &p, 1);
                // Restricted growth strings list labels in first-appearance
                // order, matching the partition's community ids.
                let blocks = assign.iter().copied().max().unwrap() + 1;
                let mut subs = vec![0u32; blocks];
                for (node, &c) in assign.iter().enumerate() {
                    subs[c] |= 1 << node;
                }
                assert_eq!(records.len(), blocks);
                for (rec, &sub) in records.iter().zip(&subs) {
                    assert_eq!(rec.size, sub.count_ones() as usize);
                    rows += 1;
                    assert_record_matches(rec, &brute_rows[sub as usize], n, mask, sub);
                }
            });
        }
    }
    assert_eq!(graphs, 1 + 1 + 4 + 38 + 728 + 26704);
    assert!(rows > 1_000_000, "exhaustive sweep should cover many communities, got {rows}");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "sweep took {elapsed:?}, budget is 60s");
}

// ---------------------------------------------------------------------------
// 2. modularity vs. the double-sum form on the same exhaustive set

fn q_double_sum(adjm: &[Vec<bool>], assign: &[usize], m: u64) -> f64 {
    let n = adjm.len();
    let two_m = (2 * m) as f64;
    let deg: Vec<f64> = (0..n)
        .map(|u| (0..n).filter(|&w| adjm[u][w]).count() as f64)
        .collect();
    let mut q = 0.0;
    for i in 0..n {
        for j in 0..n {
            if assign[i] != assign[j] {
                continue;
            }
            let a = if adjm[i][j] { 1.0 } else { 0.0 };
            q += a - deg[i] * deg[j] / two_m;
        }
    }
    q / two_m
}

#[test]
fn modularity_matches_the_double_sum_form() {
    for n in 2..=6usize {
        let pairs = pair_list(n);
        for mask in 0..(1u32 << pairs.len()) {
            let edges = edges_of_mask(&pairs, mask);
            if !is_connected(n, &edges) {
                continue;
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let mut adjm = vec![vec![false; n]; n];
            for &(u, v) in &edges {
                adjm[u][v] = true;
                adjm[v][u] = true;
            }
            let m = edges.len() as u64;
            for_each_partition(n, |assign| {
                let p = Partition::from_assignment(assign);
                let got = modularity(&g, &p).unwrap();
                let want = q_double_sum(&adjm, assign, m);
                assert!(
                    (got - want).abs() <= 1e-12,
                    "Q mismatch {got} vs {want} on n={n} mask={mask:b} assign={assign:?}"
                );
            });
        }
    }

    // Planted two-clique barbell: Q of the clique split is 19/42.
    let (g, split) = barbell(5);
    let assign: Vec<usize> = (0..10).map(|u| usize::from(u >= 5)).collect();
    let p = Partition::from_assignment(&assign);
    assert_eq!(sorted_communities(&p), split);
    let q = modularity(&g, &p).unwrap();
    assert!((q - 0.45238095238095238).abs() < 1e-9, "Q = {q}");
}

// ---------------------------------------------------------------------------
// 3. detector sanity on planted cliques

#[test]
fn detectors_recover_planted_cliques() {
    let start = Instant::now();
    let mut lpa_hits = Vec::new();
    for k in [4usize, 5] {
        let (g, want) = barbell(k);
        for method in Method::ALL {
            let p = run_detector(&g, method, DEFAULT_SEED, DEFAULT_WALK_LENGTH).unwrap();
            assert_eq!(
                sorted_communities(&p),
                want,
                "{} failed on barbell k={k}",
                method.name()
            );
        }
        // Label propagation is stochastic; demand near-total stability.
        let hits = (0..1000)
            .filter(|&seed| sorted_communities(&label_propagation(&g, seed)) == want)
            .count();
        lpa_hits.push((k, hits));
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "detector sweep took {elapsed:?}, budget is 30s");
    for (k, hits) in lpa_hits {
        assert!(hits >= 990, "lpa recovered the k={k} cliques in only {hits}/1000 seeds");
    }
}

// ---------------------------------------------------------------------------
// 4. edge betweenness vs. path counting on every graph up to 7 nodes

const INF: u8 = u8::MAX;
const MAXN: usize = 7;

/// Geodesic counting via adjacency-matrix powers and Floyd–Warshall
/// distances: sigma(s,t) = (A^dist(s,t))[s][t]. Also reports whether every
/// reachable pair has a unique geodesic, in which case both this oracle and
/// the implementation work in exact small integers.
fn oracle_edge_betweenness(n: usize, edges: &[(usize, usize)]) -> (Vec<f64>, bool) {
    let mut dist = [[INF; MAXN]; MAXN];
    // power[k] holds A^(k+1); entries stay far below 2^53.
    let mut power = [[[0u64; MAXN]; MAXN]; MAXN];
    for (i, row) in dist.iter_mut().enumerate().take(n) {
        row[i] = 0;
    }
    for &(u, v) in edges {
        dist[u][v] = 1;
        dist[v][u] = 1;
        power[0][u][v] = 1;
        power[0][v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            if dist[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if dist[k][j] == INF {
                    continue;
                }
                let through = dist[i][k] + dist[k][j];
                if through < dist[i][j] {
                    dist[i][j] = through;
                }
            }
        }
    }
    for k in 1..n {
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for l in 0..n {
                    acc += power[k - 1][i][l] * power[0][l][j];
                }
                power[k][i][j] = acc;
            }
        }
    }
    let sigma = |s: usize, t: usize| -> u64 {
        if s == t {
            1
        } else {
            power[dist[s][t] as usize - 1][s][t]
        }
    };
    let mut unique = true;
    for s in 0..n {
        for t in 0..n {
            if s != t && dist[s][t] != INF && sigma(s, t) != 1 {
                unique = false;
            }
        }
    }
    let scores = edges
        .iter()
        .map(|&(u, v)| {
            let mut score = 0.0;
            for s in 0..n {
                for t in (s + 1)..n {
                    if dist[s][t] == INF {
                        continue;
                    }
                    let mut through = 0u64;
                    if dist[s][u] != INF
                        && dist[v][t] != INF
                        && dist[s][u] + 1 + dist[v][t] == dist[s][t]
                    {
                        through += sigma(s, u) * sigma(v, t);
                    }
                    if dist[s][v] != INF
                        && dist[u][t] != INF
                        && dist[s][v] + 1 + dist[u][t] == dist[s][t]
                    {
                        through += sigma(s, v) * sigma(u, t);
                    }
                    if through > 0 {
                        score += through as f64 / sigma(s, t) as f64;
                    }
                }
            }
            score
        })
        .collect();
    (scores, unique)
}

#[test]
fn edge_betweenness_matches_path_counting_up_to_seven_nodes() {
    let mut graphs = 0u64;
    for n in 1..=7usize {
        let pairs = pair_list(n);
        for mask in 0..(1u32 << pairs.len()) {
            let edges = edges_of_mask(&pairs, mask);
            graphs += 1;
            let g = Graph::from_edges(n, &edges).unwrap();
            let (got_edges, got) = edge_betweenness(&g);
            assert_eq!(got_edges, edges);
            let (want, unique) = oracle_edge_betweenness(n, &edges);
            assert_eq!(got.len(), want.len());
            for (i, (&a, &b)) in got.iter().zip(&want).enumerate() {
                if unique {
                    // Unique geodesics: every contribution is a small exact
                    // integer (or exact half after the final division), so
                    // the two computations must agree bit for bit.
                    assert_eq!(a, b, "edge {i} exact mismatch on n={n} mask={mask:b}");
                } else {
                    assert!(
                        (a - b).abs() <= 1e-9,
                        "edge {i}: {a} vs {b} on n={n} mask={mask:b}"
                    );
                }
            }
        }
    }
    assert_eq!(graphs, 1 + 2 + 8 + 64 + 1024 + 32768 + 2097152);
}

// ---------------------------------------------------------------------------
// 5. generator statistics

#[test]
fn generator_statistics_match_their_models() {
    let start = Instant::now();

    // ER: mean edge count across 200 seeds within 3 standard errors of
    // p·n(n−1)/2 = 1998; se = sqrt(N p (1−p) / 200) ≈ 3.154.
    let mut total = 0u64;
    for seed in 0..200 {
        total += generate_er(1000, 0.004, seed).unwrap().m() as u64;
    }
    let mean = total as f64 / 200.0;
    let expected = 0.004 * (1000.0 * 999.0 / 2.0);
    let se = (499500.0_f64 * 0.004 * 0.996 / 200.0).sqrt();
    assert!(
        (mean - expected).abs() <= 3.0 * se,
        "ER mean {mean} vs {expected} (3se = {})",
        3.0 * se
    );

    // WS without rewiring is the exact ring lattice: transitivity 2/3.
    let lattice = generate_ws(1000, 10, 0.0, 0).unwrap();
    assert_eq!(global_clustering(&lattice), Some(2.0 / 3.0));

    // WS at p = 0.05: mean transitivity near (2/3)(1−p)³ ≈ 0.571.
    let mut acc = 0.0;
    for seed in 0..50 {
        let g = generate_ws(1000, 10, 0.05, seed).unwrap();
        acc += global_clustering(&g).unwrap();
    }
    let mean_ccf = acc / 50.0;
    assert!(
        (mean_ccf - 0.571).abs() <= 0.05,
        "WS mean transitivity {mean_ccf} not within 0.05 of 0.571"
    );

    // BA degree tail close to the d⁻³ regime.
    let g = generate(&GeneratorSpec { model: Model::Ba { n: 10_000, m_attach: 2 }, seed: 0 })
        .unwrap();
    let degrees: Vec<usize> = (0..g.n()).map(|u| g.degree(u)).collect();
    let fit = fit_power_law(&degrees, 2).unwrap();
    assert!(
        fit.alpha >= 2.2 && fit.alpha <= 3.5,
        "BA fitted exponent {} outside [2.2, 3.5]",
        fit.alpha
    );

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 180, "generator sweep took {elapsed:?}, budget is 3min");
}

// ---------------------------------------------------------------------------
// 6. generative models land in their topology zones

#[test]
fn generated_models_occupy_their_map_zones() {
    let start = Instant::now();
    let thresholds = Thresholds::default();
    let cases: [(&str, Model, &str); 3] = [
        ("er", Model::Er { n: 2000, p: 4.0 / 1999.0 }, "STRING_BASED"),
        ("ws", Model::Ws { n: 2000, k: 10, p: 0.05 }, "GRID_BASED"),
        ("ba", Model::Ba { n: 2000, m_attach: 2 }, "STAR_BASED"),
    ];
    for (name, model, want) in cases {
        let specs: Vec<GeneratorSpec> =
            (0..20).map(|seed| GeneratorSpec { model, seed }).collect();
        let row = model_placement(
            &specs,
            Method::Louvain,
            DEFAULT_SEED,
            DEFAULT_WALK_LENGTH,
            10,
            &thresholds,
        )
        .unwrap();
        assert!(
            row.macro_communities > 0,
            "{name}: no macro communities found"
        );
        assert_eq!(
            row.plurality(),
            Some(want),
            "{name}: label counts {:?}",
            row.label_counts
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "placement took {elapsed:?}, budget is 5min");
}

// ---------------------------------------------------------------------------
// 7. reference coordinates classify to their zones

#[test]
fn reference_coordinates_classify_to_their_zones() {
    let th = Thresholds::default();
    assert_eq!(classify_topology(0.03, 0.87, &th).unwrap(), TopologyLabel::StarBased);
    assert_eq!(classify_topology(0.01, 0.07, &th).unwrap(), TopologyLabel::StringBased);
    assert_eq!(classify_topology(0.95, 0.99, &th).unwrap(), TopologyLabel::CliqueBased);
    assert_eq!(classify_topology(0.56, 0.18, &th).unwrap(), TopologyLabel::GridBased);
}

// ---------------------------------------------------------------------------
// 8. corpus-level correlation structure

#[test]
fn pooled_corpus_correlations_are_strong() {
    let start = Instant::now();
    let mut records: Vec<MetricRecord> = Vec::new();
    let corpus: [Model; 3] = [
        Model::Er { n: 300, p: 0.02 },
        Model::Ws { n: 300, k: 8, p: 0.1 },
        Model::Ba { n: 300, m_attach: 3 },
    ];
    for model in corpus {
        for seed in 0..50 {
            let g = generate(&GeneratorSpec { model, seed }).unwrap();
            let p = run_detector(&g, Method::Louvain, DEFAULT_SEED, DEFAULT_WALK_LENGTH).unwrap();
            records.extend(score_partition(&g, &p, 3));
        }
    }
    assert!(records.len() > 300, "corpus too small: {} records", records.len());
    let matrix = correlation_matrix(&records, 0.01).unwrap();
    let col = |name: &str| PROFILE_COLUMNS.iter().position(|&c| c == name).unwrap();

    let (ci, ti) = (col("ccf"), col("tpr"));
    assert!(
        matrix.r[ci][ti] >= 0.6,
        "r(ccf, tpr) = {} below 0.6",
        matrix.r[ci][ti]
    );
    assert!(
        matrix.p[ci][ti] <= 0.01,
        "p(ccf, tpr) = {} above 0.01",
        matrix.p[ci][ti]
    );

    let trio = [col("conductance"), col("mean_odf"), col("max_odf")];
    for (i, &a) in trio.iter().enumerate() {
        for &b in &trio[i + 1..] {
            assert!(
                matrix.r[a][b] >= 0.5,
                "r({}, {}) = {} below 0.5",
                PROFILE_COLUMNS[a],
                PROFILE_COLUMNS[b],
                matrix.r[a][b]
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "corpus run took {elapsed:?}, budget is 5min");
}

// ---------------------------------------------------------------------------
// 9. pipeline re-runs are byte-identical

fn run_pipeline(args: &[&str], out_dir: &Path) {
    let status = Command::new(env!("CARGO_BIN_EXE_mesoscope"))
        .arg("pipeline")
        .args(args)
        .args(["--out", out_dir.to_str().unwrap()])
        .status()
        .expect("binary runs");
    assert!(status.success());
}

fn dir_contents(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    fs::read_dir(dir)
        .unwrap()
        .map(|entry| {
            let entry = entry.unwrap();
            (entry.file_name().into_string().unwrap(), fs::read(entry.path()).unwrap())
        })
        .collect()
}

#[test]
fn pipeline_reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();

    let model_args =
        ["--model", "er", "--n", "400", "--p", "0.02", "--gen-seed", "5", "--method", "louvain"];
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    run_pipeline(&model_args, &a);
    run_pipeline(&model_args, &b);
    let ca = dir_contents(&a);
    let cb = dir_contents(&b);
    assert_eq!(
        ca.keys().collect::<Vec<_>>(),
        cb.keys().collect::<Vec<_>>(),
        "artifact sets differ"
    );
    assert!(ca.contains_key("correlations.csv"), "expected a corpus big enough to correlate");
    assert!(ca.contains_key("profile.json") && ca.contains_key("heatmap_macro.svg"));
    for (name, bytes) in &ca {
        assert_eq!(bytes, &cb[name], "{name} differs between runs");
    }

    // Same property with a file input.
    let graph_path = dir.path().join("barbell.txt");
    let (g, _) = barbell(5);
    fs::write(&graph_path, g.to_edge_list_string()).unwrap();
    let file_args = ["--input", graph_path.to_str().unwrap(), "--method", "walktrap"];
    let c = dir.path().join("c");
    let d = dir.path().join("d");
    run_pipeline(&file_args, &c);
    run_pipeline(&file_args, &d);
    let cc = dir_contents(&c);
    let cd = dir_contents(&d);
    assert_eq!(cc.len(), cd.len());
    for (name, bytes) in &cc {
        assert_eq!(bytes, &cd[name], "{name} differs between runs");
    }
}
