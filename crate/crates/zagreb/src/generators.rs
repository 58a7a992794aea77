//! Deterministic graph generators: named families, dendrimers, seeded
//! random connected graphs, and corpus assembly for verification runs.
//!
//! Randomness comes from ChaCha8 seeded explicitly, so every output is
//! reproducible across platforms and runs. Random trees are drawn by
//! decoding a uniform Prüfer sequence; extra edges are a partial
//! Fisher-Yates draw over the non-tree pairs.

use std::ops::RangeInclusive;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("{family}: parameter out of range ({detail})")]
    BadParameter {
        family: &'static str,
        detail: String,
    },
    #[error("edge count {m} outside [{min}, {max}] for {n} vertices")]
    BadEdgeCount { n: usize, m: usize, min: usize, max: usize },
    #[error("no simple connected {r}-regular graph found on {n} vertices after {attempts} attempts")]
    RegularSearchExhausted { n: usize, r: usize, attempts: usize },
}

fn bad(family: &'static str, detail: impl Into<String>) -> GenError {
    GenError::BadParameter {
        family,
        detail: detail.into(),
    }
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, &edges).expect("generator produced an invalid graph")
}

pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(bad("cycle", format!("need n >= 3, got {n}")));
    }
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
}

pub fn path(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(bad("path", format!("need n >= 3, got {n}")));
    }
    Ok(build(n, (0..n - 1).map(|i| (i, i + 1)).collect()))
}

pub fn complete(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(bad("complete", format!("need n >= 3, got {n}")));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Ok(build(n, edges))
}

/// Star on n vertices: one center, n-1 leaves.
pub fn star(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(bad("star", format!("need n >= 3, got {n}")));
    }
    Ok(build(n, (1..n).map(|i| (0, i)).collect()))
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph, GenError> {
    if p == 0 || q == 0 || p + q < 3 {
        return Err(bad(
            "complete-bipartite",
            format!("need p,q >= 1 and p+q >= 3, got ({p},{q})"),
        ));
    }
    let mut edges = Vec::new();
    for i in 0..p {
        for j in 0..q {
            edges.push((i, p + j));
        }
    }
    Ok(build(p + q, edges))
}

/// Wheel on n vertices: a hub joined to every vertex of an (n-1)-cycle.
pub fn wheel(n: usize) -> Result<Graph, GenError> {
    if n < 4 {
        return Err(bad("wheel", format!("need n >= 4, got {n}")));
    }
    let rim = n - 1;
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
    for i in 0..rim {
        edges.push((1 + i, 1 + (i + 1) % rim));
    }
    Ok(build(n, edges))
}

/// Complete split graph CS(n, p): a clique of size p completely joined to
/// an independent set of size n-p.
pub fn complete_split(n: usize, p: usize) -> Result<Graph, GenError> {
    if n < 3 || p == 0 || p >= n {
        return Err(bad(
            "complete-split",
            format!("need n >= 3 and 1 <= p < n, got ({n},{p})"),
        ));
    }
    let mut edges = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            edges.push((i, j));
        }
        for j in p..n {
            edges.push((i, j));
        }
    }
    Ok(build(n, edges))
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GenError> {
    let n: usize = parts.iter().sum();
    if parts.len() < 2 || parts.iter().any(|&p| p == 0) || n < 3 {
        return Err(bad(
            "complete-multipartite",
            format!("need >= 2 nonempty parts totalling >= 3 vertices, got {parts:?}"),
        ));
    }
    let mut offsets = vec![0usize];
    for &p in parts {
        offsets.push(offsets.last().unwrap() + p);
    }
    let mut edges = Vec::new();
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            for i in offsets[a]..offsets[a + 1] {
                for j in offsets[b]..offsets[b + 1] {
                    edges.push((i, j));
                }
            }
        }
    }
    Ok(build(n, edges))
}

/// Cascade tree: root of degree delta; each internal vertex of degree j has
/// j-1 children of degree j-1, down to the leaves. Every edge joins
/// consecutive degrees, so the tree is weakly irregular.
pub fn dendrimer(delta: usize) -> Result<Graph, GenError> {
    if delta < 2 {
        return Err(bad("dendrimer", format!("need delta >= 2, got {delta}")));
    }
    let mut edges = Vec::new();
    let mut next = 1usize;
    // (vertex, its degree target)
    let mut frontier = vec![(0usize, delta)];
    while let Some((v, deg)) = frontier.pop() {
        if deg <= 1 {
            continue;
        }
        let children = if v == 0 { deg } else { deg - 1 };
        for _ in 0..children {
            edges.push((v, next));
            frontier.push((next, deg - 1));
            next += 1;
        }
    }
    Ok(build(next, edges))
}

/// Decodes a Prüfer sequence (length n-2, entries in 0..n) into the edge
/// set of its labeled tree.
fn pruefer_edges(n: usize, prufer: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in prufer {
        degree[x] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in prufer {
        let leaf = *leaves.iter().next().expect("leaf available");
        leaves.remove(&leaf);
        edges.push((leaf.min(x), leaf.max(x)));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let mut last = leaves.into_iter();
    let (a, b) = (last.next().unwrap(), last.next().unwrap());
    edges.push((a.min(b), a.max(b)));
    edges
}

/// The labeled tree of a Prüfer sequence. Every tree on n vertices arises
/// from exactly one sequence, so iterating all n^(n-2) sequences
/// enumerates all labeled trees.
pub fn tree_from_pruefer(n: usize, sequence: &[usize]) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(bad("pruefer-tree", format!("need n >= 3, got {n}")));
    }
    if sequence.len() != n - 2 || sequence.iter().any(|&x| x >= n) {
        return Err(bad(
            "pruefer-tree",
            format!("need {} entries below {n}", n - 2),
        ));
    }
    Ok(build(n, pruefer_edges(n, sequence)))
}

/// Uniform random tree on n labeled vertices via a Prüfer sequence.
fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    pruefer_edges(n, &prufer)
}

/// Random connected graph: a uniform spanning tree plus m-(n-1) extra edges
/// drawn uniformly without replacement from the remaining pairs.
pub fn random_connected_with(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(bad("random", format!("need n >= 3, got {n}")));
    }
    let max = n * (n - 1) / 2;
    if m < n - 1 || m > max {
        return Err(GenError::BadEdgeCount {
            n,
            m,
            min: n - 1,
            max,
        });
    }
    let tree = random_tree(n, rng);
    let in_tree: std::collections::HashSet<(usize, usize)> = tree.iter().copied().collect();
    let mut pool: Vec<(usize, usize)> = Vec::with_capacity(max - tree.len());
    for i in 0..n {
        for j in i + 1..n {
            if !in_tree.contains(&(i, j)) {
                pool.push((i, j));
            }
        }
    }
    let extra = m - (n - 1);
    // partial Fisher-Yates: the first `extra` slots become the sample
    for k in 0..extra {
        let pick = rng.random_range(k..pool.len());
        pool.swap(k, pick);
    }
    let mut edges = tree;
    edges.extend_from_slice(&pool[..extra]);
    Ok(build(n, edges))
}

pub fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    random_connected_with(n, m, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Random r-regular graph by the pairing model with rejection, connectivity
/// included.
pub fn random_regular_with(n: usize, r: usize, rng: &mut ChaCha8Rng) -> Result<Graph, GenError> {
    if n < 3 || r < 2 || r >= n || (n * r) % 2 != 0 {
        return Err(bad(
            "random-regular",
            format!("need 2 <= r < n, n*r even, n >= 3, got ({n},{r})"),
        ));
    }
    const ATTEMPTS: usize = 5000;
    for _ in 0..ATTEMPTS {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(r)).collect();
        for k in 0..stubs.len() {
            let pick = rng.random_range(k..stubs.len());
            stubs.swap(k, pick);
        }
        let mut seen = std::collections::HashSet::new();
        let mut ok = true;
        let mut edges = Vec::with_capacity(n * r / 2);
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                ok = false;
                break;
            }
            edges.push((u.min(v), u.max(v)));
        }
        if !ok {
            continue;
        }
        if let Ok(g) = Graph::from_edges(n, &edges) {
            return Ok(g);
        }
    }
    Err(GenError::RegularSearchExhausted {
        n,
        r,
        attempts: ATTEMPTS,
    })
}

pub fn random_regular(n: usize, r: usize, seed: u64) -> Result<Graph, GenError> {
    random_regular_with(n, r, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// One family slice of a corpus.
#[derive(Debug, Clone)]
pub enum FamilyRange {
    Cycles(RangeInclusive<usize>),
    Paths(RangeInclusive<usize>),
    Completes(RangeInclusive<usize>),
    Stars(RangeInclusive<usize>),
    /// all K_{p,q} with 1 <= p <= q <= max_part and p+q >= 3
    CompleteBipartites { max_part: usize },
    Wheels(RangeInclusive<usize>),
    /// all CS(n, p) with 2 <= p <= n-2 for n in the range
    CompleteSplits(RangeInclusive<usize>),
    Multipartites(Vec<Vec<usize>>),
    Dendrimers(RangeInclusive<usize>),
    /// (n, r) pairs, one seeded draw each
    RandomRegulars(Vec<(usize, usize)>),
}

#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub families: Vec<FamilyRange>,
    pub random_count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
}

impl CorpusSpec {
    /// The default verification corpus: every family at small parameters
    /// plus seeded random connected graphs in the given order range.
    pub fn verification(random_count: usize, seed: u64) -> CorpusSpec {
        CorpusSpec {
            families: vec![
                FamilyRange::Cycles(3..=12),
                FamilyRange::Paths(3..=12),
                FamilyRange::Completes(3..=8),
                FamilyRange::Stars(3..=12),
                FamilyRange::CompleteBipartites { max_part: 6 },
                FamilyRange::Wheels(4..=10),
                FamilyRange::CompleteSplits(4..=8),
                FamilyRange::Multipartites(vec![
                    vec![1, 1, 1, 2],
                    vec![1, 1, 3],
                    vec![1, 2, 2],
                    vec![1, 2, 3],
                    vec![2, 2, 3],
                    vec![2, 3, 3],
                    vec![3, 3, 3],
                ]),
                FamilyRange::Dendrimers(2..=6),
                FamilyRange::RandomRegulars(vec![(6, 3), (8, 3), (8, 4), (10, 3), (12, 4)]),
            ],
            random_count,
            n_min: 3,
            n_max: 24,
            seed,
        }
    }
}

/// Materializes a corpus spec into labeled graphs, in a deterministic
/// order: families first (in spec order), then the random block.
pub fn generate_corpus(spec: &CorpusSpec) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for family in &spec.families {
        match family {
            FamilyRange::Cycles(r) => {
                for n in r.clone() {
                    out.push((format!("cycle-{n}"), cycle(n).expect("corpus cycle")));
                }
            }
            FamilyRange::Paths(r) => {
                for n in r.clone() {
                    out.push((format!("path-{n}"), path(n).expect("corpus path")));
                }
            }
            FamilyRange::Completes(r) => {
                for n in r.clone() {
                    out.push((format!("complete-{n}"), complete(n).expect("corpus complete")));
                }
            }
            FamilyRange::Stars(r) => {
                for n in r.clone() {
                    out.push((format!("star-{n}"), star(n).expect("corpus star")));
                }
            }
            FamilyRange::CompleteBipartites { max_part } => {
                for p in 1..=*max_part {
                    for q in p..=*max_part {
                        if p + q >= 3 {
                            out.push((
                                format!("kbip-{p}-{q}"),
                                complete_bipartite(p, q).expect("corpus kbip"),
                            ));
                        }
                    }
                }
            }
            FamilyRange::Wheels(r) => {
                for n in r.clone() {
                    out.push((format!("wheel-{n}"), wheel(n).expect("corpus wheel")));
                }
            }
            FamilyRange::CompleteSplits(r) => {
                for n in r.clone() {
                    for p in 2..n.saturating_sub(1) {
                        out.push((
                            format!("csplit-{n}-{p}"),
                            complete_split(n, p).expect("corpus csplit"),
                        ));
                    }
                }
            }
            FamilyRange::Multipartites(list) => {
                for parts in list {
                    let tag: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                    out.push((
                        format!("kmulti-{}", tag.join("-")),
                        complete_multipartite(parts).expect("corpus kmulti"),
                    ));
                }
            }
            FamilyRange::Dendrimers(r) => {
                for delta in r.clone() {
                    out.push((
                        format!("dendrimer-{delta}"),
                        dendrimer(delta).expect("corpus dendrimer"),
                    ));
                }
            }
            FamilyRange::RandomRegulars(list) => {
                for &(n, rr) in list {
                    out.push((
                        format!("rregular-{n}-{rr}"),
                        random_regular_with(n, rr, &mut rng).expect("corpus rregular"),
                    ));
                }
            }
        }
    }
    for i in 0..spec.random_count {
        let n = rng.random_range(spec.n_min..=spec.n_max);
        let max = n * (n - 1) / 2;
        let m = rng.random_range(n - 1..=max);
        let g = random_connected_with(n, m, &mut rng).expect("corpus random");
        out.push((format!("random-{i:05}-n{n}-m{m}"), g));
    }
    out
}
