//! Simple connected graphs and the edge-list exchange format.
//!
//! A [`Graph`] is validated on construction: no self-loops, no parallel
//! edges, connected, at least three vertices. Vertices carry the labels they
//! had in the input; internally they are compacted to `0..n` in order of
//! first appearance.
//!
//! Edge-list format: UTF-8 text, one edge per line as two nonnegative
//! integers `u v`, `#` starts a comment, blank lines are ignored.

use std::collections::HashMap;

use thiserror::Error;

use crate::exact::{rint, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: malformed edge `{text}` (expected two nonnegative integers)")]
    MalformedLine { line: usize, text: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: u64 },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: u64, v: u64 },
    #[error("edge list is empty")]
    Empty,
    #[error("graph has {n} vertices, need at least 3")]
    TooFewVertices { n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("expected {expected} vertex weights, got {got}")]
    WeightCount { expected: usize, got: usize },
}

#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<u64>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from labeled edges. Labels are compacted to internal
    /// ids `0..n` in order of first appearance; the labels are kept for
    /// reporting and serialization.
    pub fn from_labeled_edges(edges: &[(u64, u64)]) -> Result<Graph, GraphError> {
        let numbered: Vec<(usize, u64, u64)> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (i + 1, u, v))
            .collect();
        Self::assemble(&numbered)
    }

    /// Builds a graph on vertices `0..n` from internal edges. Used by the
    /// generators, where the construction is correct by design.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let labeled: Vec<(u64, u64)> = edges.iter().map(|&(u, v)| (u as u64, v as u64)).collect();
        let g = Self::from_labeled_edges(&labeled)?;
        if g.n() != n {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// Parses the edge-list format. Diagnostics carry 1-based line numbers.
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut numbered = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let content = content.trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            let (u, v) = match fields.as_slice() {
                [a, b] => match (a.parse::<u64>(), b.parse::<u64>()) {
                    (Ok(u), Ok(v)) => (u, v),
                    _ => {
                        return Err(GraphError::MalformedLine {
                            line,
                            text: content.to_string(),
                        })
                    }
                },
                _ => {
                    return Err(GraphError::MalformedLine {
                        line,
                        text: content.to_string(),
                    })
                }
            };
            numbered.push((line, u, v));
        }
        Self::assemble(&numbered)
    }

    fn assemble(numbered: &[(usize, u64, u64)]) -> Result<Graph, GraphError> {
        if numbered.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut ids: HashMap<u64, usize> = HashMap::new();
        let mut labels: Vec<u64> = Vec::new();
        let mut intern = |label: u64, labels: &mut Vec<u64>| -> usize {
            *ids.entry(label).or_insert_with(|| {
                labels.push(label);
                labels.len() - 1
            })
        };
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        let mut edges = Vec::with_capacity(numbered.len());
        for &(line, lu, lv) in numbered {
            if lu == lv {
                return Err(GraphError::SelfLoop { line, vertex: lu });
            }
            let u = intern(lu, &mut labels);
            let v = intern(lv, &mut labels);
            let key = (u.min(v), u.max(v));
            if seen.insert(key, ()).is_some() {
                return Err(GraphError::DuplicateEdge {
                    line,
                    u: lu.min(lv),
                    v: lu.max(lv),
                });
            }
            edges.push(key);
        }
        let n = labels.len();
        if n < 3 {
            return Err(GraphError::TooFewVertices { n });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        edges.sort_unstable();
        let g = Graph { labels, adj, edges };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as internal id pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edge set under the original labels, canonically ordered.
    pub fn labeled_edges(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (self.labels[u], self.labels[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Canonical edge-list serialization: original labels, smaller endpoint
    /// first, lines sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.labeled_edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Two-colors the graph if possible; parts are sorted vertex lists with
    /// the part containing vertex 0 first.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        color[0] = 0;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
        let mut parts = (Vec::new(), Vec::new());
        for v in 0..n {
            if color[v] == 0 {
                parts.0.push(v);
            } else {
                parts.1.push(v);
            }
        }
        Some(parts)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_triangle_free(&self) -> bool {
        for &(u, v) in &self.edges {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let mut i = 0;
            let mut j = 0;
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
        }
        true
    }

    /// For vertex weights `x`, returns the pair
    /// `(sum_i x_i, sum_{(i,j) in E} (x_i/d_i + x_j/d_j))`.
    /// The two are equal on every graph: each vertex term is counted once
    /// per incident edge at weight `x_i/d_i`.
    pub fn vertex_edge_sum_identity(&self, x: &[Rat]) -> Result<(Rat, Rat), GraphError> {
        if x.len() != self.n() {
            return Err(GraphError::WeightCount {
                expected: self.n(),
                got: x.len(),
            });
        }
        let vertex_sum: Rat = x.iter().cloned().sum();
        let mut edge_sum = rint(0);
        for &(u, v) in &self.edges {
            edge_sum += &x[u] / rint(self.degree(u) as i128) + &x[v] / rint(self.degree(v) as i128);
        }
        Ok((vertex_sum, edge_sum))
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n() && self.labeled_edges() == other.labeled_edges()
    }
}

impl Eq for Graph {}
