//! Structural classification of a graph by its degree behaviour.
//!
//! The classes detected here are the ones the inequality checks name as
//! equality cases. They are read off the graph itself, never off the way a
//! graph was generated:
//!
//! * regular: one degree value
//! * bidegreed: exactly two degree values
//! * semiregular: bidegreed, bipartite, and each part has a constant degree
//! * weakly semiregular: non-regular with |d_i - d_j| equal on every edge
//! * nearly regular: non-regular with every edge difference at most 1
//! * weakly irregular: every edge difference exactly 1
//! * well-stabilized: non-regular and non-adjacent vertices always share a
//!   degree (equivalently: every pair of vertices with different degrees is
//!   adjacent)
//! * complete bipartite, star, complete split: by degree signature plus
//!   adjacency verification

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphClassification {
    /// common degree, when there is only one
    pub regular: Option<usize>,
    /// (max, min) when exactly two degree values occur
    pub bidegreed: Option<(usize, usize)>,
    pub semiregular: bool,
    /// the common edge difference, when positive and shared by all edges
    pub weakly_semiregular: Option<usize>,
    pub nearly_regular: bool,
    pub weakly_irregular: bool,
    pub well_stabilized: bool,
    /// part sizes (p, q) with p <= q
    pub complete_bipartite: Option<(usize, usize)>,
    /// vertex count of the star
    pub star: Option<usize>,
    /// (n, p): clique of size p joined to an independent set of size n-p
    pub complete_split: Option<(usize, usize)>,
    /// number of distinct degree values
    pub degree_spread: usize,
}

pub fn classify(g: &Graph) -> GraphClassification {
    let n = g.n();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut distinct: Vec<usize> = degrees.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let degree_spread = distinct.len();
    let regular = (degree_spread == 1).then(|| distinct[0]);
    let bidegreed = (degree_spread == 2).then(|| (distinct[1], distinct[0]));

    let mut edge_diffs: Vec<usize> = g
        .edges()
        .iter()
        .map(|&(u, v)| degrees[u].abs_diff(degrees[v]))
        .collect();
    edge_diffs.sort_unstable();
    edge_diffs.dedup();
    let weakly_semiregular = match edge_diffs.as_slice() {
        [eps] if *eps > 0 => Some(*eps),
        _ => None,
    };
    let weakly_irregular = edge_diffs == [1];
    let nearly_regular = regular.is_none() && edge_diffs.iter().all(|&d| d <= 1);

    let bipartition = g.bipartition();
    let semiregular = bidegreed.is_some()
        && match &bipartition {
            Some((p, q)) => part_degree(&degrees, p).is_some() && part_degree(&degrees, q).is_some(),
            None => false,
        };

    // well-stabilized: every cross-degree pair must be an edge, so compare
    // the number of cross-degree pairs with the number of cross-degree edges
    let well_stabilized = regular.is_none() && {
        let mut counts = std::collections::BTreeMap::new();
        for &d in &degrees {
            *counts.entry(d).or_insert(0i128) += 1;
        }
        let total: i128 = n as i128;
        let same: i128 = counts.values().map(|&c| c * c).sum();
        let cross_pairs = (total * total - same) / 2;
        let cross_edges = g
            .edges()
            .iter()
            .filter(|&&(u, v)| degrees[u] != degrees[v])
            .count() as i128;
        cross_pairs == cross_edges
    };

    let complete_bipartite = bipartition.as_ref().and_then(|(p, q)| {
        (p.len() * q.len() == g.m()).then(|| (p.len().min(q.len()), p.len().max(q.len())))
    });

    let star = {
        let centers = degrees.iter().filter(|&&d| d == n - 1).count();
        let leaves = degrees.iter().filter(|&&d| d == 1).count();
        (n >= 3 && centers == 1 && leaves == n - 1).then_some(n)
    };

    let complete_split = detect_complete_split(g, &degrees);

    GraphClassification {
        regular,
        bidegreed,
        semiregular,
        weakly_semiregular,
        nearly_regular,
        weakly_irregular,
        well_stabilized,
        complete_bipartite,
        star,
        complete_split,
        degree_spread,
    }
}

fn part_degree(degrees: &[usize], part: &[usize]) -> Option<usize> {
    let first = degrees[*part.first()?];
    part.iter().all(|&v| degrees[v] == first).then_some(first)
}

fn detect_complete_split(g: &Graph, degrees: &[usize]) -> Option<(usize, usize)> {
    let n = g.n();
    let clique: Vec<usize> = (0..n).filter(|&v| degrees[v] == n - 1).collect();
    let p = clique.len();
    if p == 0 {
        return None;
    }
    if p == n {
        // complete graph: any single vertex works as the independent set
        return Some((n, n - 1));
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degrees[v] != n - 1).collect();
    if rest.iter().any(|&v| degrees[v] != p) {
        return None;
    }
    // degree-(n-1) vertices are adjacent to everything by definition, so it
    // remains to check that the rest is independent
    for (i, &u) in rest.iter().enumerate() {
        for &v in &rest[i + 1..] {
            if g.has_edge(u, v) {
                return None;
            }
        }
    }
    Some((n, p))
}

impl GraphClassification {
    /// Class tags for reports, deterministic order.
    pub fn tags(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(r) = self.regular {
            out.push(format!("regular({r})"));
        }
        if let Some((dmax, dmin)) = self.bidegreed {
            out.push(format!("bidegreed({dmax},{dmin})"));
        }
        if self.semiregular {
            out.push("semiregular".into());
        }
        if let Some(eps) = self.weakly_semiregular {
            out.push(format!("weakly-semiregular(eps={eps})"));
        }
        if self.nearly_regular {
            out.push("nearly-regular".into());
        }
        if self.weakly_irregular {
            out.push("weakly-irregular".into());
        }
        if self.well_stabilized {
            out.push("well-stabilized".into());
        }
        if let Some((p, q)) = self.complete_bipartite {
            out.push(format!("complete-bipartite({p},{q})"));
        }
        if let Some(n) = self.star {
            out.push(format!("star({n})"));
        }
        if let Some((n, p)) = self.complete_split {
            out.push(format!("complete-split({n},{p})"));
        }
        if self.degree_spread >= 3 {
            out.push(format!("degree-spread({})", self.degree_spread));
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct ImplicationCheck {
    pub name: &'static str,
    /// false when the premise never applied to this graph
    pub premise: bool,
    pub holds: bool,
}

/// Structural implications between the classes, evaluated on one graph.
/// A violated implication signals a classifier defect.
pub fn taxonomy_implications(g: &Graph, c: &GraphClassification) -> Vec<ImplicationCheck> {
    let bip = g.is_bipartite();
    let mut out = Vec::new();
    let mut imp = |name: &'static str, premise: bool, conclusion: bool| {
        out.push(ImplicationCheck {
            name,
            premise,
            holds: !premise || conclusion,
        });
    };
    imp(
        "weakly-irregular => weakly-semiregular(eps=1)",
        c.weakly_irregular,
        c.weakly_semiregular == Some(1),
    );
    imp(
        "weakly-irregular => nearly-regular",
        c.weakly_irregular,
        c.nearly_regular,
    );
    imp("semiregular => bidegreed", c.semiregular, c.bidegreed.is_some());
    imp("semiregular => bipartite", c.semiregular, bip);
    imp(
        "weakly-semiregular, non-regular => bipartite",
        c.weakly_semiregular.is_some() && c.regular.is_none(),
        bip,
    );
    let irregular_classes = c.bidegreed.is_some()
        || c.semiregular
        || c.weakly_semiregular.is_some()
        || c.nearly_regular
        || c.weakly_irregular
        || c.well_stabilized;
    imp(
        "regular => no irregularity class",
        c.regular.is_some(),
        !irregular_classes,
    );
    out
}
