//! Degree statistics: degree sequence, average neighbor degrees, power sums.

use std::collections::BTreeMap;

use crate::exact::{rint, rzero, Rat};
use crate::graph::Graph;

/// Per-vertex degree data plus the aggregates the index computations and
/// inequality checks consume.
///
/// `mu[i]` is the average degree of the neighbors of `i`, kept exact, and
/// `neighbor_degree_sums[i] = degree(i) * mu[i]` is its integer sibling.
#[derive(Debug, Clone)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    /// nonzero entries of the degree distribution: degree -> multiplicity
    pub degree_counts: BTreeMap<usize, usize>,
    /// sum of d^p over vertices for p = 1..=5, at index p-1
    pub power_sums: [i128; 5],
    pub neighbor_degree_sums: Vec<i128>,
    pub mu: Vec<Rat>,
    /// sum of mu_i^2 over vertices
    pub mu_square_sum: Rat,
    /// sum of |d_i - mu_i| over vertices
    pub mu_deviation_sum: Rat,
    /// sum of (neighbor degree sum)^2 over vertices
    pub neighbor_sum_squares: i128,
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let n = g.n();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_degree = *degrees.iter().max().expect("nonempty");
    let min_degree = *degrees.iter().min().expect("nonempty");
    let mut degree_counts = BTreeMap::new();
    for &d in &degrees {
        *degree_counts.entry(d).or_insert(0usize) += 1;
    }
    let mut power_sums = [0i128; 5];
    for &d in &degrees {
        let mut p = 1i128;
        for slot in power_sums.iter_mut() {
            p *= d as i128;
            *slot += p;
        }
    }
    let neighbor_degree_sums: Vec<i128> = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&w| degrees[w] as i128).sum())
        .collect();
    let mu: Vec<Rat> = (0..n)
        .map(|v| rint(neighbor_degree_sums[v]) / rint(degrees[v] as i128))
        .collect();
    let mut mu_square_sum = rzero();
    let mut mu_deviation_sum = rzero();
    for v in 0..n {
        mu_square_sum += &mu[v] * &mu[v];
        let dev = rint(degrees[v] as i128) - &mu[v];
        mu_deviation_sum += if dev < rzero() { -dev } else { dev };
    }
    let neighbor_sum_squares = neighbor_degree_sums.iter().map(|&s| s * s).sum();
    DegreeProfile {
        degrees,
        max_degree,
        min_degree,
        degree_counts,
        power_sums,
        neighbor_degree_sums,
        mu,
        mu_square_sum,
        mu_deviation_sum,
        neighbor_sum_squares,
    }
}

impl DegreeProfile {
    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    /// Number of distinct degrees.
    pub fn degree_spread(&self) -> usize {
        self.degree_counts.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rfrac;

    fn k23() -> Graph {
        Graph::parse("0 2\n0 3\n0 4\n1 2\n1 3\n1 4").unwrap()
    }

    #[test]
    fn k23_profile() {
        let p = degree_profile(&k23());
        assert_eq!(p.max_degree, 3);
        assert_eq!(p.min_degree, 2);
        assert_eq!(p.degree_counts[&3], 2);
        assert_eq!(p.degree_counts[&2], 3);
        // degree-3 vertices see only degree-2 neighbors and vice versa
        for v in 0..5 {
            let expected = if p.degrees[v] == 3 { 2 } else { 3 };
            assert_eq!(p.mu[v], rint(expected));
        }
        assert_eq!(p.power_sums[0], 12);
        assert_eq!(p.power_sums[1], 30);
        assert_eq!(p.power_sums[2], 78);
    }

    #[test]
    fn c4_profile() {
        let g = Graph::parse("0 1\n1 2\n2 3\n3 0").unwrap();
        let p = degree_profile(&g);
        assert_eq!(p.max_degree, 2);
        assert_eq!(p.min_degree, 2);
        assert_eq!(p.degree_spread(), 1);
        assert!(p.mu.iter().all(|m| *m == rint(2)));
        assert_eq!(p.power_sums[1], 16);
    }

    #[test]
    fn star_power_sums() {
        let g = Graph::parse("0 1\n0 2\n0 3").unwrap();
        let p = degree_profile(&g);
        assert_eq!(p.power_sums[0], 6);
        assert_eq!(p.power_sums[1], 12);
        assert_eq!(p.power_sums[2], 30);
        assert_eq!(p.power_sums[4], 246);
        // center sees three leaves, each leaf sees the center
        assert_eq!(p.mu[0], rint(1));
        assert_eq!(p.mu[1], rint(3));
        assert_eq!(p.mu_deviation_sum, rint(2 + 3 * 2));
    }

    #[test]
    fn degree_square_sum_equals_degree_mu_sum() {
        for g in [
            k23(),
            Graph::parse("0 1\n1 2\n2 3\n3 0\n0 2").unwrap(),
            Graph::parse("0 1\n1 2\n2 3").unwrap(),
        ] {
            let p = degree_profile(&g);
            let lhs = rint(p.power_sums[1]);
            let rhs: Rat = (0..g.n())
                .map(|v| rint(p.degrees[v] as i128) * &p.mu[v])
                .sum();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn path_mu_values() {
        let g = Graph::parse("0 1\n1 2\n2 3").unwrap();
        let p = degree_profile(&g);
        assert_eq!(p.mu[0], rint(2));
        assert_eq!(p.mu[1], rfrac(3, 2));
        assert_eq!(p.neighbor_degree_sums, vec![2, 3, 3, 2]);
        assert_eq!(p.neighbor_sum_squares, 4 + 9 + 9 + 4);
    }
}
