//! Degree-based topological indices and irregularity measures.
//!
//! | quantity | definition | arithmetic |
//! |----------|------------|------------|
//! | M1       | sum of d_i^2 (equivalently sum of d_i+d_j over edges) | integer |
//! | M2       | sum of d_i*d_j over edges | integer |
//! | F        | sum of d_i^3 (equivalently sum of d_i^2+d_j^2 over edges) | integer |
//! | X_a      | sum of (d_i+d_j)^a over edges | exact for integer a |
//! | ^l M2    | sum of (d_i*d_j)^l over edges | exact for integer l |
//! | H        | sum of 2/(d_i+d_j) over edges | rational |
//! | Irr      | sum of |d_i-d_j| over edges | integer |
//! | IRL      | F - 2*M2 = sum of (d_i-d_j)^2 over edges | integer |
//! | IRF      | F - (2m/n)*M1 | rational |
//! | IRM      | M2 - 4m^3/n^2 | rational |
//! | VAR      | M1/n - (2m/n)^2 | rational |
//!
//! Everything rational in the degrees is computed exactly; f64 enters only
//! for fractional exponents.

use crate::degrees::{degree_profile, DegreeProfile};
use crate::exact::{rfrac, rint, Rat};
use crate::graph::Graph;

/// First Zagreb index, sum of squared degrees.
pub fn first_zagreb(g: &Graph) -> i128 {
    (0..g.n()).map(|v| (g.degree(v) as i128).pow(2)).sum()
}

/// Second Zagreb index, sum of degree products over edges.
pub fn second_zagreb(g: &Graph) -> i128 {
    g.edges()
        .iter()
        .map(|&(u, v)| g.degree(u) as i128 * g.degree(v) as i128)
        .sum()
}

/// Forgotten index, sum of cubed degrees.
pub fn forgotten_index(g: &Graph) -> i128 {
    (0..g.n()).map(|v| (g.degree(v) as i128).pow(3)).sum()
}

/// Sum of d^p over vertices.
pub fn degree_power_sum(g: &Graph, p: u32) -> i128 {
    (0..g.n()).map(|v| (g.degree(v) as i128).pow(p)).sum()
}

/// General sum-connectivity index: sum of (d_i+d_j)^alpha over edges.
pub fn general_sum_connectivity(g: &Graph, alpha: f64) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| ((g.degree(u) + g.degree(v)) as f64).powf(alpha))
        .sum()
}

/// Sum-connectivity index, the alpha = -1/2 case.
pub fn sum_connectivity(g: &Graph) -> f64 {
    general_sum_connectivity(g, -0.5)
}

/// Exact general sum-connectivity at an integer exponent (any sign).
pub fn general_sum_connectivity_exact(g: &Graph, alpha: i64) -> Rat {
    g.edges()
        .iter()
        .map(|&(u, v)| ipow(rint((g.degree(u) + g.degree(v)) as i128), alpha))
        .sum()
}

/// Harmonic index, sum of 2/(d_i+d_j) over edges. Exact.
pub fn harmonic_index(g: &Graph) -> Rat {
    g.edges()
        .iter()
        .map(|&(u, v)| rfrac(2, (g.degree(u) + g.degree(v)) as i128))
        .sum()
}

/// Variable second Zagreb index at a real exponent.
pub fn variable_second_zagreb(g: &Graph, lambda: f64) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| ((g.degree(u) * g.degree(v)) as f64).powf(lambda))
        .sum()
}

/// Exact variable second Zagreb index at an integer exponent (any sign).
pub fn variable_second_zagreb_exact(g: &Graph, lambda: i64) -> Rat {
    g.edges()
        .iter()
        .map(|&(u, v)| ipow(rint((g.degree(u) * g.degree(v)) as i128), lambda))
        .sum()
}

fn ipow(base: Rat, e: i64) -> Rat {
    let p = base.pow(e.unsigned_abs() as i32);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Albertson irregularity, sum of |d_i-d_j| over edges.
pub fn albertson_index(g: &Graph) -> i128 {
    g.edges()
        .iter()
        .map(|&(u, v)| (g.degree(u) as i128 - g.degree(v) as i128).abs())
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Irregularity {
    /// F - 2*M2, the Laplacian quadratic form of the degree vector
    pub irl: i128,
    /// F - (2m/n)*M1
    pub irf: Rat,
    /// M2 - 4m^3/n^2
    pub irm: Rat,
    /// degree variance M1/n - (2m/n)^2
    pub var: Rat,
}

pub fn irregularity_indices(g: &Graph) -> Irregularity {
    let n = g.n() as i128;
    let m = g.m() as i128;
    let m1 = first_zagreb(g);
    let m2 = second_zagreb(g);
    let f = forgotten_index(g);
    Irregularity {
        irl: f - 2 * m2,
        irf: rint(f) - rfrac(2 * m, n) * rint(m1),
        irm: rint(m2) - rfrac(4 * m * m * m, n * n),
        var: rfrac(m1, n) - rfrac(2 * m, n) * rfrac(2 * m, n),
    }
}

/// Consolidated index report for one graph.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub m1: i128,
    pub m2: i128,
    pub forgotten: i128,
    pub degree_power_sum_5: i128,
    pub albertson: i128,
    /// F - 2*M2 (degree vector against the Laplacian)
    pub irl: i128,
    /// F + 2*M2 (degree vector against the signless Laplacian); equals X_2
    pub dtqd: i128,
    /// X_3, exact
    pub x3: i128,
    pub irf: Rat,
    pub irm: Rat,
    pub var: Rat,
    pub harmonic: Rat,
    /// X at alpha = -1/2
    pub sum_connectivity: f64,
    /// (alpha, X_alpha) samples at alpha in {-1, -1/2, 1/2, 2, 3}
    pub general_sum_connectivity: Vec<(f64, f64)>,
    /// (lambda, ^lambda M2) samples at lambda in {-1, 1, 2}
    pub variable_second_zagreb: Vec<(i64, Rat)>,
}

pub fn invariant_report(g: &Graph) -> InvariantReport {
    let profile = degree_profile(g);
    invariant_report_with_profile(g, &profile)
}

pub fn invariant_report_with_profile(g: &Graph, profile: &DegreeProfile) -> InvariantReport {
    let m1 = profile.power_sums[1];
    let forgotten = profile.power_sums[2];
    let m2 = second_zagreb(g);
    let irr = irregularity_indices(g);
    let gsc = [-1.0, -0.5, 0.5, 2.0, 3.0]
        .into_iter()
        .map(|a| (a, general_sum_connectivity(g, a)))
        .collect();
    let vz = [-1i64, 1, 2]
        .into_iter()
        .map(|l| (l, variable_second_zagreb_exact(g, l)))
        .collect();
    InvariantReport {
        n: g.n(),
        m: g.m(),
        max_degree: profile.max_degree,
        min_degree: profile.min_degree,
        m1,
        m2,
        forgotten,
        degree_power_sum_5: profile.power_sums[4],
        albertson: albertson_index(g),
        irl: forgotten - 2 * m2,
        dtqd: forgotten + 2 * m2,
        x3: g
            .edges()
            .iter()
            .map(|&(u, v)| ((g.degree(u) + g.degree(v)) as i128).pow(3))
            .sum(),
        irf: irr.irf,
        irm: irr.irm,
        var: irr.var,
        harmonic: harmonic_index(g),
        sum_connectivity: sum_connectivity(g),
        general_sum_connectivity: gsc,
        variable_second_zagreb: vz,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rfrac, rint, to_f64};

    fn k23() -> Graph {
        Graph::parse("0 2\n0 3\n0 4\n1 2\n1 3\n1 4").unwrap()
    }

    fn s4() -> Graph {
        Graph::parse("0 1\n0 2\n0 3").unwrap()
    }

    fn c4() -> Graph {
        Graph::parse("0 1\n1 2\n2 3\n3 0").unwrap()
    }

    // the three trees on 8 vertices with one degree-4 vertex, three of
    // degree 2, four leaves: branch lengths (4,1,1,1), (3,2,1,1), (2,2,2,1)
    fn branch_tree(lengths: [usize; 4]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 1usize;
        for len in lengths {
            let mut prev = 0usize;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::from_edges(next, &edges).unwrap()
    }

    #[test]
    fn first_zagreb_values() {
        assert_eq!(first_zagreb(&k23()), 30);
        assert_eq!(first_zagreb(&c4()), 16);
        assert_eq!(first_zagreb(&branch_tree([4, 1, 1, 1])), 32);
    }

    #[test]
    fn first_zagreb_edge_form_agrees() {
        for g in [k23(), s4(), c4(), branch_tree([3, 2, 1, 1])] {
            let edge_form: i128 = g
                .edges()
                .iter()
                .map(|&(u, v)| (g.degree(u) + g.degree(v)) as i128)
                .sum();
            assert_eq!(first_zagreb(&g), edge_form);
        }
    }

    #[test]
    fn second_zagreb_values() {
        assert_eq!(second_zagreb(&k23()), 36);
        assert_eq!(second_zagreb(&branch_tree([4, 1, 1, 1])), 30);
        assert_eq!(second_zagreb(&branch_tree([3, 2, 1, 1])), 32);
        assert_eq!(second_zagreb(&branch_tree([2, 2, 2, 1])), 34);
    }

    #[test]
    fn forgotten_values() {
        assert_eq!(forgotten_index(&k23()), 78);
        assert_eq!(forgotten_index(&s4()), 30);
        for lengths in [[4, 1, 1, 1], [3, 2, 1, 1], [2, 2, 2, 1]] {
            assert_eq!(forgotten_index(&branch_tree(lengths)), 92);
        }
    }

    #[test]
    fn forgotten_edge_form_agrees() {
        for g in [k23(), s4(), c4()] {
            let edge_form: i128 = g
                .edges()
                .iter()
                .map(|&(u, v)| {
                    (g.degree(u) as i128).pow(2) + (g.degree(v) as i128).pow(2)
                })
                .sum();
            assert_eq!(forgotten_index(&g), edge_form);
        }
    }

    #[test]
    fn power_sums() {
        assert_eq!(degree_power_sum(&k23(), 1), 12);
        assert_eq!(degree_power_sum(&k23(), 5), 582);
        assert_eq!(degree_power_sum(&s4(), 3), 30);
    }

    #[test]
    fn sum_connectivity_k23() {
        // all six edges have endpoint degree sum 5
        let expected = 6.0 / 5.0f64.sqrt();
        assert!((sum_connectivity(&k23()) - expected).abs() < 1e-12);
        assert_eq!(general_sum_connectivity_exact(&k23(), 2), rint(150));
        assert_eq!(general_sum_connectivity_exact(&k23(), 3), rint(750));
        assert_eq!(general_sum_connectivity_exact(&k23(), -1), rfrac(6, 5));
    }

    #[test]
    fn general_sum_connectivity_matches_exact_at_integer_exponents() {
        for g in [k23(), s4(), c4()] {
            for a in [-1i64, 1, 2, 3] {
                let real = general_sum_connectivity(&g, a as f64);
                let exact = to_f64(&general_sum_connectivity_exact(&g, a));
                assert!((real - exact).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic_index(&k23()), rfrac(12, 5));
        assert_eq!(harmonic_index(&s4()), rfrac(3, 2));
        assert_eq!(harmonic_index(&c4()), rint(2));
    }

    #[test]
    fn variable_second_zagreb_values() {
        assert_eq!(variable_second_zagreb_exact(&k23(), 2), rint(216));
        assert_eq!(variable_second_zagreb_exact(&s4(), 2), rint(27));
        assert_eq!(variable_second_zagreb_exact(&k23(), 1), rint(36));
        assert_eq!(variable_second_zagreb_exact(&k23(), -1), rint(1));
        let real = variable_second_zagreb(&k23(), 2.0);
        assert!((real - 216.0).abs() < 1e-9);
    }

    #[test]
    fn albertson_values() {
        assert_eq!(albertson_index(&k23()), 6);
        assert_eq!(albertson_index(&c4()), 0);
        assert_eq!(albertson_index(&s4()), 6);
    }

    #[test]
    fn irregularity_star() {
        let ir = irregularity_indices(&s4());
        assert_eq!(ir.irl, 12);
        assert_eq!(ir.irf, rint(12));
        assert_eq!(ir.irm, rfrac(9, 4));
        assert_eq!(ir.var, rfrac(3, 4));
    }

    #[test]
    fn irregularity_vanishes_on_regular() {
        let ir = irregularity_indices(&c4());
        assert_eq!(ir.irl, 0);
        assert_eq!(ir.irf, rint(0));
        assert_eq!(ir.irm, rint(0));
        assert_eq!(ir.var, rint(0));
    }

    #[test]
    fn irl_is_edge_difference_square_sum() {
        for g in [k23(), s4(), branch_tree([2, 2, 2, 1])] {
            let direct: i128 = g
                .edges()
                .iter()
                .map(|&(u, v)| (g.degree(u) as i128 - g.degree(v) as i128).pow(2))
                .sum();
            assert_eq!(irregularity_indices(&g).irl, direct);
        }
    }

    #[test]
    fn report_k23() {
        let r = invariant_report(&k23());
        assert_eq!((r.n, r.m), (5, 6));
        assert_eq!((r.max_degree, r.min_degree), (3, 2));
        assert_eq!(r.m1, 30);
        assert_eq!(r.m2, 36);
        assert_eq!(r.forgotten, 78);
        assert_eq!(r.albertson, 6);
        assert_eq!(r.irl, 6);
        assert_eq!(r.dtqd, 150);
        assert_eq!(r.x3, 750);
        assert_eq!(r.degree_power_sum_5, 582);
        assert_eq!(r.harmonic, rfrac(12, 5));
        assert_eq!(r.irl, r.forgotten - 2 * r.m2);
        assert_eq!(r.dtqd, r.forgotten + 2 * r.m2);
        let x2 = r
            .general_sum_connectivity
            .iter()
            .find(|(a, _)| *a == 2.0)
            .unwrap()
            .1;
        assert!((x2 - r.dtqd as f64).abs() < 1e-9);
        let vz1 = r.variable_second_zagreb.iter().find(|(l, _)| *l == 1).unwrap();
        assert_eq!(vz1.1, rint(r.m2));
    }
}
