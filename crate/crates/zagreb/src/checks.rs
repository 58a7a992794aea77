//! Registry of inequality and identity checks between the degree-based
//! indices, with machine verification of their equality classes.
//!
//! Every check row states a relation between index values of one graph.
//! Rows whose quantities are rational in the degrees are evaluated in exact
//! rational arithmetic, so equality there is a decision, not a tolerance.
//! Rows involving square roots or the spectral radius are evaluated in f64
//! against pinned tolerances. Chained inequalities appear as one row per
//! link plus, where the equality claim concerns the whole chain, a closure
//! row comparing the two ends (for a chain a >= b >= c the ends meet
//! exactly when every link is tight).
//!
//! Each row carries the class of graphs claimed to attain equality and
//! whether that claim is an equivalence (`Iff`), a one-way sufficiency
//! (`Sufficient`), or an identity under a guard (`Identity`). The audit
//! confirms sufficiency on every corpus member of the class, and for exact
//! `Iff` rows also necessity: no graph outside the class may achieve exact
//! equality.

use std::sync::LazyLock;

use crate::classify::{classify, GraphClassification};
use crate::degrees::{degree_profile, DegreeProfile};
use crate::exact::{rfrac, rint, to_f64, Rat};
use crate::graph::Graph;
use crate::invariants::{invariant_report_with_profile, InvariantReport};
use crate::spectral::{spectral_radius_with, SpectralResult, DEFAULT_MAX_ITER, DEFAULT_TOL};

/// Relative slack a real-valued row may fall below zero and still hold.
pub const REAL_HOLD_TOL: f64 = 1e-9;
/// Relative window inside which a real-valued row counts as equality.
pub const REAL_EQ_TOL: f64 = 1e-7;
/// Spectral rows widen both windows to this multiple of the residual.
pub const SPECTRAL_RESIDUAL_FACTOR: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arithmetic {
    Exact,
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqualityMode {
    /// equality exactly on the stated class
    Iff,
    /// the stated class attains equality; others may too
    Sufficient,
    /// an identity on the guarded class
    Identity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqualityClass {
    Regular,
    RegularOrSemiregular,
    RegularOrBidegreed,
    RegularOrWellStabilized,
    RegularOrNearlyRegular,
    RegularOrWeaklySemiregular,
    Star,
    Triangle,
    TriangleOrStar,
    CompleteBipartite,
    WeaklyIrregular,
}

impl EqualityClass {
    pub fn contains(&self, g: &Graph, c: &GraphClassification) -> bool {
        let regular = c.regular.is_some();
        match self {
            EqualityClass::Regular => regular,
            EqualityClass::RegularOrSemiregular => regular || c.semiregular,
            EqualityClass::RegularOrBidegreed => regular || c.bidegreed.is_some(),
            EqualityClass::RegularOrWellStabilized => regular || c.well_stabilized,
            EqualityClass::RegularOrNearlyRegular => regular || c.nearly_regular,
            EqualityClass::RegularOrWeaklySemiregular => {
                regular || c.weakly_semiregular.is_some()
            }
            EqualityClass::Star => c.star.is_some(),
            EqualityClass::Triangle => g.n() == 3 && g.m() == 3,
            EqualityClass::TriangleOrStar => {
                (g.n() == 3 && g.m() == 3) || c.star.is_some()
            }
            EqualityClass::CompleteBipartite => c.complete_bipartite.is_some(),
            EqualityClass::WeaklyIrregular => c.weakly_irregular,
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            EqualityClass::Regular => "regular",
            EqualityClass::RegularOrSemiregular => "regular or semiregular",
            EqualityClass::RegularOrBidegreed => "regular or bidegreed",
            EqualityClass::RegularOrWellStabilized => "regular or well-stabilized",
            EqualityClass::RegularOrNearlyRegular => "regular or nearly regular",
            EqualityClass::RegularOrWeaklySemiregular => "regular or weakly semiregular",
            EqualityClass::Star => "star",
            EqualityClass::Triangle => "triangle",
            EqualityClass::TriangleOrStar => "triangle or star",
            EqualityClass::CompleteBipartite => "complete bipartite",
            EqualityClass::WeaklyIrregular => "weakly irregular",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guard {
    Always,
    TriangleFree,
    WeaklyIrregular,
    Regular,
    /// needs a converged spectral radius
    Spectral,
}

impl Guard {
    fn admits(&self, ctx: &CheckContext) -> bool {
        match self {
            Guard::Always => true,
            Guard::TriangleFree => ctx.triangle_free,
            Guard::WeaklyIrregular => ctx.classification.weakly_irregular,
            Guard::Regular => ctx.classification.regular.is_some(),
            Guard::Spectral => ctx.spectral.is_some(),
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Guard::Always => "",
            Guard::TriangleFree => "triangle-free only",
            Guard::WeaklyIrregular => "weakly irregular only",
            Guard::Regular => "regular only",
            Guard::Spectral => "needs spectral radius",
        }
    }
}

enum Values {
    Exact(Rat, Rat),
    Real(f64, f64),
}

type Eval = Box<dyn Fn(&CheckContext) -> Values + Send + Sync>;

pub struct CheckDef {
    pub id: &'static str,
    pub statement: &'static str,
    pub relation: Relation,
    pub mode: EqualityMode,
    pub class: EqualityClass,
    pub guard: Guard,
    eval: Eval,
}

impl CheckDef {
    pub fn arithmetic(&self, ctx: &CheckContext) -> Arithmetic {
        match (self.eval)(ctx) {
            Values::Exact(..) => Arithmetic::Exact,
            Values::Real(..) => Arithmetic::Real,
        }
    }
}

/// Everything the check evaluations read, computed once per graph.
pub struct CheckContext<'g> {
    pub label: String,
    pub graph: &'g Graph,
    pub profile: DegreeProfile,
    pub report: InvariantReport,
    pub classification: GraphClassification,
    pub spectral: Option<SpectralResult>,
    pub triangle_free: bool,
    edge: EdgeAggregates,
}

struct EdgeAggregates {
    /// sum over edges of sqrt(s_u * s_v)
    sqrt_ss: f64,
    /// sum over edges of sqrt(d_u * d_v * (d_u + d_v))
    sqrt_dds: f64,
    /// X at alpha = 1/2
    x_half: f64,
    /// sum over edges of |sqrt(mu_u) - sqrt(mu_v)|
    mu_sqrt_diff: f64,
    /// sum over edges of sqrt(mu_u * mu_v)
    mu_sqrt_prod: f64,
    /// sum over edges of (d_u + d_v)/(d_u * d_v), exact
    ratio_sum: Rat,
}

impl<'g> CheckContext<'g> {
    pub fn new(label: impl Into<String>, graph: &'g Graph) -> CheckContext<'g> {
        Self::with_options(label, graph, DEFAULT_TOL, DEFAULT_MAX_ITER)
    }

    pub fn with_options(
        label: impl Into<String>,
        graph: &'g Graph,
        tol: f64,
        max_iter: usize,
    ) -> CheckContext<'g> {
        let profile = degree_profile(graph);
        let report = invariant_report_with_profile(graph, &profile);
        let classification = classify(graph);
        let spectral = spectral_radius_with(graph, tol, max_iter).ok();
        let mu_f: Vec<f64> = profile.mu.iter().map(to_f64).collect();
        let mut edge = EdgeAggregates {
            sqrt_ss: 0.0,
            sqrt_dds: 0.0,
            x_half: 0.0,
            mu_sqrt_diff: 0.0,
            mu_sqrt_prod: 0.0,
            ratio_sum: rint(0),
        };
        for &(u, v) in graph.edges() {
            let (du, dv) = (graph.degree(u) as f64, graph.degree(v) as f64);
            let (su, sv) = (
                profile.neighbor_degree_sums[u] as f64,
                profile.neighbor_degree_sums[v] as f64,
            );
            edge.sqrt_ss += (su * sv).sqrt();
            edge.sqrt_dds += (du * dv * (du + dv)).sqrt();
            edge.x_half += (du + dv).sqrt();
            edge.mu_sqrt_diff += (mu_f[u].sqrt() - mu_f[v].sqrt()).abs();
            edge.mu_sqrt_prod += (mu_f[u] * mu_f[v]).sqrt();
            edge.ratio_sum += rfrac(
                (graph.degree(u) + graph.degree(v)) as i128,
                (graph.degree(u) * graph.degree(v)) as i128,
            );
        }
        CheckContext {
            label: label.into(),
            triangle_free: graph.is_triangle_free(),
            graph,
            profile,
            report,
            classification,
            spectral,
            edge,
        }
    }

    fn rn(&self) -> Rat {
        rint(self.report.n as i128)
    }
    fn rm(&self) -> Rat {
        rint(self.report.m as i128)
    }
    fn rm1(&self) -> Rat {
        rint(self.report.m1)
    }
    fn rm2(&self) -> Rat {
        rint(self.report.m2)
    }
    fn rf(&self) -> Rat {
        rint(self.report.forgotten)
    }
    fn rx2(&self) -> Rat {
        rint(self.report.dtqd)
    }
    fn rx3(&self) -> Rat {
        rint(self.report.x3)
    }
    fn rdmax(&self) -> Rat {
        rint(self.report.max_degree as i128)
    }
    fn rdmin(&self) -> Rat {
        rint(self.report.min_degree as i128)
    }
    fn rirr(&self) -> Rat {
        rint(self.report.albertson)
    }
    fn rirl(&self) -> Rat {
        rint(self.report.irl)
    }
    fn rs5(&self) -> Rat {
        rint(self.report.degree_power_sum_5)
    }
    fn rvm22(&self) -> Rat {
        self.report
            .variable_second_zagreb
            .iter()
            .find(|(l, _)| *l == 2)
            .map(|(_, v)| v.clone())
            .expect("lambda=2 sample present")
    }
    fn rsum_s_sq(&self) -> Rat {
        rint(self.profile.neighbor_sum_squares)
    }
    fn fm(&self) -> f64 {
        self.report.m as f64
    }
    fn fm1(&self) -> f64 {
        self.report.m1 as f64
    }
    fn rho(&self) -> f64 {
        self.spectral.as_ref().expect("guarded by Spectral").rho
    }
}

fn def(
    id: &'static str,
    statement: &'static str,
    relation: Relation,
    mode: EqualityMode,
    class: EqualityClass,
    guard: Guard,
    eval: impl Fn(&CheckContext) -> Values + Send + Sync + 'static,
) -> CheckDef {
    CheckDef {
        id,
        statement,
        relation,
        mode,
        class,
        guard,
        eval: Box::new(eval),
    }
}

use EqualityClass::*;
use EqualityMode::{Identity, Iff, Sufficient};
use Relation::{Eq as REq, Ge, Le};

fn build_registry() -> Vec<CheckDef> {
    vec![
        def("L1a", "M1 <= M2/dmin + dmin*m", Le, Sufficient, RegularOrSemiregular, Guard::Always, |c| {
            Values::Exact(c.rm1(), c.rm2() / c.rdmin() + c.rdmin() * c.rm())
        }),
        def("L1b", "M1 <= M2/dmax + dmax*m", Le, Sufficient, RegularOrSemiregular, Guard::Always, |c| {
            Values::Exact(c.rm1(), c.rm2() / c.rdmax() + c.rdmax() * c.rm())
        }),
        def("LEM2@-1/2", "X(-1/2) >= M1^(-1/2) * m^(3/2)", Ge, Iff, RegularOrSemiregular, Guard::Always, |c| {
            Values::Real(c.report.sum_connectivity, c.fm().powf(1.5) / c.fm1().sqrt())
        }),
        def("LEM2@1/2", "X(1/2) <= M1^(1/2) * m^(1/2)", Le, Iff, RegularOrSemiregular, Guard::Always, |c| {
            Values::Real(c.edge.x_half, (c.fm1() * c.fm()).sqrt())
        }),
        def("LEM2@2", "X(2) >= M1^2/m", Ge, Iff, RegularOrSemiregular, Guard::Always, |c| {
            Values::Exact(c.rx2(), c.rm1() * c.rm1() / c.rm())
        }),
        def("LEM2@3", "X(3) >= M1^3/m^2", Ge, Iff, RegularOrSemiregular, Guard::Always, |c| {
            Values::Exact(c.rx3(), c.rm1().pow(3) / (c.rm() * c.rm()))
        }),
        def("LEM2@-1", "X(-1) >= m^2/M1", Ge, Iff, RegularOrSemiregular, Guard::Always, |c| {
            Values::Exact(c.report.harmonic.clone() / rint(2), c.rm() * c.rm() / c.rm1())
        }),
        def("COR1", "X >= m^(3/2)/sqrt(M1)", Ge, Iff, RegularOrSemiregular, Guard::Always, |c| {
            Values::Real(c.report.sum_connectivity, c.fm().powf(1.5) / c.fm1().sqrt())
        }),
        def("COR2a", "F + 2*M2 >= M1^2/m", Ge, Iff, RegularOrSemiregular, Guard::Always, |c| {
            Values::Exact(c.rx2(), c.rm1() * c.rm1() / c.rm())
        }),
        def("COR2b1", "2*dmax >= (F + 2*M2)/M1", Ge, Sufficient, Regular, Guard::Always, |c| {
            Values::Exact(rint(2) * c.rdmax(), c.rx2() / c.rm1())
        }),
        def("COR2b2", "(F + 2*M2)/M1 >= M1/m", Ge, Sufficient, RegularOrSemiregular, Guard::Always, |c| {
            Values::Exact(c.rx2() / c.rm1(), c.rm1() / c.rm())
        }),
        def("COR2b", "2*dmax >= M1/m (chain closure)", Ge, Iff, Regular, Guard::Always, |c| {
            Values::Exact(rint(2) * c.rdmax(), c.rm1() / c.rm())
        }),
        def("COR3a", "F + 2*M2 <= (m+1)*M1", Le, Iff, TriangleOrStar, Guard::Always, |c| {
            Values::Exact(c.rx2(), (c.rm() + rint(1)) * c.rm1())
        }),
        def("COR3b", "F + 2*M2 <= n*M1", Le, Iff, CompleteBipartite, Guard::TriangleFree, |c| {
            Values::Exact(c.rx2(), c.rn() * c.rm1())
        }),
        def("COR4a", "rho >= 2*M2/M1", Ge, Iff, Regular, Guard::Spectral, |c| {
            Values::Real(c.rho(), 2.0 * c.report.m2 as f64 / c.fm1())
        }),
        def("COR4b", "2*M2/M1 >= M1/m - F/M1", Ge, Sufficient, Regular, Guard::Always, |c| {
            Values::Exact(
                rint(2) * c.rm2() / c.rm1(),
                c.rm1() / c.rm() - c.rf() / c.rm1(),
            )
        }),
        def("COR5a", "X(3) >= M1^3/m^2", Ge, Iff, RegularOrSemiregular, Guard::Always, |c| {
            Values::Exact(c.rx3(), c.rm1().pow(3) / (c.rm() * c.rm()))
        }),
        def("COR5b1", "2*dmax >= X(3)/X(2)", Ge, Sufficient, Regular, Guard::Always, |c| {
            Values::Exact(rint(2) * c.rdmax(), c.rx3() / c.rx2())
        }),
        def("COR5b2", "X(3)/X(2) >= M1^3/(m^2*(F + 2*M2))", Ge, Sufficient, RegularOrSemiregular, Guard::Always, |c| {
            Values::Exact(
                c.rx3() / c.rx2(),
                c.rm1().pow(3) / (c.rm() * c.rm() * c.rx2()),
            )
        }),
        def("COR5b", "2*dmax >= M1^3/(m^2*(F + 2*M2)) (chain closure)", Ge, Iff, Regular, Guard::Always, |c| {
            Values::Exact(
                rint(2) * c.rdmax(),
                c.rm1().pow(3) / (c.rm() * c.rm() * c.rx2()),
            )
        }),
        def("EQ2", "F >= 2*M2", Ge, Iff, Regular, Guard::Always, |c| {
            Values::Exact(c.rf(), rint(2) * c.rm2())
        }),
        def("REM2", "F - 2*M2 <= m*(n-2)^2", Le, Iff, Star, Guard::Always, |c| {
            Values::Exact(c.rirl(), c.rm() * (c.rn() - rint(2)).pow(2))
        }),
        def("EQ4a", "F >= (2m/n)*M1", Ge, Iff, Regular, Guard::Always, |c| {
            Values::Exact(c.rf(), rint(2) * c.rm() * c.rm1() / c.rn())
        }),
        def("EQ4b", "(2m/n)*M1 >= 8*m^3/n^2", Ge, Iff, Regular, Guard::Always, |c| {
            Values::Exact(
                rint(2) * c.rm() * c.rm1() / c.rn(),
                rint(8) * c.rm().pow(3) / (c.rn() * c.rn()),
            )
        }),
        def("COR6", "M1/n <= F/(2m)", Le, Iff, Regular, Guard::Always, |c| {
            Values::Exact(c.rm1() / c.rn(), c.rf() / (rint(2) * c.rm()))
        }),
        def("COR7a", "n*F/(2m) >= M1", Ge, Iff, Regular, Guard::Always, |c| {
            Values::Exact(c.rn() * c.rf() / (rint(2) * c.rm()), c.rm1())
        }),
        def("COR7b", "M1 >= (F + 2*M2)/(m+1)", Ge, Iff, TriangleOrStar, Guard::Always, |c| {
            Values::Exact(c.rm1(), c.rx2() / (c.rm() + rint(1)))
        }),
        def("COR7", "n*F/(2m) >= (F + 2*M2)/(m+1) (chain closure)", Ge, Iff, Triangle, Guard::Always, |c| {
            Values::Exact(
                c.rn() * c.rf() / (rint(2) * c.rm()),
                c.rx2() / (c.rm() + rint(1)),
            )
        }),
        def("EQ5a", "M1/n >= (2m/n)^2", Ge, Iff, Regular, Guard::Always, |c| {
            Values::Exact(c.rm1() / c.rn(), (rint(2) * c.rm() / c.rn()).pow(2))
        }),
        def("EQ5b", "M2/m >= (2m/n)^2", Ge, Iff, Regular, Guard::Always, |c| {
            Values::Exact(c.rm2() / c.rm(), (rint(2) * c.rm() / c.rn()).pow(2))
        }),
        def("LEM7a", "F + 2*M2 >= 2m*(M1/n + M2/m)", Ge, Iff, Regular, Guard::Always, |c| {
            Values::Exact(
                c.rx2(),
                rint(2) * c.rm() * (c.rm1() / c.rn() + c.rm2() / c.rm()),
            )
        }),
        def("LEM7b", "2m*(M1/n + M2/m) >= 16*m^3/n^2", Ge, Iff, Regular, Guard::Always, |c| {
            Values::Exact(
                rint(2) * c.rm() * (c.rm1() / c.rn() + c.rm2() / c.rm()),
                rint(16) * c.rm().pow(3) / (c.rn() * c.rn()),
            )
        }),
        def("EQ6", "F <= (dmax + dmin)*M1 - 2*m*dmax*dmin", Le, Sufficient, RegularOrBidegreed, Guard::Always, |c| {
            Values::Exact(
                c.rf(),
                (c.rdmax() + c.rdmin()) * c.rm1() - rint(2) * c.rm() * c.rdmax() * c.rdmin(),
            )
        }),
        def("COR8a", "rho >= sqrt(M1/n)", Ge, Sufficient, RegularOrSemiregular, Guard::Spectral, |c| {
            Values::Real(c.rho(), (c.fm1() / c.report.n as f64).sqrt())
        }),
        def("COR8b", "M1/n >= (F + 2*m*dmax*dmin)/(n*(dmax + dmin)) (squared link)", Ge, Sufficient, RegularOrSemiregular, Guard::Always, |c| {
            Values::Exact(
                c.rm1() / c.rn(),
                (c.rf() + rint(2) * c.rm() * c.rdmax() * c.rdmin())
                    / (c.rn() * (c.rdmax() + c.rdmin())),
            )
        }),
        def("EQ7", "F <= 2*M2 + n*M1 - 4*m^2", Le, Sufficient, RegularOrWellStabilized, Guard::Always, |c| {
            Values::Exact(
                c.rf(),
                rint(2) * c.rm2() + c.rn() * c.rm1() - rint(4) * c.rm() * c.rm(),
            )
        }),
        def("COR9", "F - 2*M2 <= n^2*VAR", Le, Sufficient, RegularOrWellStabilized, Guard::Always, |c| {
            Values::Exact(c.rirl(), c.rn() * c.rn() * c.report.var.clone())
        }),
        def("COR10", "rho >= (F + 4*m^2)/M1 - n", Ge, Sufficient, Regular, Guard::Spectral, |c| {
            Values::Real(
                c.rho(),
                (c.report.forgotten as f64 + 4.0 * c.fm() * c.fm()) / c.fm1() - c.report.n as f64,
            )
        }),
        def("P1", "M2 >= sum_E sqrt(s_u*s_v)", Ge, Sufficient, RegularOrSemiregular, Guard::Always, |c| {
            Values::Real(c.report.m2 as f64, c.edge.sqrt_ss)
        }),
        def("P2", "(sum_E sqrt(d_u*d_v*(d_u+d_v)))^2 <= M1*M2", Le, Sufficient, RegularOrSemiregular, Guard::Always, |c| {
            Values::Real(c.edge.sqrt_dds.powi(2), c.fm1() * c.report.m2 as f64)
        }),
        def("P3", "VM2(2) >= M2^2/m", Ge, Sufficient, RegularOrSemiregular, Guard::Always, |c| {
            Values::Exact(c.rvm22(), c.rm2() * c.rm2() / c.rm())
        }),
        def("P4", "S5 + 2*VM2(2) >= F^2/m", Ge, Sufficient, RegularOrSemiregular, Guard::Always, |c| {
            Values::Exact(c.rs5() + rint(2) * c.rvm22(), c.rf() * c.rf() / c.rm())
        }),
        def("P5", "M1 >= (1/n)*(sum_V sqrt(s_v))^2", Ge, Sufficient, RegularOrSemiregular, Guard::Always, |c| {
            let sqrt_sum: f64 = c
                .profile
                .neighbor_degree_sums
                .iter()
                .map(|&s| (s as f64).sqrt())
                .sum();
            Values::Real(c.fm1(), sqrt_sum * sqrt_sum / c.report.n as f64)
        }),
        def("P6", "M1/n <= (sum_V s_v^2)/M1", Le, Sufficient, RegularOrSemiregular, Guard::Always, |c| {
            Values::Exact(c.rm1() / c.rn(), c.rsum_s_sq() / c.rm1())
        }),
        def("COR14a", "rho^2 >= (sum_V s_v^2)/M1", Ge, Sufficient, Regular, Guard::Spectral, |c| {
            Values::Real(
                c.rho() * c.rho(),
                c.profile.neighbor_sum_squares as f64 / c.fm1(),
            )
        }),
        def("COR14b", "(sum_V s_v^2)/M1 >= M1/n", Ge, Sufficient, Regular, Guard::Always, |c| {
            Values::Exact(c.rsum_s_sq() / c.rm1(), c.rm1() / c.rn())
        }),
        def("P7", "sum_V mu_v^2 >= (1/n)*(sum_V |d_v - mu_v|)^2 + M1", Ge, Sufficient, RegularOrSemiregular, Guard::Always, |c| {
            Values::Exact(
                c.profile.mu_square_sum.clone(),
                c.profile.mu_deviation_sum.clone().pow(2) / c.rn() + c.rm1(),
            )
        }),
        def("P8", "(1/m)*(sum_E |sqrt(mu_u) - sqrt(mu_v)|)^2 <= M1 - 2*sum_E sqrt(mu_u*mu_v)", Le, Sufficient, RegularOrSemiregular, Guard::Always, |c| {
            Values::Real(
                c.edge.mu_sqrt_diff.powi(2) / c.fm(),
                c.fm1() - 2.0 * c.edge.mu_sqrt_prod,
            )
        }),
        def("P9", "X(3) >= (F + 2*M2)^2/M1", Ge, Sufficient, RegularOrSemiregular, Guard::Always, |c| {
            Values::Exact(c.rx3(), c.rx2() * c.rx2() / c.rm1())
        }),
        def("COR15a", "2*dmax*M1 >= F + 2*M2", Ge, Sufficient, Regular, Guard::Always, |c| {
            Values::Exact(rint(2) * c.rdmax() * c.rm1(), c.rx2())
        }),
        def("COR15b", "dmax - F/(2*M1) >= M2/M1", Ge, Sufficient, Regular, Guard::Always, |c| {
            Values::Exact(
                c.rdmax() - c.rf() / (rint(2) * c.rm1()),
                c.rm2() / c.rm1(),
            )
        }),
        def("P10", "X(1/2)^2 <= M2 * sum_E (d_u+d_v)/(d_u*d_v)", Le, Sufficient, RegularOrSemiregular, Guard::Always, |c| {
            Values::Real(
                c.edge.x_half.powi(2),
                c.report.m2 as f64 * to_f64(&c.edge.ratio_sum),
            )
        }),
        def("EQ13", "Irr <= F - 2*M2", Le, Sufficient, RegularOrNearlyRegular, Guard::Always, |c| {
            Values::Exact(c.rirr(), c.rirl())
        }),
        def("COR16a", "Irr = F - 2*M2 on weakly irregular graphs", REq, Identity, WeaklyIrregular, Guard::WeaklyIrregular, |c| {
            Values::Exact(c.rirr(), c.rirl())
        }),
        def("COR16b", "F - 2*M2 = m on weakly irregular graphs", REq, Identity, WeaklyIrregular, Guard::WeaklyIrregular, |c| {
            Values::Exact(c.rirl(), c.rm())
        }),
        def("P12", "Irr^2 <= m*(F - 2*M2)", Le, Iff, RegularOrWeaklySemiregular, Guard::Always, |c| {
            Values::Exact(c.rirr().pow(2), c.rm() * c.rirl())
        }),
        def("H1a", "H >= (2/m)*X^2", Ge, Iff, RegularOrSemiregular, Guard::Always, |c| {
            Values::Real(
                to_f64(&c.report.harmonic),
                2.0 * c.report.sum_connectivity.powi(2) / c.fm(),
            )
        }),
        def("H1b", "(2/m)*X^2 >= 2*m^2/M1", Ge, Iff, RegularOrSemiregular, Guard::Always, |c| {
            Values::Real(
                2.0 * c.report.sum_connectivity.powi(2) / c.fm(),
                2.0 * c.fm() * c.fm() / c.fm1(),
            )
        }),
        def("HREG", "H = n/2 on regular graphs", REq, Identity, Regular, Guard::Regular, |c| {
            Values::Exact(c.report.harmonic.clone(), c.rn() / rint(2))
        }),
    ]
}

pub static REGISTRY: LazyLock<Vec<CheckDef>> = LazyLock::new(build_registry);

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub check_id: &'static str,
    pub graph_label: String,
    pub applicable: bool,
    pub arithmetic: Arithmetic,
    pub lhs: f64,
    pub rhs: f64,
    /// oriented so that nonnegative means the relation holds
    pub slack: f64,
    pub holds: bool,
    pub equality: bool,
    pub expected_equality: bool,
}

fn not_applicable(def: &CheckDef, label: &str) -> CheckResult {
    CheckResult {
        check_id: def.id,
        graph_label: label.to_string(),
        applicable: false,
        arithmetic: Arithmetic::Exact,
        lhs: f64::NAN,
        rhs: f64::NAN,
        slack: f64::NAN,
        holds: false,
        equality: false,
        expected_equality: false,
    }
}

fn eval_def(def: &CheckDef, ctx: &CheckContext) -> CheckResult {
    if !def.guard.admits(ctx) {
        return not_applicable(def, &ctx.label);
    }
    let expected_equality = match def.mode {
        EqualityMode::Identity => true,
        _ => def.class.contains(ctx.graph, &ctx.classification),
    };
    let residual = ctx.spectral.as_ref().map_or(0.0, |s| s.residual);
    let spectral_row = def.guard == Guard::Spectral;
    match (def.eval)(ctx) {
        Values::Exact(lhs, rhs) => {
            let diff = &lhs - &rhs;
            let zero = rint(0);
            let (holds, equality) = match def.relation {
                Relation::Le => (diff <= zero, diff == zero),
                Relation::Ge => (diff >= zero, diff == zero),
                Relation::Eq => (diff == zero, diff == zero),
            };
            let (lhs_f, rhs_f) = (to_f64(&lhs), to_f64(&rhs));
            let slack = match def.relation {
                Relation::Le => rhs_f - lhs_f,
                Relation::Ge | Relation::Eq => lhs_f - rhs_f,
            };
            CheckResult {
                check_id: def.id,
                graph_label: ctx.label.clone(),
                applicable: true,
                arithmetic: Arithmetic::Exact,
                lhs: lhs_f,
                rhs: rhs_f,
                slack,
                holds,
                equality,
                expected_equality,
            }
        }
        Values::Real(lhs, rhs) => {
            let slack = match def.relation {
                Relation::Le => rhs - lhs,
                Relation::Ge | Relation::Eq => lhs - rhs,
            };
            let scale = lhs.abs().max(rhs.abs()).max(1.0);
            let mut hold_eps = REAL_HOLD_TOL * scale;
            let mut eq_eps = REAL_EQ_TOL * scale;
            if spectral_row {
                hold_eps = hold_eps.max(SPECTRAL_RESIDUAL_FACTOR * residual);
                eq_eps = eq_eps.max(SPECTRAL_RESIDUAL_FACTOR * residual);
            }
            let equality = slack.abs() <= eq_eps;
            let holds = match def.relation {
                Relation::Eq => equality,
                _ => slack >= -hold_eps,
            };
            CheckResult {
                check_id: def.id,
                graph_label: ctx.label.clone(),
                applicable: true,
                arithmetic: Arithmetic::Real,
                lhs,
                rhs,
                slack,
                holds,
                equality,
                expected_equality,
            }
        }
    }
}

/// Evaluates one registry row by id.
pub fn evaluate_check(id: &str, ctx: &CheckContext) -> Option<CheckResult> {
    REGISTRY
        .iter()
        .find(|d| d.id == id)
        .map(|d| eval_def(d, ctx))
}

/// Evaluates every registry row against one graph.
pub fn run_suite(ctx: &CheckContext) -> Vec<CheckResult> {
    REGISTRY.iter().map(|d| eval_def(d, ctx)).collect()
}

/// Per-row equality-class audit over a batch of suite results.
#[derive(Debug, Clone)]
pub struct CheckAudit {
    pub check_id: &'static str,
    pub class: &'static str,
    pub mode: EqualityMode,
    pub applicable: usize,
    pub violations_of_relation: Vec<String>,
    pub class_members: usize,
    pub tight_members: usize,
    /// class members that failed to attain equality
    pub sufficiency_violations: Vec<String>,
    /// graphs outside the class attaining exact equality on exact iff rows
    pub necessity_violations: Vec<String>,
}

pub fn audit_results(results: &[CheckResult]) -> Vec<CheckAudit> {
    REGISTRY
        .iter()
        .map(|def| {
            let mut audit = CheckAudit {
                check_id: def.id,
                class: def.class.describe(),
                mode: def.mode,
                applicable: 0,
                violations_of_relation: Vec::new(),
                class_members: 0,
                tight_members: 0,
                sufficiency_violations: Vec::new(),
                necessity_violations: Vec::new(),
            };
            for r in results.iter().filter(|r| r.check_id == def.id) {
                if !r.applicable {
                    continue;
                }
                audit.applicable += 1;
                if !r.holds {
                    audit.violations_of_relation.push(r.graph_label.clone());
                }
                if r.expected_equality {
                    audit.class_members += 1;
                    if r.equality {
                        audit.tight_members += 1;
                    } else {
                        audit.sufficiency_violations.push(r.graph_label.clone());
                    }
                } else if r.equality
                    && def.mode == EqualityMode::Iff
                    && r.arithmetic == Arithmetic::Exact
                {
                    audit.necessity_violations.push(r.graph_label.clone());
                }
            }
            audit
        })
        .collect()
}

/// For weights w (nonnegative, ideally summing to one) and values b, returns
/// `((sum w_i b_i)^2, sum w_i b_i^2)`. With total weight one the first
/// component never exceeds the second, with equality exactly when all b_i
/// carrying positive weight coincide.
pub fn weighted_mean_square_pair(w: &[Rat], b: &[Rat]) -> (Rat, Rat) {
    assert_eq!(w.len(), b.len());
    let mean: Rat = w.iter().zip(b).map(|(wi, bi)| wi * bi).sum();
    let mean_sq: Rat = w.iter().zip(b).map(|(wi, bi)| wi * bi * bi).sum();
    (mean.clone() * mean, mean_sq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn ctx<'g>(label: &str, g: &'g Graph) -> CheckContext<'g> {
        CheckContext::new(label, g)
    }

    fn k23() -> Graph {
        generators::complete_bipartite(2, 3).unwrap()
    }

    #[test]
    fn registry_ids_unique() {
        let mut ids: Vec<&str> = REGISTRY.iter().map(|d| d.id).collect();
        let count = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), count);
        assert!(count >= 50);
    }

    #[test]
    fn eq2_on_k23() {
        let g = k23();
        let c = ctx("k23", &g);
        let r = evaluate_check("EQ2", &c).unwrap();
        assert!(r.applicable && r.holds && !r.equality);
        assert_eq!(r.lhs, 78.0);
        assert_eq!(r.rhs, 72.0);
        assert_eq!(r.slack, 6.0);
        assert!(!r.expected_equality);
    }

    #[test]
    fn cor2a_tight_on_k23() {
        let g = k23();
        let c = ctx("k23", &g);
        let r = evaluate_check("COR2a", &c).unwrap();
        assert!(r.holds && r.equality && r.expected_equality);
        assert_eq!(r.lhs, 150.0);
    }

    #[test]
    fn rem2_tight_exactly_on_stars() {
        let g = generators::star(4).unwrap();
        let c = ctx("s4", &g);
        let r = evaluate_check("REM2", &c).unwrap();
        assert!(r.equality && r.expected_equality);
        let g = k23();
        let c = ctx("k23", &g);
        let r = evaluate_check("REM2", &c).unwrap();
        assert!(r.holds && !r.equality);
    }

    #[test]
    fn p12_tight_on_star() {
        let g = generators::star(4).unwrap();
        let c = ctx("s4", &g);
        let r = evaluate_check("P12", &c).unwrap();
        // Irr^2 = 36 = m * IRL = 3 * 12; stars are weakly semiregular
        assert!(r.equality && r.expected_equality);
    }

    #[test]
    fn eq7_tight_on_wheel_and_split() {
        for g in [
            generators::wheel(5).unwrap(),
            generators::complete_split(4, 2).unwrap(),
        ] {
            let c = ctx("ws", &g);
            let r = evaluate_check("EQ7", &c).unwrap();
            assert!(r.equality && r.expected_equality, "{:?}", r);
            let r = evaluate_check("COR9", &c).unwrap();
            assert!(r.equality && r.expected_equality);
        }
    }

    #[test]
    fn regular_graph_suite_all_holds_with_regular_equalities() {
        let g = generators::cycle(4).unwrap();
        let c = ctx("c4", &g);
        for r in run_suite(&c) {
            if !r.applicable {
                continue;
            }
            assert!(r.holds, "{} failed on C4", r.check_id);
            if r.expected_equality {
                assert!(r.equality, "{} not tight on C4", r.check_id);
            }
        }
    }

    #[test]
    fn semiregular_suite_tight_rows() {
        let g = k23();
        let c = ctx("k23", &g);
        for r in run_suite(&c) {
            if !r.applicable {
                continue;
            }
            assert!(r.holds, "{} failed on K23", r.check_id);
            if r.expected_equality {
                assert!(r.equality, "{} not tight on K23 (slack {})", r.check_id, r.slack);
            }
        }
    }

    #[test]
    fn weakly_irregular_identities() {
        let g = generators::dendrimer(4).unwrap();
        let c = ctx("t4", &g);
        let a = evaluate_check("COR16a", &c).unwrap();
        let b = evaluate_check("COR16b", &c).unwrap();
        assert!(a.applicable && a.holds && a.equality);
        assert!(b.applicable && b.holds && b.equality);
        assert_eq!(b.rhs, 20.0);
    }

    #[test]
    fn guards_gate_applicability() {
        let g = generators::wheel(5).unwrap();
        let c = ctx("w5", &g);
        let r = evaluate_check("COR3b", &c).unwrap();
        assert!(!r.applicable);
        let r = evaluate_check("COR16a", &c).unwrap();
        assert!(!r.applicable);
        let r = evaluate_check("HREG", &c).unwrap();
        assert!(!r.applicable);
        let g = generators::cycle(6).unwrap();
        let c = ctx("c6", &g);
        let r = evaluate_check("HREG", &c).unwrap();
        assert!(r.applicable && r.equality);
        assert_eq!(r.lhs, 3.0);
    }

    #[test]
    fn triangle_free_guard_admits_k23() {
        let g = k23();
        let c = ctx("k23", &g);
        let r = evaluate_check("COR3b", &c).unwrap();
        assert!(r.applicable && r.holds);
        // every edge degree sum is n = 5, so the bound is tight
        assert!(r.equality && r.expected_equality);
    }

    #[test]
    fn chain_closure_rows_follow_links() {
        let g = generators::complete(4).unwrap();
        let c = ctx("k4", &g);
        for id in ["COR2b1", "COR2b2", "COR2b", "COR5b1", "COR5b2", "COR5b", "COR7a", "COR7b", "COR7"] {
            let r = evaluate_check(id, &c).unwrap();
            assert!(r.holds, "{id} on K4");
        }
        // K4 is regular so the COR2b closure is tight, but it is not K3 so
        // the COR7 closure must not be
        assert!(evaluate_check("COR2b", &c).unwrap().equality);
        assert!(!evaluate_check("COR7", &c).unwrap().equality);
        let g = generators::cycle(3).unwrap();
        let c = ctx("k3", &g);
        let r = evaluate_check("COR7", &c).unwrap();
        assert!(r.equality && r.expected_equality);
    }

    #[test]
    fn spectral_rows_tight_on_regular() {
        let g = generators::cycle(5).unwrap();
        let c = ctx("c5", &g);
        for id in ["COR4a", "COR8a", "COR10", "COR14a"] {
            let r = evaluate_check(id, &c).unwrap();
            assert!(r.applicable && r.holds && r.equality, "{id}");
        }
    }

    #[test]
    fn audit_finds_no_violations_on_mixed_batch() {
        let graphs = vec![
            ("c4".to_string(), generators::cycle(4).unwrap()),
            ("k23".to_string(), generators::complete_bipartite(2, 3).unwrap()),
            ("s5".to_string(), generators::star(5).unwrap()),
            ("w5".to_string(), generators::wheel(5).unwrap()),
            ("t4".to_string(), generators::dendrimer(4).unwrap()),
            ("p6".to_string(), generators::path(6).unwrap()),
        ];
        let mut all = Vec::new();
        for (label, g) in &graphs {
            let c = CheckContext::new(label.clone(), g);
            all.extend(run_suite(&c));
        }
        for audit in audit_results(&all) {
            assert!(
                audit.violations_of_relation.is_empty(),
                "{} violated on {:?}",
                audit.check_id,
                audit.violations_of_relation
            );
            assert!(
                audit.sufficiency_violations.is_empty(),
                "{} missed equality on {:?}",
                audit.check_id,
                audit.sufficiency_violations
            );
            assert!(
                audit.necessity_violations.is_empty(),
                "{} unexpectedly tight on {:?}",
                audit.check_id,
                audit.necessity_violations
            );
        }
    }

    #[test]
    fn weighted_mean_square_inequality() {
        let w = vec![rfrac(1, 4), rfrac(1, 4), rfrac(1, 2)];
        let b = vec![rint(1), rint(3), rint(5)];
        let (lhs, rhs) = weighted_mean_square_pair(&w, &b);
        assert!(lhs < rhs);
        let b = vec![rint(4), rint(4), rint(4)];
        let (lhs, rhs) = weighted_mean_square_pair(&w, &b);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, rint(16));
    }
}
