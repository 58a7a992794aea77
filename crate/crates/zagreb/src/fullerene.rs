//! Duals of cubic polyhedra whose faces are pentagons and hexagons.
//!
//! Two routes produce the dual graph. An explicit planar embedding can be
//! given as a rotation system (the cyclic neighbor order around every
//! vertex), from which faces are traced as orbits of directed edges. Or a
//! face spiral can be given as the positions of the twelve pentagons in the
//! face-size sequence, from which the dual is wound up face by face.
//!
//! For a cage on k vertices the dual has k/2 + 2 vertices (one per face,
//! twelve of degree five, the rest of degree six) and 3k/2 edges. Writing
//! Np for the number of adjacent pentagon pairs, the dual's irregularity
//! measures collapse to closed forms:
//!
//! ```text
//! IRL(dual) = 60 - 2*Np
//! IRM(dual) = 54*k + Np - 360 - 54*k^3/(k+4)^2
//! ```
//!
//! Reports recompute both sides independently and record whether they
//! agree, along with the decomposition IRM = F/2 - 4m^3/n^2 - IRL/2 that
//! ties the three irregularity measures together on any graph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::degrees::degree_profile;
use crate::exact::{rint, Rat};
use crate::graph::{Graph, GraphError};
use crate::invariants::invariant_report_with_profile;

#[derive(Debug, Error)]
pub enum FullereneError {
    #[error("line {line}: cannot parse rotation entry: {text:?}")]
    MalformedRotation { line: usize, text: String },
    #[error("line {line}: vertex {vertex} listed twice")]
    DuplicateVertex { line: usize, vertex: u64 },
    #[error("line {line}: vertex {vertex} repeats a neighbor or lists itself")]
    BadNeighborList { line: usize, vertex: u64 },
    #[error("vertex {vertex} appears as a neighbor but has no rotation line")]
    MissingVertex { vertex: u64 },
    #[error("vertex {u} lists {v} but {v} does not list {u}")]
    Asymmetric { u: u64, v: u64 },
    #[error("vertex {vertex} has degree {degree}, expected a cubic graph")]
    NotCubic { vertex: u64, degree: usize },
    #[error("face of size {size} found, only pentagons and hexagons allowed")]
    BadFaceSize { size: usize },
    #[error("{found} pentagonal faces found, expected 12")]
    PentagonCount { found: usize },
    #[error("face count {faces} violates the closed-surface count for n={n}, m={m}")]
    EulerViolation { n: usize, m: usize, faces: usize },
    #[error("faces {a} and {b} share more than one edge")]
    DualMultiEdge { a: usize, b: usize },
    #[error("edge {u}-{v} does not separate two distinct faces")]
    EdgeFaceCount { u: u64, v: u64 },
    #[error("line {line}: cannot parse spiral entry: {text:?}")]
    MalformedSpiral { line: usize, text: String },
    #[error("vertex count {k} is odd, a cage needs an even count")]
    OddVertexCount { k: usize },
    #[error("vertex count {k} is below 20")]
    TooSmall { k: usize },
    #[error("pentagon position {position} outside 1..={faces}")]
    BadPentagonPosition { position: usize, faces: usize },
    #[error("pentagon position {position} repeated")]
    DuplicatePentagonPosition { position: usize },
    #[error("spiral fails to wind up at face {face}: {detail}")]
    Windup { face: usize, detail: String },
    #[error("line {line}: cannot parse csv entry: {text:?}")]
    MalformedCsv { line: usize, text: String },
    #[error("label {label:?} appears twice")]
    DuplicateLabel { label: String },
    #[error("only {found} label-matched pairs, need at least 3")]
    NotEnoughPairs { found: usize },
    #[error("{which} values are constant, regression is undefined")]
    ConstantValues { which: &'static str },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Cyclic neighbor order around every vertex of an embedded graph.
pub struct RotationSystem {
    labels: Vec<u64>,
    rot: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Parses lines of the form `v: a b c` where the neighbors are listed
    /// in cyclic order. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<RotationSystem, FullereneError> {
        let mut order: Vec<u64> = Vec::new();
        let mut rows: BTreeMap<u64, (usize, Vec<u64>)> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((head, tail)) = content.split_once(':') else {
                return Err(FullereneError::MalformedRotation {
                    line,
                    text: raw.trim().to_string(),
                });
            };
            let Ok(vertex) = head.trim().parse::<u64>() else {
                return Err(FullereneError::MalformedRotation {
                    line,
                    text: raw.trim().to_string(),
                });
            };
            let mut neighbors = Vec::new();
            for tok in tail.split_whitespace() {
                let Ok(w) = tok.parse::<u64>() else {
                    return Err(FullereneError::MalformedRotation {
                        line,
                        text: raw.trim().to_string(),
                    });
                };
                neighbors.push(w);
            }
            if neighbors.is_empty() {
                return Err(FullereneError::MalformedRotation {
                    line,
                    text: raw.trim().to_string(),
                });
            }
            let mut seen = BTreeSet::new();
            for &w in &neighbors {
                if w == vertex || !seen.insert(w) {
                    return Err(FullereneError::BadNeighborList { line, vertex });
                }
            }
            if rows.contains_key(&vertex) {
                return Err(FullereneError::DuplicateVertex { line, vertex });
            }
            order.push(vertex);
            rows.insert(vertex, (order.len() - 1, neighbors));
        }
        let labels = order;
        let mut rot = vec![Vec::new(); labels.len()];
        for &v in &labels {
            let (vi, neighbors) = &rows[&v];
            let mut internal = Vec::with_capacity(neighbors.len());
            for &w in neighbors {
                let Some((wi, back)) = rows.get(&w) else {
                    return Err(FullereneError::MissingVertex { vertex: w });
                };
                if !back.contains(&v) {
                    return Err(FullereneError::Asymmetric { u: w, v });
                }
                internal.push(*wi);
            }
            rot[*vi] = internal;
        }
        for (vi, neighbors) in rot.iter().enumerate() {
            for &wi in neighbors {
                if !rot[wi].contains(&vi) {
                    return Err(FullereneError::Asymmetric {
                        u: labels[vi],
                        v: labels[wi],
                    });
                }
            }
        }
        Ok(RotationSystem { labels, rot })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    /// The underlying simple connected graph.
    pub fn graph(&self) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        for (v, neighbors) in self.rot.iter().enumerate() {
            for &w in neighbors {
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        Graph::from_edges(self.n(), &edges)
    }

    /// Traces the faces of the embedding as orbits of directed edges. The
    /// edge u->v is followed by v->w where w succeeds u in the rotation at
    /// v. Every directed edge lies on exactly one face; each face is
    /// returned as its vertex cycle.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut next_dart: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
        for (v, neighbors) in self.rot.iter().enumerate() {
            for (i, &u) in neighbors.iter().enumerate() {
                let w = neighbors[(i + 1) % neighbors.len()];
                next_dart.insert((u, v), (v, w));
            }
        }
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut faces = Vec::new();
        let darts: Vec<(usize, usize)> = next_dart.keys().copied().collect();
        for start in darts {
            if seen.contains(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut dart = start;
            loop {
                seen.insert(dart);
                face.push(dart.0);
                dart = next_dart[&dart];
                if dart == start {
                    break;
                }
            }
            faces.push(face);
        }
        faces
    }
}

/// Builds the dual graph from the face list of an embedded graph: one dual
/// vertex per face, one dual edge per primal edge shared by two faces.
pub fn dual_from_faces(
    rotations: &RotationSystem,
    faces: &[Vec<usize>],
) -> Result<Graph, FullereneError> {
    let mut edge_faces: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (f, cycle) in faces.iter().enumerate() {
        for i in 0..cycle.len() {
            let u = cycle[i];
            let v = cycle[(i + 1) % cycle.len()];
            let key = (u.min(v), u.max(v));
            edge_faces.entry(key).or_default().push(f);
        }
    }
    let mut dual_edges = Vec::new();
    let mut seen = BTreeSet::new();
    for ((u, v), fs) in &edge_faces {
        if fs.len() != 2 || fs[0] == fs[1] {
            return Err(FullereneError::EdgeFaceCount {
                u: rotations.label(*u),
                v: rotations.label(*v),
            });
        }
        let (a, b) = (fs[0].min(fs[1]), fs[0].max(fs[1]));
        if !seen.insert((a, b)) {
            return Err(FullereneError::DualMultiEdge { a, b });
        }
        dual_edges.push((a, b));
    }
    Ok(Graph::from_edges(faces.len(), &dual_edges)?)
}

/// Full embedding route: parse rotations, require a cubic graph, trace
/// faces, admit only pentagons and hexagons with exactly twelve pentagons
/// and a closed-surface face count, and return the primal graph with its
/// dual.
pub fn cage_dual_from_rotations(text: &str) -> Result<(Graph, Graph), FullereneError> {
    let rotations = RotationSystem::parse(text)?;
    let primal = rotations.graph()?;
    for v in 0..rotations.n() {
        if rotations.degree(v) != 3 {
            return Err(FullereneError::NotCubic {
                vertex: rotations.label(v),
                degree: rotations.degree(v),
            });
        }
    }
    let faces = rotations.faces();
    let (n, m) = (primal.n(), primal.m());
    if n + faces.len() != m + 2 {
        return Err(FullereneError::EulerViolation {
            n,
            m,
            faces: faces.len(),
        });
    }
    let mut pentagons = 0;
    for face in &faces {
        match face.len() {
            5 => pentagons += 1,
            6 => {}
            size => return Err(FullereneError::BadFaceSize { size }),
        }
    }
    if pentagons != 12 {
        return Err(FullereneError::PentagonCount { found: pentagons });
    }
    let dual = dual_from_faces(&rotations, &faces)?;
    Ok((primal, dual))
}

/// One face spiral: `label k p1 ... p12` with 1-based pentagon positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpiralLine {
    pub label: String,
    pub k: usize,
    pub pentagons: [usize; 12],
}

impl SpiralLine {
    /// The face-size sequence the spiral describes: k/2 + 2 faces, size 5
    /// at the pentagon positions and 6 elsewhere.
    pub fn face_sizes(&self) -> Result<Vec<usize>, FullereneError> {
        if self.k % 2 != 0 {
            return Err(FullereneError::OddVertexCount { k: self.k });
        }
        if self.k < 20 {
            return Err(FullereneError::TooSmall { k: self.k });
        }
        let faces = self.k / 2 + 2;
        let mut sizes = vec![6; faces];
        let mut seen = BTreeSet::new();
        for &p in &self.pentagons {
            if p == 0 || p > faces {
                return Err(FullereneError::BadPentagonPosition {
                    position: p,
                    faces,
                });
            }
            if !seen.insert(p) {
                return Err(FullereneError::DuplicatePentagonPosition { position: p });
            }
            sizes[p - 1] = 5;
        }
        Ok(sizes)
    }
}

/// Parses a spiral file: one `label k p1 ... p12` record per line, with
/// blank lines and `#` comments skipped.
pub fn parse_spiral_file(text: &str) -> Result<Vec<SpiralLine>, FullereneError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let malformed = || FullereneError::MalformedSpiral {
            line,
            text: raw.trim().to_string(),
        };
        if tokens.len() != 14 {
            return Err(malformed());
        }
        let k: usize = tokens[1].parse().map_err(|_| malformed())?;
        let mut pentagons = [0usize; 12];
        for (slot, tok) in pentagons.iter_mut().zip(&tokens[2..]) {
            *slot = tok.parse().map_err(|_| malformed())?;
        }
        out.push(SpiralLine {
            label: tokens[0].to_string(),
            k,
            pentagons,
        });
    }
    Ok(out)
}

/// Winds a face-size spiral into the dual graph. Faces are attached one at
/// a time to the boundary of the patch built so far: each new face touches
/// the newest and oldest exposed boundary faces, and whenever an end of
/// the boundary becomes saturated it is enclosed and the new face also
/// touches its neighbor. The final face must close every remaining
/// boundary face at once. Any mismatch along the way means no cage has
/// this spiral.
pub fn decode_spiral(sizes: &[usize]) -> Result<Graph, FullereneError> {
    let faces = sizes.len();
    if faces < 4 {
        return Err(FullereneError::Windup {
            face: 0,
            detail: format!("only {faces} faces"),
        });
    }
    let mut open: Vec<usize> = sizes.to_vec();
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut connect = |open: &mut Vec<usize>, a: usize, b: usize| -> Result<(), FullereneError> {
        let detail = |why: &str| FullereneError::Windup {
            face: a.max(b),
            detail: format!("{why} joining faces {a} and {b}"),
        };
        if a == b {
            return Err(detail("self-contact"));
        }
        if open[a] == 0 || open[b] == 0 {
            return Err(detail("saturated face"));
        }
        if !edges.insert((a.min(b), a.max(b))) {
            return Err(detail("repeated contact"));
        }
        open[a] -= 1;
        open[b] -= 1;
        Ok(())
    };
    connect(&mut open, 0, 1)?;
    let mut boundary: VecDeque<usize> = VecDeque::from([0, 1]);
    for j in 2..faces - 1 {
        connect(&mut open, j, *boundary.back().unwrap())?;
        while open[*boundary.back().unwrap()] == 0 {
            boundary.pop_back();
            let Some(&b) = boundary.back() else {
                return Err(FullereneError::Windup {
                    face: j,
                    detail: "boundary exhausted".into(),
                });
            };
            connect(&mut open, j, b)?;
        }
        connect(&mut open, j, *boundary.front().unwrap())?;
        while open[*boundary.front().unwrap()] == 0 {
            boundary.pop_front();
            let Some(&b) = boundary.front() else {
                return Err(FullereneError::Windup {
                    face: j,
                    detail: "boundary exhausted".into(),
                });
            };
            connect(&mut open, j, b)?;
        }
        boundary.push_back(j);
    }
    let last = faces - 1;
    if boundary.len() != sizes[last] {
        return Err(FullereneError::Windup {
            face: last,
            detail: format!(
                "final face of size {} meets a boundary of {} faces",
                sizes[last],
                boundary.len()
            ),
        });
    }
    for &b in &boundary {
        connect(&mut open, last, b)?;
    }
    if let Some(f) = (0..faces).find(|&f| open[f] != 0) {
        return Err(FullereneError::Windup {
            face: f,
            detail: format!("face {f} left with {} unmatched sides", open[f]),
        });
    }
    let edge_list: Vec<(usize, usize)> = edges.into_iter().collect();
    let dual = Graph::from_edges(faces, &edge_list)?;
    for f in 0..faces {
        debug_assert_eq!(dual.degree(f), sizes[f]);
    }
    Ok(dual)
}

/// Number of adjacent pentagon pairs: dual edges joining two degree-5
/// vertices.
pub fn pentagon_adjacencies(dual: &Graph) -> usize {
    dual.edges()
        .iter()
        .filter(|&&(u, v)| dual.degree(u) == 5 && dual.degree(v) == 5)
        .count()
}

/// IRL of the dual in closed form: 60 - 2*Np.
pub fn dual_irl_formula(np: usize) -> i128 {
    60 - 2 * np as i128
}

/// IRM of the dual in closed form: 54k + Np - 360 - 54k^3/(k+4)^2.
pub fn dual_irm_formula(k: usize, np: usize) -> Rat {
    let k = k as i128;
    rint(54 * k + np as i128 - 360) - rint(54) * rint(k).pow(3) / rint(k + 4).pow(2)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CageReport {
    pub label: String,
    /// primal vertex count
    pub k: usize,
    /// dual order and size
    pub n: usize,
    pub m: usize,
    /// adjacent pentagon pairs
    pub np: usize,
    pub irld: i128,
    pub irmd: Rat,
    pub forgotten_dual: i128,
    /// measured IRL agrees with 60 - 2*Np
    pub irl_closed_form: bool,
    /// measured IRM agrees with 54k + Np - 360 - 54k^3/(k+4)^2
    pub irm_closed_form: bool,
    /// IRM = F/2 - 4m^3/n^2 - IRL/2 consistency across routes
    pub irm_decomposition: bool,
}

/// Measures the dual and compares each irregularity value against its
/// closed form. The dual is taken as produced by one of the two
/// construction routes; its degrees are the face sizes.
pub fn cage_report(label: impl Into<String>, k: usize, dual: &Graph) -> CageReport {
    let profile = degree_profile(dual);
    let report = invariant_report_with_profile(dual, &profile);
    let np = pentagon_adjacencies(dual);
    let irld = report.irl;
    let irmd = report.irm.clone();
    let (n, m) = (rint(report.n as i128), rint(report.m as i128));
    let decomposed = rint(report.forgotten) / rint(2)
        - rint(4) * m.clone().pow(3) / n.clone().pow(2)
        - rint(irld) / rint(2);
    CageReport {
        label: label.into(),
        k,
        n: report.n,
        m: report.m,
        np,
        irld,
        irmd: irmd.clone(),
        forgotten_dual: report.forgotten,
        irl_closed_form: irld == dual_irl_formula(np),
        irm_closed_form: irmd == dual_irm_formula(k, np),
        irm_decomposition: irmd == decomposed,
    }
}

pub fn report_from_spiral(spiral: &SpiralLine) -> Result<CageReport, FullereneError> {
    let sizes = spiral.face_sizes()?;
    let dual = decode_spiral(&sizes)?;
    Ok(cage_report(spiral.label.clone(), spiral.k, &dual))
}

pub fn report_from_rotations(
    label: impl Into<String>,
    text: &str,
) -> Result<CageReport, FullereneError> {
    let (primal, dual) = cage_dual_from_rotations(text)?;
    Ok(cage_report(label, primal.n(), &dual))
}

/// Parses `label,value` lines; a leading `label,...` header, blank lines
/// and `#` comments are skipped. Labels must be unique.
pub fn parse_label_value_csv(text: &str) -> Result<Vec<(String, f64)>, FullereneError> {
    let mut out: Vec<(String, f64)> = Vec::new();
    let mut seen = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let malformed = || FullereneError::MalformedCsv {
            line,
            text: content.to_string(),
        };
        let mut fields = content.split(',');
        let label = fields.next().ok_or_else(malformed)?.trim();
        let value = fields.next().ok_or_else(malformed)?.trim();
        if fields.next().is_some() || label.is_empty() {
            return Err(malformed());
        }
        if line == 1 && label.eq_ignore_ascii_case("label") {
            continue;
        }
        let value: f64 = value.parse().map_err(|_| malformed())?;
        if !seen.insert(label.to_string()) {
            return Err(FullereneError::DuplicateLabel {
                label: label.to_string(),
            });
        }
        out.push((label.to_string(), value));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Regression {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub count: usize,
}

/// Ordinary least squares of y on x.
pub fn linear_regression(pairs: &[(f64, f64)]) -> Result<Regression, FullereneError> {
    let n = pairs.len();
    if n < 3 {
        return Err(FullereneError::NotEnoughPairs { found: n });
    }
    let nf = n as f64;
    let mean_x = pairs.iter().map(|p| p.0).sum::<f64>() / nf;
    let mean_y = pairs.iter().map(|p| p.1).sum::<f64>() / nf;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for &(x, y) in pairs {
        sxx += (x - mean_x) * (x - mean_x);
        syy += (y - mean_y) * (y - mean_y);
        sxy += (x - mean_x) * (y - mean_y);
    }
    if sxx == 0.0 {
        return Err(FullereneError::ConstantValues { which: "index" });
    }
    if syy == 0.0 {
        return Err(FullereneError::ConstantValues { which: "response" });
    }
    let slope = sxy / sxx;
    Ok(Regression {
        slope,
        intercept: mean_y - slope * mean_x,
        r_squared: sxy * sxy / (sxx * syy),
        count: n,
    })
}

/// Matches two label-value series by label and regresses the second on the
/// first. Pairing follows the order of the first series.
pub fn correlate(
    index: &[(String, f64)],
    response: &[(String, f64)],
) -> Result<Regression, FullereneError> {
    let lookup: BTreeMap<&str, f64> = response
        .iter()
        .map(|(label, v)| (label.as_str(), *v))
        .collect();
    let pairs: Vec<(f64, f64)> = index
        .iter()
        .filter_map(|(label, x)| lookup.get(label.as_str()).map(|&y| (*x, y)))
        .collect();
    linear_regression(&pairs)
}
