//! Degree-based graph indices and irregularity analysis.
//!
//! The crate computes the classical degree-based topological indices of a
//! simple connected graph (Zagreb indices, forgotten index, sum-connectivity
//! and harmonic indices), the irregularity measures built from them, and the
//! adjacency spectral radius. On top of those it provides
//!
//! * a structural classifier for degree-regularity families (regular,
//!   bidegreed, semiregular, weakly semiregular, nearly regular, weakly
//!   irregular, well-stabilized, complete split, ...),
//! * deterministic graph generators for named families and seeded random
//!   connected graphs,
//! * a registry of inequality and identity checks between the indices,
//!   evaluated in exact rational arithmetic wherever the quantities are
//!   rational in the degrees, with an equality-class audit,
//! * fullerene tools: rotation-system parsing, face tracing, dual graphs,
//!   ring-spiral decoding, pentagon adjacency counts, and least-squares
//!   correlation against externally supplied energies.
//!
//! Integer-valued indices are returned as `i128`; rational-valued ones as
//! exact big rationals. Floating point only enters where a quantity is
//! genuinely irrational (square roots, fractional exponents, eigenvalues).

pub mod checks;
pub mod classify;
pub mod degrees;
pub mod exact;
pub mod fullerene;
pub mod generators;
pub mod graph;
pub mod invariants;
pub mod spectral;

pub use exact::Rat;
pub use graph::{Graph, GraphError};
