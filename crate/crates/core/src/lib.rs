//! Wiener polynomials of connected graphs and the location of their roots.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: bit-row graphs, BFS distance distributions, graph6 and
//!   edge-list parsing;
//! - [`enumerate`] and [`trees`]: exhaustive sweeps over labeled connected
//!   graphs and free trees;
//! - [`poly`]: exact coefficients, Eneström–Kakeya annuli, numeric and exact
//!   roots, imaginary-axis detection;
//! - [`families`]: closed forms and constructors for named graph families;
//! - [`claims`]: one verifier per root-location result, producing
//!   [`claims::ClaimReport`]s.

pub mod claims;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod poly;
pub mod trees;

pub use families::FamilySpec;
pub use graph::{DistanceDistribution, Graph, GraphError};
pub use poly::{Annulus, ComplexRoot, ReducedPolynomial, WienerPolynomial};
