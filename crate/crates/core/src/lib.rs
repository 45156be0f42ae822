//! Exact independence polynomials of small graphs.
//!
//! `indpoly` computes `I(G;x) = Σ s_k x^k`, where `s_k` counts the stable
//! sets of size `k`, for graphs on up to 64 vertices, and analyzes the shape
//! of the coefficient sequence: unimodality, log-concavity, modes and the
//! number of real roots (exactly, via Sturm chains).
//!
//! Larger graphs built from complete graphs, complete multipartite graphs,
//! spiders and centipedes are handled through closed forms without ever
//! materializing them.
//!
//! ```
//! use indpoly::{families, Polynomial};
//!
//! let h = families::graph_h_poly();
//! assert_eq!(h, Polynomial::from_i64s(&[1, 390, 660, 1120]));
//! assert!(h.is_unimodal().unwrap());
//! assert!(!h.is_log_concave().unwrap());
//! ```

pub mod commands;
pub mod engine;
pub mod error;
pub mod expr;
pub mod families;
pub mod graph;
pub mod par;
pub mod poly;
pub mod sturm;
pub mod trees;

pub use engine::{independence_poly, oracle_profile, star_transform, StableSetProfile};
pub use error::{Error, Result, MAX_VERTICES};
pub use graph::{Graph, VertexSet};
pub use poly::{Polynomial, ShapeReport};
