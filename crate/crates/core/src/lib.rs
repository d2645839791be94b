//! Edge slides on spanning trees of the hypercube `Q_n`.
//!
//! The crate covers the static cube structure ([`hypercube`]), spanning trees
//! with their orientations, weights, exhaustive enumeration, exact counts and
//! uniform sampling ([`tree`]), the edge-slide calculus and the retraction
//! onto upright trees ([`slides`]), the weight-preserving bijection between
//! spanning trees of `Q_3` and signed sections ([`bijection`]), and the
//! edge-slide graph of `Q_3` ([`slide_graph`]).

pub mod bijection;
pub mod error;
pub mod forest;
pub mod hypercube;
pub mod laurent;
pub mod slide_graph;
pub mod slides;
pub mod tree;

pub use error::{Error, Result};
pub use hypercube::{CubeEdge, Hypercube, Vertex};
pub use tree::{SpanningTree, TreeWeight};
