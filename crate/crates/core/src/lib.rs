//! Distances, eccentricities and peripheries of finite simple graphs, and
//! the *hangable* property: every vertex's farthest vertices lie in the
//! periphery of the graph.
//!
//! - [`graph`]: the immutable [`Graph`] type, graph6 and edge-list text
//!   formats, generators, and structural operations.
//! - [`metrics`]: all-pairs BFS distances, [`MetricProfile`], and two
//!   independent hangability deciders.
//! - [`blocks`]: biconnected components and block-graph recognition.
//! - [`products`]: corona, cartesian and join products with closed-form
//!   metric oracles.
//! - [`embedding`]: a hangable supergraph containing any graph as an
//!   induced subgraph.
//! - [`explorer`]: batch classification and brute-force probes.

pub mod blocks;
pub mod embedding;
pub mod error;
pub mod explorer;
pub mod graph;
pub mod metrics;
pub mod products;

#[cfg(test)]
mod fixtures;

pub use error::{GraphError, Result};
pub use graph::{Graph, Vertex};
pub use metrics::{check_hangable, check_hangable_triples, DistanceMatrix, HangabilityReport, MetricProfile};
