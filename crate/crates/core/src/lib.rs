//! Exact colouring and double-criticality tooling for small graphs.
//!
//! A graph is *double-critical* when it is connected and deleting both ends
//! of any edge lowers the chromatic number by exactly two. Complete graphs
//! are the only known examples. This crate provides:
//!
//! * [`graph`]: bitset graphs on at most 64 vertices and their set algebra,
//!   with [`graph6`] / sparse6 ingestion;
//! * [`coloring`]: exact chromatic number, clique number, independence
//!   number and capped enumeration of colourings;
//! * [`structure`]: claw detection, triangle counts, and the shape of the
//!   complement of a neighbourhood;
//! * [`properties`]: the brute-force double-criticality oracle and one
//!   checker per known necessary condition;
//! * [`search`]: a filter pipeline and corpus scanner hunting non-complete
//!   double-critical graphs.

pub mod coloring;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod properties;
pub mod search;
pub mod structure;

pub use coloring::{chromatic_number, is_k_colorable, Coloring, ColoringEngine};
pub use error::{GraphError, ParseError};
pub use graph::{Graph, VertexSet};
