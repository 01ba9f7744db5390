use thiserror::Error;

use crate::graph::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("vertex sets overlap in {0:?}")]
    OverlappingSets(VertexSet),
    #[error("connectivity is undefined for the graph on zero vertices")]
    EmptyGraph,
    #[error("{0} is not an edge")]
    NotAnEdge(String),
    #[error("vertex {0} is not dominating")]
    NotDominating(usize),
}

/// graph6/sparse6 decoding failures. Offsets are byte positions in the
/// line as given (after any `>>graph6<<` style header).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("malformed size header at offset {offset}")]
    MalformedHeader { offset: usize },
    #[error("graph has {n} vertices; at most 64 are supported")]
    TooManyVertices { n: usize },
    #[error("truncated edge data: expected {expected} bytes from offset {offset}, found {found}")]
    Truncated { offset: usize, expected: usize, found: usize },
    #[error("unexpected trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("sparse6 data encodes a loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("incremental sparse6 (';' prefix) is not supported")]
    Incremental,
}
