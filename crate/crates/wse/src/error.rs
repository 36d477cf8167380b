use thiserror::Error;

use crate::graph::VertexId;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A graph with zero vertices was requested.
    #[error("graphs must have at least one vertex")]
    EmptyGraph,
    /// Vertex count exceeds the fixed bitrow width.
    #[error("graph on {n} vertices exceeds the supported maximum of {max}")]
    GraphTooLarge { n: usize, max: usize },
    /// An edge endpoint is not a vertex of the graph.
    #[error("edge endpoint {v} out of range for a graph on {n} vertices")]
    EndpointOutOfRange { v: VertexId, n: usize },
    /// A loop (edge from a vertex to itself) was supplied.
    #[error("loop edge at vertex {v} not allowed in a simple graph")]
    LoopEdge { v: VertexId },
    /// A vertex argument is not in [0, n).
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: VertexId, n: usize },
    /// graph6 header byte sequence is not a valid size encoding.
    #[error("malformed graph6 header: {reason}")]
    MalformedHeader { reason: String },
    /// graph6 payload has the wrong number of bits for the declared size.
    #[error("graph6 bit payload mismatch: {reason}")]
    TruncatedBits { reason: String },
    /// A byte outside the printable graph6 alphabet (63..=126).
    #[error("illegal graph6 character {byte:#04x} at byte offset {offset}")]
    IllegalCharacter { byte: u8, offset: usize },
    /// Edge-list text input could not be parsed.
    #[error("malformed edge list at line {line}: {reason}")]
    MalformedEdgeList { line: usize, reason: String },
    /// An operation that requires a connected graph saw an unreachable vertex.
    #[error("graph is disconnected (vertex {unreached} unreachable)")]
    Disconnected { unreached: VertexId },
    /// The supplied pair of vertices is not an edge of the graph.
    #[error("({a}, {b}) is not an edge of the graph")]
    NotAnEdge { a: VertexId, b: VertexId },
    /// The graph is below the minimum order for the requested operation.
    #[error("graph on {n} vertices is too small; need at least {min}")]
    TooSmall { n: usize, min: usize },
    /// Enumeration or canonicalization was asked for an unsupported order.
    #[error("vertex count {n} outside the supported range for {what} (max {max})")]
    RangeUnsupported {
        n: usize,
        max: usize,
        what: &'static str,
    },
    /// Rejection sampling failed to find a connected graph within the cap.
    #[error("no connected sample found after {attempts} attempts")]
    RetriesExhausted { attempts: usize },
    /// An edge probability was not a rational in (0, 1].
    #[error("edge probability {num}/{den} must satisfy 0 < num <= den")]
    InvalidProbability { num: u64, den: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
