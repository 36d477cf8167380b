//! Graph invariants under edge contraction.
//!
//! The library computes the Wiener index W (sum of all pairwise distances)
//! and total eccentricity ε (sum of per-vertex maximum distances) of small
//! connected graphs, contracts edges with merged-neighborhood semantics,
//! and checks that W − ε never increases under contraction — together with
//! the distance and eccentricity lemmas that inequality rests on, and an
//! open bound conjecturing that paths maximize W − ε among graphs of
//! radius at least 4.
//!
//! Graphs are immutable adjacency bitrows (up to [`MAX_VERTICES`]
//! vertices), exchanged as graph6 text. Corpora come from exhaustive
//! isomorphism-reduced enumeration (n ≤ 8), graph6 files, or seeded
//! deterministic random generators. All invariant arithmetic is exact
//! integers.

pub mod contraction;
pub mod corpus;
pub mod edgelist;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod metrics;
pub mod rng;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexId, MAX_VERTICES};
