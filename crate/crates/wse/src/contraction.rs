//! Edge contraction with merged-neighborhood semantics, and contraction
//! chains that track W − ε step by step.
//!
//! Contracting edge e = xy merges x and y into one vertex α whose
//! neighborhood is N(x) ∪ N(y); the loop from e is dropped and parallel
//! edges arising from common neighbors collapse, so the result is again
//! a simple graph on n − 1 vertices.

use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::graph6::write_graph6;
use crate::metrics::invariant_summary;
use crate::rng::{GeneratorSeed, SplitMix64};

/// A contracted graph plus the bookkeeping to relate it to the original.
#[derive(Debug, Clone)]
pub struct ContractionResult {
    /// The simple graph on n − 1 vertices.
    pub contracted: Graph,
    /// Index of the merged vertex in `contracted`.
    pub alpha: VertexId,
    /// `fwd[v]` is the new index of original vertex `v`; both endpoints of
    /// the contracted edge map to `alpha`.
    pub fwd: Vec<VertexId>,
}

/// Contracts an edge of `g`.
///
/// Relabeling convention: α takes the index of the smaller endpoint, the
/// larger endpoint is deleted, and every higher index shifts down by one.
pub fn contract_edge(g: &Graph, e: Edge) -> Result<ContractionResult> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let (a, b) = e.endpoints();
    if b >= n {
        return Err(Error::EndpointOutOfRange { v: b, n });
    }
    if !g.has_edge(a, b) {
        return Err(Error::NotAnEdge { a, b });
    }

    // Drop column b after folding it into column a, then close the gap.
    let low = (1u64 << b) - 1;
    let squeeze = |row: u64| -> u64 {
        let folded = if row & (1 << b) != 0 {
            (row | (1 << a)) & !(1 << b)
        } else {
            row
        };
        (folded & low) | ((folded >> (b + 1)) << b)
    };

    let mut adj = Vec::with_capacity(n - 1);
    for u in 0..n {
        if u == b {
            continue;
        }
        let base = if u == a {
            // Merged neighborhood, minus the loop the contracted edge leaves.
            (g.row(a) | g.row(b)) & !((1 << a) | (1 << b))
        } else {
            g.row(u)
        };
        adj.push(squeeze(base));
    }

    let fwd = (0..n)
        .map(|v| match v {
            _ if v == b => a,
            _ if v > b => v - 1,
            _ => v,
        })
        .collect();
    Ok(ContractionResult {
        contracted: Graph::from_rows(adj),
        alpha: a,
        fwd,
    })
}

/// Edge-selection policy for contraction chains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainStrategy {
    /// Lexicographically first edge.
    FirstEdge,
    /// Uniform edge choice from a seeded deterministic stream.
    Random(GeneratorSeed),
    /// Edge whose higher-degree endpoint has maximal degree; ties fall to
    /// the lexicographically first such edge.
    MaxDegreeEndpoint,
}

/// One step of a contraction chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    /// The graph at this step, as graph6 text.
    pub graph6: String,
    /// W − ε at this step.
    pub wse: i64,
}

/// Contracts `g` one edge at a time down to K2, recording W − ε at every
/// step (`g` itself included). The result has n − 1 entries.
pub fn contract_chain(g: &Graph, strategy: ChainStrategy) -> Result<Vec<ChainStep>> {
    if g.n() < 2 {
        return Err(Error::TooSmall { n: g.n(), min: 2 });
    }
    let mut rng = match strategy {
        ChainStrategy::Random(seed) => Some(SplitMix64::new(seed)),
        _ => None,
    };
    let mut steps = Vec::with_capacity(g.n() - 1);
    let mut cur = g.clone();
    loop {
        let summary = invariant_summary(&cur)?;
        steps.push(ChainStep {
            graph6: write_graph6(&cur),
            wse: summary.wse,
        });
        if cur.n() <= 2 {
            return Ok(steps);
        }
        let e = match strategy {
            ChainStrategy::FirstEdge => cur.edges().next().expect("connected graph has edges"),
            ChainStrategy::Random(_) => {
                let rng = rng.as_mut().expect("random strategy carries a generator");
                let k = rng.below(cur.edge_count() as u64) as usize;
                cur.edges().nth(k).expect("index below edge count")
            }
            ChainStrategy::MaxDegreeEndpoint => cur
                .edges()
                .max_by_key(|e| {
                    let (a, b) = e.endpoints();
                    (cur.degree(a).max(cur.degree(b)), Reverse((a, b)))
                })
                .expect("connected graph has edges"),
        };
        cur = contract_edge(&cur, e)?.contracted;
    }
}
