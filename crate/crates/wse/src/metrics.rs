//! Distance matrices and the distance-derived invariants: Wiener index,
//! eccentricities, total eccentricity, radius, diameter, and the W − ε
//! quantity the contraction checks track.

use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, Graph, VertexId};

/// All-pairs hop counts of a connected graph, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// d(u, v). Panics if either index is out of range.
    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.d[u * self.n + v]
    }

    /// The distance row of `u`.
    pub fn row(&self, u: VertexId) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

/// Every distance-derived invariant in one bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSummary {
    pub wiener: u64,
    pub ecc: Vec<u32>,
    pub total_ecc: u64,
    pub radius: u32,
    pub diameter: u32,
    /// W − ε; negative for small dense graphs (K2 has −1).
    pub wse: i64,
}

/// Hop counts from `s` to every vertex, by bitset BFS.
pub fn bfs_distances(g: &Graph, s: VertexId) -> Result<Vec<u32>> {
    let n = g.n();
    if s >= n {
        return Err(Error::VertexOutOfRange { v: s, n });
    }
    let all = full_mask(n);
    let mut dist = vec![0u32; n];
    let mut seen: u64 = 1 << s;
    let mut frontier = seen;
    let mut level = 0u32;
    while seen != all {
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= g.row(v);
        }
        next &= !seen;
        if next == 0 {
            let unreached = (!seen & all).trailing_zeros() as usize;
            return Err(Error::Disconnected { unreached });
        }
        level += 1;
        for v in bits(next) {
            dist[v] = level;
        }
        seen |= next;
        frontier = next;
    }
    Ok(dist)
}

/// Full distance matrix via one BFS per source.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        d.extend_from_slice(&bfs_distances(g, s)?);
    }
    let dm = DistanceMatrix { n, d };
    debug_assert!(metric_axioms_hold(g, &dm));
    Ok(dm)
}

/// ½ · Σ_u Σ_v d(u,v), exact.
pub fn wiener_index(d: &DistanceMatrix) -> u64 {
    d.d.iter().map(|&x| x as u64).sum::<u64>() / 2
}

/// Per-vertex eccentricities; `[0]` for the one-vertex graph.
pub fn eccentricity_vector(d: &DistanceMatrix) -> Vec<u32> {
    (0..d.n)
        .map(|u| d.row(u).iter().copied().max().unwrap_or(0))
        .collect()
}

/// Σ_u ecc(u).
pub fn total_eccentricity(d: &DistanceMatrix) -> u64 {
    eccentricity_vector(d).iter().map(|&x| x as u64).sum()
}

/// The vertices farthest from `u`; never empty for n ≥ 2.
pub fn eccentric_vertices(d: &DistanceMatrix, u: VertexId) -> Result<Vec<VertexId>> {
    if u >= d.n {
        return Err(Error::VertexOutOfRange { v: u, n: d.n });
    }
    let ecc = d.row(u).iter().copied().max().unwrap_or(0);
    Ok((0..d.n).filter(|&v| d.get(u, v) == ecc).collect())
}

/// Computes every invariant of a connected graph in one pass.
pub fn invariant_summary(g: &Graph) -> Result<InvariantSummary> {
    let d = all_pairs_distances(g)?;
    let wiener = wiener_index(&d);
    let ecc = eccentricity_vector(&d);
    let total_ecc = ecc.iter().map(|&x| x as u64).sum();
    let radius = ecc.iter().copied().min().unwrap_or(0);
    let diameter = ecc.iter().copied().max().unwrap_or(0);
    debug_assert!(radius <= diameter && diameter <= 2 * radius);
    Ok(InvariantSummary {
        wiener,
        ecc,
        total_ecc,
        radius,
        diameter,
        wse: wiener as i64 - total_ecc as i64,
    })
}

/// `(W(P_n), ε(P_n))` in closed form: n(n²−1)/6 and Σ_i max(i, n−1−i).
pub fn path_closed_forms(n: usize) -> (u64, u64) {
    let n64 = n as u64;
    let wiener = (n64 * n64 * n64 - n64) / 6;
    let total_ecc = (0..n64).map(|i| i.max(n64 - 1 - i)).sum();
    (wiener, total_ecc)
}

/// Metric axioms plus the adjacency law d(u,v)=1 ⟺ u∼v. Debug-only guard.
fn metric_axioms_hold(g: &Graph, d: &DistanceMatrix) -> bool {
    let n = d.n;
    for u in 0..n {
        if d.get(u, u) != 0 {
            return false;
        }
        for v in 0..n {
            if d.get(u, v) != d.get(v, u) || d.get(u, v) as usize > n.saturating_sub(1) {
                return false;
            }
            if (d.get(u, v) == 1) != g.has_edge(u, v) {
                return false;
            }
            for w in 0..n {
                if d.get(u, w) > d.get(u, v) + d.get(v, w) {
                    return false;
                }
            }
        }
    }
    true
}
