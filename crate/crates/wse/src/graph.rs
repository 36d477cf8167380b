//! Simple undirected graphs on up to [`MAX_VERTICES`] vertices, stored as
//! one adjacency bitrow per vertex.

use crate::error::{Error, Result};

/// Vertex index in `[0, n)`.
pub type VertexId = usize;

/// Hard ceiling on the vertex count: one `u64` bitrow per vertex.
pub const MAX_VERTICES: usize = 64;

/// An unordered pair of distinct vertices. The stored endpoints satisfy
/// `a < b`, so `Edge::new(u, v) == Edge::new(v, u)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    /// Builds an edge, normalizing endpoint order. Loops are rejected.
    pub fn new(u: VertexId, v: VertexId) -> Result<Self> {
        if u == v {
            return Err(Error::LoopEdge { v: u });
        }
        Ok(Edge {
            a: u.min(v),
            b: u.max(v),
        })
    }

    /// Endpoints as `(min, max)`.
    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.a, self.b)
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// A finite simple undirected graph.
///
/// Immutable after construction; all operations are pure reads, so values can
/// be shared freely across threads. The adjacency matrix is kept symmetric
/// with a zero diagonal by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(Error::GraphTooLarge {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

impl Graph {
    /// An edgeless graph on `n` vertices, `1 <= n <= MAX_VERTICES`.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an explicit edge list. Duplicate edges collapse
    /// silently; loops and out-of-range endpoints are errors.
    pub fn from_edge_list(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::EndpointOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::EndpointOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::LoopEdge { v: u });
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        g.debug_check();
        Ok(g)
    }

    /// The path 0-1-...-(n-1).
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// The cycle 0-1-...-(n-1)-0. Needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall { n, min: 3 });
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edge_list(n, &edges)
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges)
    }

    /// The star with center 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edge_list(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbor bitrow of `v` (unchecked index).
    pub fn row(&self, v: VertexId) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Neighbors of `v` in ascending order, excluding `v` itself.
    pub fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(bits(self.adj[v]).collect())
    }

    /// All edges in lexicographic order of `(min, max)` endpoints.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            bits(self.adj[u] & !((1u64 << u) | (1u64 << u).wrapping_sub(1)))
                .map(move |v| Edge { a: u, b: v })
        })
    }

    /// True iff a BFS from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        self.unreached_vertex().is_none()
    }

    /// First vertex a BFS from 0 fails to reach, if any.
    pub(crate) fn unreached_vertex(&self) -> Option<VertexId> {
        let mut seen: u64 = 1;
        let mut frontier: u64 = 1;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        let all = full_mask(self.n);
        bits(all & !seen).next()
    }

    /// True iff the graph is a path: connected with exactly two vertices of
    /// degree 1 and the rest of degree 2. K1 and K2 count as paths.
    pub fn is_path_graph(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        if !self.is_connected() {
            return false;
        }
        let mut deg1 = 0;
        let mut deg2 = 0;
        for v in 0..self.n {
            match self.degree(v) {
                1 => deg1 += 1,
                2 => deg2 += 1,
                _ => return false,
            }
        }
        deg1 == 2 && deg2 == self.n - 2
    }

    /// Relabels vertices: new index of `v` is `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[VertexId]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        let g = Graph { n: self.n, adj };
        g.debug_check();
        g
    }

    /// Symmetry and zero-diagonal invariants, checked in debug builds.
    pub(crate) fn debug_check(&self) {
        #[cfg(debug_assertions)]
        {
            for u in 0..self.n {
                debug_assert_eq!((self.adj[u] >> u) & 1, 0, "diagonal set at {u}");
                debug_assert_eq!(self.adj[u] & !full_mask(self.n), 0, "stray bits in row {u}");
                for v in 0..self.n {
                    debug_assert_eq!(
                        (self.adj[u] >> v) & 1,
                        (self.adj[v] >> u) & 1,
                        "asymmetry at ({u},{v})"
                    );
                }
            }
        }
    }

    /// Construction from raw bitrows; used by codecs and contraction after
    /// they have already established the invariants.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Graph {
        let g = Graph { n: adj.len(), adj };
        g.debug_check();
        g
    }
}

/// Iterates the set bit positions of `mask` in ascending order.
pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    std::iter::successors(
        (mask != 0).then(|| mask.trailing_zeros() as usize),
        move |&prev| {
            let rest = mask & !((1u64 << prev) | ((1u64 << prev) - 1));
            (rest != 0).then(|| rest.trailing_zeros() as usize)
        },
    )
}

/// Mask with the lowest `n` bits set.
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
