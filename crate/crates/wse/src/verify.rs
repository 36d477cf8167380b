//! Executable checkers: the contraction inequality for W − ε, the four
//! distance/eccentricity lemmas behind it, the two per-vertex inequalities
//! its proof decomposes into, and the open path-extremality bound.
//!
//! Every half-sum comparison is done on doubled integers — a vertex
//! contributes c(u) = Σ_v d(u,v) − 2·max_v d(u,v) — so all arithmetic is
//! exact. Summing c over all vertices gives exactly 2(W − ε).

use std::fmt;

use crate::contraction::{contract_edge, ContractionResult};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::graph6::write_graph6;
use crate::metrics::{all_pairs_distances, eccentric_vertices, invariant_summary, DistanceMatrix};

/// Wire identifier of one checkable statement.
///
/// D1/D2 are the distance-drop lemmas (pair distances, and distances to the
/// merged vertex, fall by at most one); E1/E2 are the eccentric-vertex
/// lemmas (the merged vertex inherits eccentric status when the endpoints
/// were the only eccentric vertices, and eccentric vertices away from the
/// contracted edge survive); Conj0/Conj1 are the per-vertex inequalities
/// for surviving and merged vertices respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaId {
    D1,
    D2,
    E1,
    E2,
    Conj0,
    Conj1,
}

impl LemmaId {
    pub const ALL: [LemmaId; 6] = [
        LemmaId::D1,
        LemmaId::D2,
        LemmaId::E1,
        LemmaId::E2,
        LemmaId::Conj0,
        LemmaId::Conj1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::D1 => "D1",
            LemmaId::D2 => "D2",
            LemmaId::E1 => "E1",
            LemmaId::E2 => "E2",
            LemmaId::Conj0 => "Conj0",
            LemmaId::Conj1 => "Conj1",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one lemma check on one (graph, edge) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    /// graph6 identity of the original graph.
    pub graph: String,
    /// The contracted edge, in original-graph labels.
    pub edge: Edge,
    pub holds: bool,
    /// Present exactly when `holds` is false; names the violating vertices.
    pub witness: Option<String>,
}

/// Outcome of the main inequality check on one (graph, edge) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRecord {
    pub graph: String,
    pub edge: Edge,
    pub wse_before: i64,
    pub wse_after: i64,
    /// wse_before − wse_after; the theorem asserts this is ≥ 0.
    pub delta: i64,
    pub pass: bool,
}

/// One graph's standing against the open path-extremality bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjecture2Record {
    pub graph: String,
    pub n: usize,
    pub radius: u32,
    pub wse: i64,
    pub bound: i64,
    pub within_bound: bool,
    pub equality: bool,
    pub is_path: bool,
}

/// Everything the per-edge checks share: both distance matrices and the
/// contraction bookkeeping.
struct EdgeContext<'a> {
    g: &'a Graph,
    e: Edge,
    x: VertexId,
    y: VertexId,
    dg: DistanceMatrix,
    ctr: ContractionResult,
    dge: DistanceMatrix,
}

impl<'a> EdgeContext<'a> {
    fn new(g: &'a Graph, e: Edge) -> Result<Self> {
        if g.n() < 3 {
            return Err(Error::TooSmall { n: g.n(), min: 3 });
        }
        let dg = all_pairs_distances(g)?;
        let ctr = contract_edge(g, e)?;
        let dge = all_pairs_distances(&ctr.contracted)?;
        let (x, y) = e.endpoints();
        Ok(EdgeContext {
            g,
            e,
            x,
            y,
            dg,
            ctr,
            dge,
        })
    }

    /// Vertices other than the contracted endpoints, in original labels.
    fn survivors(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.g.n()).filter(move |&u| u != self.x && u != self.y)
    }

    fn fwd(&self, u: VertexId) -> VertexId {
        self.ctr.fwd[u]
    }

    fn report(&self, lemma: LemmaId, witness: Option<String>) -> LemmaReport {
        LemmaReport {
            lemma,
            graph: write_graph6(self.g),
            edge: self.e,
            holds: witness.is_none(),
            witness,
        }
    }

    /// Doubled contribution c(u) = Σ_v d(u,v) − 2·max_v d(u,v).
    fn contribution(d: &DistanceMatrix, u: VertexId) -> i64 {
        let row = d.row(u);
        let sum: i64 = row.iter().map(|&x| x as i64).sum();
        let max = row.iter().copied().max().unwrap_or(0) as i64;
        sum - 2 * max
    }

    /// Pair distances between survivors drop by 0 or 1.
    fn distance_drop_pairs(&self) -> LemmaReport {
        let mut witness = None;
        'outer: for u in self.survivors() {
            for v in self.survivors() {
                if v <= u {
                    continue;
                }
                let before = self.dg.get(u, v);
                let after = self.dge.get(self.fwd(u), self.fwd(v));
                if after != before && after + 1 != before {
                    witness = Some(format!("pair ({u},{v}): distance {before} became {after}"));
                    break 'outer;
                }
            }
        }
        self.report(LemmaId::D1, witness)
    }

    /// A survivor's distance to the merged vertex is its old distance to
    /// either contracted endpoint, or that minus one — checked against both
    /// endpoints (the second form follows by symmetry).
    fn distance_drop_alpha(&self) -> LemmaReport {
        let mut witness = None;
        'outer: for u in self.survivors() {
            let after = self.dge.get(self.fwd(u), self.ctr.alpha);
            for end in [self.x, self.y] {
                let before = self.dg.get(u, end);
                if after != before && after + 1 != before {
                    witness = Some(format!(
                        "vertex {u}: distance to endpoint {end} was {before}, \
                         to the merged vertex is {after}"
                    ));
                    break 'outer;
                }
            }
        }
        self.report(LemmaId::D2, witness)
    }

    /// If the contracted endpoints were the only eccentric vertices of u
    /// (x, or y, or both — but nothing else), the merged vertex is
    /// eccentric for u afterwards. The hypothesis must be exhaustive:
    /// when u also has an eccentric vertex away from the edge, α can land
    /// strictly inside u's eccentricity (contract an edge of C5 and look
    /// at a neighbor of the merged vertex), and that situation belongs to
    /// the surviving-eccentric-vertex check instead.
    fn merged_eccentric(&self) -> LemmaReport {
        let mut witness = None;
        for u in self.survivors() {
            let before = eccentric_vertices(&self.dg, u).expect("u in range");
            if !before.iter().all(|&w| w == self.x || w == self.y) {
                continue;
            }
            let after = eccentric_vertices(&self.dge, self.fwd(u)).expect("u in range");
            if !after.contains(&self.ctr.alpha) {
                witness = Some(format!(
                    "vertex {u}: the endpoints were its only eccentric vertices \
                     but the merged vertex is not eccentric"
                ));
                break;
            }
        }
        self.report(LemmaId::E1, witness)
    }

    /// If u has an eccentric vertex away from the contracted edge, some
    /// such vertex stays eccentric for u after contraction.
    fn common_eccentric(&self) -> LemmaReport {
        let mut witness = None;
        for u in self.survivors() {
            let outside: Vec<VertexId> = eccentric_vertices(&self.dg, u)
                .expect("u in range")
                .into_iter()
                .filter(|&w| w != self.x && w != self.y)
                .collect();
            if outside.is_empty() {
                continue;
            }
            let after = eccentric_vertices(&self.dge, self.fwd(u)).expect("u in range");
            if !outside.iter().any(|&w| after.contains(&self.fwd(w))) {
                witness = Some(format!(
                    "vertex {u}: no eccentric vertex outside the edge survived"
                ));
                break;
            }
        }
        self.report(LemmaId::E2, witness)
    }

    /// Per-survivor inequality: c(u) in the original dominates c of its
    /// image in the contraction.
    fn pointwise_common(&self) -> LemmaReport {
        let mut witness = None;
        for u in self.survivors() {
            let before = Self::contribution(&self.dg, u);
            let after = Self::contribution(&self.dge, self.fwd(u));
            if before < after {
                witness = Some(format!(
                    "vertex {u}: doubled contribution {before} < {after}"
                ));
                break;
            }
        }
        self.report(LemmaId::Conj0, witness)
    }

    /// Merged-pair inequality: c(x) + c(y) dominates c of the merged vertex.
    fn pointwise_merged(&self) -> LemmaReport {
        let before = Self::contribution(&self.dg, self.x) + Self::contribution(&self.dg, self.y);
        let after = Self::contribution(&self.dge, self.ctr.alpha);
        let witness = (before < after)
            .then(|| format!("endpoint contributions {before} < merged contribution {after}"));
        self.report(LemmaId::Conj1, witness)
    }
}

/// Pair distances between surviving vertices drop by 0 or 1 under
/// contraction.
pub fn check_distance_drop_pairs(g: &Graph, e: Edge) -> Result<LemmaReport> {
    Ok(EdgeContext::new(g, e)?.distance_drop_pairs())
}

/// Distances from survivors to the merged vertex drop by 0 or 1 relative
/// to either contracted endpoint.
pub fn check_distance_drop_alpha(g: &Graph, e: Edge) -> Result<LemmaReport> {
    Ok(EdgeContext::new(g, e)?.distance_drop_alpha())
}

/// The merged vertex inherits eccentric status when the contracted
/// endpoints were a vertex's only eccentric vertices.
pub fn check_merged_eccentric(g: &Graph, e: Edge) -> Result<LemmaReport> {
    Ok(EdgeContext::new(g, e)?.merged_eccentric())
}

/// Eccentric vertices away from the contracted edge survive contraction.
pub fn check_common_eccentric(g: &Graph, e: Edge) -> Result<LemmaReport> {
    Ok(EdgeContext::new(g, e)?.common_eccentric())
}

/// Per-vertex inequality for surviving vertices, in doubled integers.
pub fn check_pointwise_common(g: &Graph, e: Edge) -> Result<LemmaReport> {
    Ok(EdgeContext::new(g, e)?.pointwise_common())
}

/// Per-vertex inequality for the contracted endpoints, in doubled integers.
pub fn check_pointwise_merged(g: &Graph, e: Edge) -> Result<LemmaReport> {
    Ok(EdgeContext::new(g, e)?.pointwise_merged())
}

/// All six lemma checks on one (graph, edge) pair, computing the distance
/// matrices once.
pub fn lemma_suite(g: &Graph, e: Edge) -> Result<Vec<LemmaReport>> {
    let ctx = EdgeContext::new(g, e)?;
    Ok(vec![
        ctx.distance_drop_pairs(),
        ctx.distance_drop_alpha(),
        ctx.merged_eccentric(),
        ctx.common_eccentric(),
        ctx.pointwise_common(),
        ctx.pointwise_merged(),
    ])
}

/// The main inequality: contracting any edge does not increase W − ε.
pub fn check_contraction_inequality(g: &Graph, e: Edge) -> Result<VerificationRecord> {
    if g.n() < 3 {
        return Err(Error::TooSmall { n: g.n(), min: 3 });
    }
    let before = invariant_summary(g)?;
    let ctr = contract_edge(g, e)?;
    let after = invariant_summary(&ctr.contracted)?;
    let delta = before.wse - after.wse;
    Ok(VerificationRecord {
        graph: write_graph6(g),
        edge: e,
        wse_before: before.wse,
        wse_after: after.wse,
        delta,
        pass: delta >= 0,
    })
}

/// Bookkeeping identity behind the proof's vertex partition: the summed
/// per-survivor differences plus the merged-pair difference, minus
/// 2·(wse_before − wse_after). Always exactly zero — any other value means
/// the per-vertex checks and the global check disagree about the same
/// quantity.
pub fn decomposition_residual(g: &Graph, e: Edge) -> Result<i64> {
    let ctx = EdgeContext::new(g, e)?;
    let survivors: i64 = ctx
        .survivors()
        .map(|u| {
            EdgeContext::contribution(&ctx.dg, u) - EdgeContext::contribution(&ctx.dge, ctx.fwd(u))
        })
        .sum();
    let merged = EdgeContext::contribution(&ctx.dg, ctx.x)
        + EdgeContext::contribution(&ctx.dg, ctx.y)
        - EdgeContext::contribution(&ctx.dge, ctx.ctr.alpha);

    let wse = |d: &DistanceMatrix| -> i64 {
        crate::metrics::wiener_index(d) as i64 - crate::metrics::total_eccentricity(d) as i64
    };
    let global = 2 * (wse(&ctx.dg) - wse(&ctx.dge));
    Ok(survivors + merged - global)
}

/// floor((2n³ − 9n² + 4n + 3) / 12): the conjectured ceiling for W − ε on
/// graphs of radius at least 4, attained by paths.
pub fn conjecture2_bound(n: usize) -> i64 {
    let n = n as i64;
    (2 * n * n * n - 9 * n * n + 4 * n + 3).div_euclid(12)
}

/// Tests one graph against the open bound. Returns `None` when the radius
/// hypothesis (rad ≥ 4) fails.
///
/// A record with `within_bound` false, or with `equality` true on a
/// non-path, is a counterexample candidate for an open conjecture: callers
/// must surface it as a finding, never assert against it.
pub fn check_conjecture2(g: &Graph) -> Result<Option<Conjecture2Record>> {
    let s = invariant_summary(g)?;
    if s.radius < 4 {
        return Ok(None);
    }
    let bound = conjecture2_bound(g.n());
    Ok(Some(Conjecture2Record {
        graph: write_graph6(g),
        n: g.n(),
        radius: s.radius,
        wse: s.wse,
        bound,
        within_bound: s.wse <= bound,
        equality: s.wse == bound,
        is_path: g.is_path_graph(),
    }))
}
