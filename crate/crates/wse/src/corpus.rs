//! Graph sources for batch verification: exhaustive enumeration of small
//! connected graphs (isomorphism-reduced or fully labeled), canonical
//! forms, seeded random generators, and graph6 stream ingestion.
//!
//! Enumeration grows connected graphs level by level: every connected
//! graph on k+1 vertices has a non-cut vertex (any leaf of a spanning
//! tree), so it arises from a connected graph on k vertices by attaching
//! one new vertex to a nonempty neighbor set. Trying all parents and all
//! nonempty sets therefore reaches every class; canonical forms
//! deduplicate the results.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, MAX_VERTICES};
use crate::graph6::parse_graph6;
use crate::rng::{GeneratorSeed, SplitMix64};

/// Hard ceiling for permutation-minimizing canonicalization.
pub const CANONICAL_MAX: usize = 8;
/// Hard ceiling for the labeled (dedup = false) sweep; the labeled count
/// grows as 2^(n(n−1)/2), so beyond this the sweep stops being desk-scale.
pub const LABELED_MAX: usize = 6;
/// Resample budget for the connected Erdős–Rényi sampler.
pub const GNP_RETRY_CAP: usize = 10_000;

/// Labeling-invariant identity of a graph: the lexicographically minimal
/// column-major upper-triangle adjacency bit-string over all vertex
/// permutations, preceded by the vertex count.
///
/// Two graphs of supported size have equal forms iff they are isomorphic,
/// and `Ord` on forms gives a stable, shardable enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Rebuilds the representative graph encoded by this form.
    pub fn to_graph(&self) -> Graph {
        let n = self.bytes[0] as usize;
        let mut adj = vec![0u64; n];
        let mut idx = 0usize;
        for col in 1..n {
            for row in 0..col {
                let byte = self.bytes[1 + idx / 8];
                if byte & (0x80 >> (idx % 8)) != 0 {
                    adj[row] |= 1 << col;
                    adj[col] |= 1 << row;
                }
                idx += 1;
            }
        }
        Graph::from_rows(adj)
    }
}

/// Minimal adjacency bit-string over all n! relabelings.
///
/// The string is minimized column by column: the frontier holds every
/// ordered vertex prefix achieving the minimal bits so far, and each level
/// extends the frontier by one vertex, keeping only extensions whose next
/// column is minimal. This walks exactly the permutation prefixes that can
/// still win, so it returns the same form as full permutation enumeration.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANONICAL_MAX {
        return Err(Error::RangeUnsupported {
            n,
            max: CANONICAL_MAX,
            what: "canonical form",
        });
    }

    // (prefix vertices, used-vertex mask); prefixes padded with zeros.
    let mut frontier: Vec<([u8; 8], u64)> = (0..n)
        .map(|v| {
            let mut p = [0u8; 8];
            p[0] = v as u8;
            (p, 1u64 << v)
        })
        .collect();

    let mut bitstream: Vec<bool> = Vec::with_capacity(n * (n - 1) / 2);
    for k in 1..n {
        let mut best = u32::MAX;
        let mut next: Vec<([u8; 8], u64)> = Vec::new();
        for &(prefix, used) in &frontier {
            for v in 0..n {
                if used & (1 << v) != 0 {
                    continue;
                }
                let mut col = 0u32;
                for &p in prefix.iter().take(k) {
                    col = (col << 1) | ((g.row(p as usize) >> v) & 1) as u32;
                }
                if col < best {
                    best = col;
                    next.clear();
                }
                if col == best {
                    let mut extended = prefix;
                    extended[k] = v as u8;
                    next.push((extended, used | (1 << v)));
                }
            }
        }
        for i in (0..k).rev() {
            bitstream.push((best >> i) & 1 == 1);
        }
        frontier = next;
    }

    let mut bytes = vec![n as u8];
    bytes.resize(1 + bitstream.len().div_ceil(8), 0);
    for (idx, &bit) in bitstream.iter().enumerate() {
        if bit {
            bytes[1 + idx / 8] |= 0x80 >> (idx % 8);
        }
    }
    Ok(CanonicalForm { bytes })
}

/// Relabels a connected graph by BFS order from its minimum-degree vertex
/// (ties to the lowest index), visiting neighbors in ascending order.
/// Purely cosmetic: class representatives come out in the natural reading
/// (paths as 0-1-…-k) instead of the minimal bit-string's labeling.
fn bfs_normalize(g: &Graph) -> Graph {
    let n = g.n();
    let root = (0..n).min_by_key(|&v| (g.degree(v), v)).expect("n >= 1");
    let mut order = Vec::with_capacity(n);
    let mut seen = 1u64 << root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for v in bits(g.row(u)) {
            if seen & (1 << v) == 0 {
                seen |= 1 << v;
                order.push(v);
            }
        }
    }
    debug_assert_eq!(order.len(), n, "normalization requires a connected graph");
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    g.relabel(&perm)
}

/// Adds vertex k to `g`, adjacent to the set bits of `mask`.
fn extend(g: &Graph, mask: u64) -> Graph {
    let k = g.n();
    let mut adj: Vec<u64> = (0..k)
        .map(|u| g.row(u) | (((mask >> u) & 1) << k))
        .collect();
    adj.push(mask);
    Graph::from_rows(adj)
}

/// Every connected graph on `n` vertices.
///
/// With `dedup`, one representative per isomorphism class, in ascending
/// canonical-form order (n ≤ 8). Without, every labeled connected graph,
/// in ascending order of the column-major edge bitmask (n ≤ 6).
pub fn enumerate_connected(n: usize, dedup: bool) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if dedup {
        if n > CANONICAL_MAX {
            return Err(Error::RangeUnsupported {
                n,
                max: CANONICAL_MAX,
                what: "isomorphism-reduced enumeration",
            });
        }
        let mut level = vec![Graph::complete(1).expect("K1")];
        for k in 1..n {
            let per_parent: Vec<Vec<CanonicalForm>> = level
                .par_iter()
                .map(|g| {
                    (1..(1u64 << k))
                        .map(|mask| {
                            canonical_form(&extend(g, mask)).expect("within canonical range")
                        })
                        .collect()
                })
                .collect();
            let forms: BTreeSet<CanonicalForm> = per_parent.into_iter().flatten().collect();
            level = forms.iter().map(CanonicalForm::to_graph).collect();
        }
        Ok(level.iter().map(bfs_normalize).collect())
    } else {
        if n > LABELED_MAX {
            return Err(Error::RangeUnsupported {
                n,
                max: LABELED_MAX,
                what: "labeled enumeration",
            });
        }
        let pairs: Vec<(usize, usize)> = (1..n)
            .flat_map(|col| (0..col).map(move |row| (row, col)))
            .collect();
        let mut out = Vec::new();
        for mask in 0..(1u64 << pairs.len()) {
            let mut adj = vec![0u64; n];
            for (i, &(row, col)) in pairs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    adj[row] |= 1 << col;
                    adj[col] |= 1 << row;
                }
            }
            let g = Graph::from_rows(adj);
            if g.is_connected() {
                out.push(g);
            }
        }
        Ok(out)
    }
}

/// Connected Erdős–Rényi sample with edge probability `p_num / p_den`.
///
/// Each pair is drawn once per attempt in column-major order; an edge is
/// kept iff `draw · p_den < p_num · 2^64`, exact in integers. Disconnected
/// samples are rejected and redrawn, up to [`GNP_RETRY_CAP`] attempts.
pub fn sample_connected_gnp(
    n: usize,
    p_num: u64,
    p_den: u64,
    seed: GeneratorSeed,
) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(Error::GraphTooLarge {
            n,
            max: MAX_VERTICES,
        });
    }
    if p_num == 0 || p_num > p_den {
        return Err(Error::InvalidProbability {
            num: p_num,
            den: p_den,
        });
    }
    let threshold = (p_num as u128) << 64;
    let mut rng = SplitMix64::new(seed);
    for _ in 0..GNP_RETRY_CAP {
        let mut adj = vec![0u64; n];
        for col in 1..n {
            for row in 0..col {
                let r = rng.next_u64();
                if (r as u128) * (p_den as u128) < threshold {
                    adj[row] |= 1 << col;
                    adj[col] |= 1 << row;
                }
            }
        }
        let g = Graph::from_rows(adj);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RetriesExhausted {
        attempts: GNP_RETRY_CAP,
    })
}

/// Uniform random labeled tree on `n` vertices via Prüfer decoding.
pub fn sample_random_tree(n: usize, seed: GeneratorSeed) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(Error::GraphTooLarge {
            n,
            max: MAX_VERTICES,
        });
    }
    if n == 1 {
        return Graph::complete(1);
    }
    let mut rng = SplitMix64::new(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    Ok(decode_pruefer(&seq, n))
}

/// Decodes a Prüfer sequence into its labeled tree, always joining the
/// smallest eligible leaf first.
///
/// Panics unless `n ≥ 2`, `seq.len() == n − 2`, and every entry is `< n`.
pub fn decode_pruefer(seq: &[usize], n: usize) -> Graph {
    assert!(n >= 2, "a tree needs at least two vertices");
    assert_eq!(seq.len(), n - 2, "sequence length must be n - 2");
    assert!(seq.iter().all(|&s| s < n), "entries must be vertices");

    let mut remaining = vec![0usize; n];
    for &s in seq {
        remaining[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| remaining[v] == 0).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always remains");
        edges.push((leaf, s));
        remaining[s] -= 1;
        if remaining[s] == 0 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(u) = leaves.pop().expect("two vertices remain");
    let Reverse(v) = leaves.pop().expect("two vertices remain");
    edges.push((u, v));
    Graph::from_edge_list(n, &edges).expect("decoded tree is simple")
}

/// Parses graph6 lines one at a time, tagging each result with its 1-based
/// line number so callers can abort or skip per their own policy. Blank
/// lines are skipped.
pub fn read_graph6_stream(text: &str) -> impl Iterator<Item = (usize, Result<Graph>)> + '_ {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| (i + 1, parse_graph6(line)))
}
