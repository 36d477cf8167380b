//! Independent reference implementations for cross-checking the main
//! library: Floyd–Warshall distances, union-find connectivity, a
//! brute-force labeled enumerator with permutation-based isomorphism
//! dedup, and a metric-axiom checker.
//!
//! Everything here works on plain `(n, edge list)` data and shares no code
//! with the library under test — different algorithms, different
//! representations — so agreement between the two is meaningful.

use itertools::Itertools;

/// All-pairs shortest path lengths by Floyd–Warshall, or `None` if the
/// graph is disconnected.
pub fn floyd_warshall(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<u32>>> {
    const INF: u32 = u32::MAX / 2;
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(a, b) in edges {
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    if d.iter().any(|row| row.iter().any(|&x| x >= INF)) {
        None
    } else {
        Some(d)
    }
}

/// Connectivity by union-find with path halving.
pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut components = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    components == 1
}

/// The edge pairs of the complete graph on `n` vertices, in the fixed
/// column order used by the bitmask enumerator and canonical keys.
fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n)
        .flat_map(|col| (0..col).map(move |row| (row, col)))
        .collect()
}

/// Every connected labeled graph on `n` vertices, as edge lists, by brute
/// force over all edge subsets of K_n. Exponential; intended for n ≤ 6.
pub fn connected_labeled_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs = all_pairs(n);
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p)
            .collect();
        if is_connected(n, &edges) {
            out.push(edges);
        }
    }
    out
}

/// Edge bitmask of a graph after relabeling by `perm` (new = perm[old]).
fn relabeled_key(n: usize, edges: &[(usize, usize)], perm: &[usize]) -> u64 {
    let pairs = all_pairs(n);
    let index = |a: usize, b: usize| {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        pairs
            .iter()
            .position(|&p| p == (lo, hi))
            .expect("pair exists")
    };
    edges
        .iter()
        .fold(0u64, |key, &(a, b)| key | (1 << index(perm[a], perm[b])))
}

/// Canonical key of one graph: the minimal edge bitmask over all n!
/// relabelings.
pub fn canonical_key(n: usize, edges: &[(usize, usize)]) -> u64 {
    (0..n)
        .permutations(n)
        .map(|perm| relabeled_key(n, edges, &perm))
        .min()
        .expect("at least the identity permutation")
}

/// Number of isomorphism classes among the given labeled graphs.
pub fn isomorphism_class_count(n: usize, graphs: &[Vec<(usize, usize)>]) -> usize {
    graphs
        .iter()
        .map(|edges| canonical_key(n, edges))
        .collect::<std::collections::BTreeSet<u64>>()
        .len()
}

/// Checks the metric axioms plus the unweighted-graph adjacency law on a
/// distance matrix: zero diagonal, symmetry, positivity off the diagonal,
/// triangle inequality, and d(u,v) = 1 exactly on edges.
pub fn metric_axioms(
    d: &[Vec<u32>],
    adjacent: impl Fn(usize, usize) -> bool,
) -> Result<(), String> {
    let n = d.len();
    for u in 0..n {
        if d[u].len() != n {
            return Err(format!("row {u} has length {}", d[u].len()));
        }
        if d[u][u] != 0 {
            return Err(format!("nonzero diagonal at {u}"));
        }
        for v in 0..n {
            if d[u][v] != d[v][u] {
                return Err(format!("asymmetry at ({u},{v})"));
            }
            if u != v && d[u][v] == 0 {
                return Err(format!("zero distance between distinct {u},{v}"));
            }
            if (d[u][v] == 1) != adjacent(u, v) {
                return Err(format!("adjacency law broken at ({u},{v})"));
            }
            for w in 0..n {
                if d[u][w] > d[u][v] + d[v][w] {
                    return Err(format!("triangle violated at ({u},{v},{w})"));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floyd_warshall_on_p3() {
        let d = floyd_warshall(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(d, vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]);
        assert!(floyd_warshall(3, &[(0, 1)]).is_none());
    }

    #[test]
    fn union_find_connectivity() {
        assert!(is_connected(4, &[(0, 1), (1, 2), (2, 3)]));
        assert!(!is_connected(4, &[(0, 1), (2, 3)]));
        assert!(is_connected(1, &[]));
        assert!(!is_connected(2, &[]));
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(connected_labeled_graphs(1).len(), 1);
        assert_eq!(connected_labeled_graphs(2).len(), 1);
        assert_eq!(connected_labeled_graphs(3).len(), 4);
        assert_eq!(connected_labeled_graphs(4).len(), 38);
    }

    #[test]
    fn class_counts() {
        let four = connected_labeled_graphs(4);
        assert_eq!(isomorphism_class_count(4, &four), 6);
        let three = connected_labeled_graphs(3);
        assert_eq!(isomorphism_class_count(3, &three), 2);
    }

    #[test]
    fn canonical_key_identifies_isomorphs() {
        assert_eq!(
            canonical_key(3, &[(0, 1), (1, 2)]),
            canonical_key(3, &[(0, 2), (1, 2)])
        );
        assert_ne!(
            canonical_key(3, &[(0, 1), (1, 2)]),
            canonical_key(3, &[(0, 1), (0, 2), (1, 2)])
        );
    }

    #[test]
    fn axioms_checker_catches_breakage() {
        let good = floyd_warshall(3, &[(0, 1), (1, 2)]).unwrap();
        let adjacency = |u: usize, v: usize| {
            (u, v) == (0, 1) || (u, v) == (1, 0) || (u, v) == (1, 2) || (u, v) == (2, 1)
        };
        assert!(metric_axioms(&good, adjacency).is_ok());

        let mut broken = good.clone();
        broken[0][2] = 9;
        broken[2][0] = 9;
        assert!(metric_axioms(&broken, adjacency).is_err());
    }
}
