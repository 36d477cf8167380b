//! Property-based invariants: codec identities, contraction laws, metric
//! axioms, chain monotonicity, and canonicalization stability, on randomly
//! generated graphs.

use std::collections::BTreeSet;
use std::sync::LazyLock;

use proptest::prelude::*;

use wse::contraction::{contract_chain, contract_edge, ChainStrategy};
use wse::corpus::{canonical_form, enumerate_connected, sample_random_tree, CanonicalForm};
use wse::edgelist::{parse_edge_list, write_edge_list};
use wse::graph6::{parse_graph6, write_graph6};
use wse::metrics::{all_pairs_distances, invariant_summary};
use wse::rng::{GeneratorSeed, SplitMix64};
use wse::Graph;

/// A graph with arbitrary adjacency bits on exactly `n` vertices.
fn random_graph(rng: &mut SplitMix64, n: usize) -> Graph {
    let mut edges = Vec::new();
    for b in 1..n {
        for a in 0..b {
            if rng.next_u64() & 1 == 1 {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// A connected graph: a random tree plus a sprinkling of extra edges.
fn random_connected(rng: &mut SplitMix64, n_lo: usize, n_hi: usize) -> Graph {
    let n = n_lo + rng.below((n_hi - n_lo + 1) as u64) as usize;
    let tree = sample_random_tree(n, GeneratorSeed(rng.next_u64())).unwrap();
    let mut edges: Vec<(usize, usize)> = tree.edges().map(|e| e.endpoints()).collect();
    for b in 1..n {
        for a in 0..b {
            if !tree.has_edge(a, b) && rng.below(4) == 0 {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Canonical forms of every class on 1..=6 vertices, computed once.
static SMALL_CLASS_FORMS: LazyLock<Vec<BTreeSet<CanonicalForm>>> = LazyLock::new(|| {
    (0..=6)
        .map(|n| {
            if n == 0 {
                BTreeSet::new()
            } else {
                enumerate_connected(n, true)
                    .unwrap()
                    .iter()
                    .map(|g| canonical_form(g).unwrap())
                    .collect()
            }
        })
        .collect()
});

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(GeneratorSeed(seed));
        // Uniform over 1..=64 so the extended length form (n > 62) stays
        // covered alongside the short one.
        let n = 1 + rng.below(64) as usize;
        let g = random_graph(&mut rng, n);
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(GeneratorSeed(seed));
        let n = 1 + rng.below(20) as usize;
        let g = random_graph(&mut rng, n);
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn contraction_laws(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(GeneratorSeed(seed));
        let g = random_connected(&mut rng, 3, 12);
        let edges: Vec<_> = g.edges().collect();
        let e = edges[rng.below(edges.len() as u64) as usize];
        let (x, y) = e.endpoints();

        let r = contract_edge(&g, e).unwrap();
        prop_assert_eq!(r.contracted.n(), g.n() - 1);
        prop_assert!(r.contracted.is_connected());

        // |E(G.e)| = |E(G)| − 1 − |N(x) ∩ N(y)|
        let common = (g.row(x) & g.row(y)).count_ones() as usize;
        prop_assert_eq!(r.contracted.edge_count(), g.edge_count() - 1 - common);

        // Neighborhood of the merged vertex is the mapped union.
        let mut expected = 0u64;
        for v in 0..g.n() {
            if v != x && v != y && (g.has_edge(x, v) || g.has_edge(y, v)) {
                expected |= 1 << r.fwd[v];
            }
        }
        prop_assert_eq!(r.contracted.row(r.alpha), expected);

        // Adjacency between survivors is untouched.
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u != v && u != x && u != y && v != x && v != y {
                    prop_assert_eq!(
                        g.has_edge(u, v),
                        r.contracted.has_edge(r.fwd[u], r.fwd[v])
                    );
                }
            }
        }
    }

    #[test]
    fn metric_axioms_and_summary_consistency(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(GeneratorSeed(seed));
        let g = random_connected(&mut rng, 1, 14);
        let d = all_pairs_distances(&g).unwrap();
        let rows: Vec<Vec<u32>> = (0..g.n()).map(|u| d.row(u).to_vec()).collect();
        wse_oracle::metric_axioms(&rows, |u, v| g.has_edge(u, v)).unwrap();

        let s = invariant_summary(&g).unwrap();
        prop_assert_eq!(s.wse, s.wiener as i64 - s.total_ecc as i64);
        prop_assert_eq!(s.total_ecc, s.ecc.iter().map(|&x| x as u64).sum::<u64>());
        prop_assert_eq!(s.radius, s.ecc.iter().copied().min().unwrap());
        prop_assert_eq!(s.diameter, s.ecc.iter().copied().max().unwrap());
        prop_assert!(s.radius <= s.diameter && s.diameter <= 2 * s.radius);
    }

    #[test]
    fn chains_reach_k2_without_increasing(seed in any::<u64>(), pick in 0u8..3) {
        let mut rng = SplitMix64::new(GeneratorSeed(seed));
        let g = random_connected(&mut rng, 2, 12);
        let strategy = match pick {
            0 => ChainStrategy::FirstEdge,
            1 => ChainStrategy::Random(GeneratorSeed(seed ^ 0xA5A5)),
            _ => ChainStrategy::MaxDegreeEndpoint,
        };
        let steps = contract_chain(&g, strategy).unwrap();
        prop_assert_eq!(steps.len(), g.n() - 1);
        prop_assert_eq!(steps.last().unwrap().graph6.as_str(), "A_");
        prop_assert!(steps.windows(2).all(|w| w[1].wse <= w[0].wse));
    }

    #[test]
    fn canonical_form_stable_under_relabeling(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(GeneratorSeed(seed));
        let g = random_connected(&mut rng, 1, 8);
        let reference = canonical_form(&g).unwrap();
        let mut perm: Vec<usize> = (0..g.n()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.below(i as u64 + 1) as usize);
        }
        prop_assert_eq!(canonical_form(&g.relabel(&perm)).unwrap(), reference);
    }

    #[test]
    fn enumeration_covers_random_connected_graphs(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(GeneratorSeed(seed));
        let g = random_connected(&mut rng, 1, 6);
        let form = canonical_form(&g).unwrap();
        prop_assert!(SMALL_CLASS_FORMS[g.n()].contains(&form));
    }
}
