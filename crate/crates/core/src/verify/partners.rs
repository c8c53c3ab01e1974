//! Exhaustive comatching search.
//!
//! A graph with the same matching polynomial as `G` has the same order
//! (the degree), the same edge count (`m(G,1)`) and the same number of
//! 2-matchings (`m(G,2)`). The search enumerates every graph of that order
//! and edge count, rejects on `m(·,2)` from the degree sequence alone, and
//! runs the matching engine on what remains. Below the order cap the answer
//! is therefore complete.

use std::collections::HashMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::enumerate::{enumerate_with_edge_counts, MAX_ENUMERATION_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{matching_vector, MatchingVector};

/// Candidates handed to the thread pool at a time.
const BATCH: usize = 1 << 16;

/// Number of 2-matchings from the degree sequence: pairs of edges minus
/// pairs sharing an endpoint.
fn two_matchings(g: &Graph) -> u64 {
    let m = g.edge_count() as u64;
    let incident: u64 = (0..g.order()).map(|u| g.degree(u) as u64).map(|d| d * d.saturating_sub(1) / 2).sum();
    m * m.saturating_sub(1) / 2 - incident
}

fn check_cap(g: &Graph, n_cap: usize) -> Result<()> {
    let cap = n_cap.min(MAX_ENUMERATION_ORDER);
    if g.order() > cap {
        return Err(Error::OrderCap { order: g.order(), cap });
    }
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(())
}

/// Partners of every target, in target order. Targets of one order share a
/// single enumeration pass. Each partner list is in enumeration order.
pub fn find_comatching_partners_batch(targets: &[Graph], n_cap: usize) -> Result<Vec<Vec<Graph>>> {
    for g in targets {
        check_cap(g, n_cap)?;
    }
    struct Target {
        index: usize,
        canon: Graph,
        vector: MatchingVector,
    }
    let mut by_order: HashMap<usize, Vec<Target>> = HashMap::new();
    for (index, g) in targets.iter().enumerate() {
        let vector = matching_vector(g);
        by_order.entry(g.order()).or_default().push(Target { index, canon: g.canonical_graph(), vector });
    }
    let mut out = vec![Vec::new(); targets.len()];
    let mut orders: Vec<usize> = by_order.keys().copied().collect();
    orders.sort_unstable();
    for n in orders {
        let group = &by_order[&n];
        let mut keys: HashMap<(usize, BigUint), Vec<&Target>> = HashMap::new();
        for t in group {
            keys.entry((t.canon.edge_count(), t.vector.count(2))).or_default().push(t);
        }
        let mut edges: Vec<usize> = keys.keys().map(|(m, _)| *m).collect();
        edges.sort_unstable();
        edges.dedup();
        let mut stream = enumerate_with_edge_counts(n, false, &edges)?;
        loop {
            let batch: Vec<Graph> = stream.by_ref().take(BATCH).collect();
            if batch.is_empty() {
                break;
            }
            let hits: Vec<(usize, Graph)> = batch
                .into_par_iter()
                .flat_map_iter(|h| {
                    let key = (h.edge_count(), BigUint::from(two_matchings(&h)));
                    let mut found = Vec::new();
                    if let Some(ts) = keys.get(&key) {
                        let v = matching_vector(&h);
                        for t in ts {
                            if t.vector == v && t.canon != h {
                                found.push((t.index, h.clone()));
                            }
                        }
                    }
                    found
                })
                .collect();
            for (i, h) in hits {
                out[i].push(h);
            }
        }
    }
    Ok(out)
}

/// Every graph, up to isomorphism, that is not isomorphic to `g` but has
/// its matching polynomial.
pub fn find_comatching_partners(g: &Graph, n_cap: usize) -> Result<Vec<Graph>> {
    Ok(find_comatching_partners_batch(std::slice::from_ref(g), n_cap)?.remove(0))
}

/// Exact below the cap: a partner has `g`'s order, so the search covers
/// every candidate.
pub fn is_matching_unique(g: &Graph, n_cap: usize) -> Result<bool> {
    Ok(find_comatching_partners(g, n_cap)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilyDescriptor;
    use crate::matching::matching_vector_bruteforce;

    fn build(s: &str) -> Graph {
        s.parse::<crate::families::GraphExpr>().unwrap().to_graph().unwrap()
    }

    #[test]
    fn two_matchings_agree_with_brute_force() {
        for s in ["K_5", "S(3,5)", "L(2,2)", "K_{2,3} + K_2", "T(2,2)"] {
            let g = build(s);
            assert_eq!(BigUint::from(two_matchings(&g)), matching_vector_bruteforce(&g).unwrap().count(2), "{s}");
        }
    }

    #[test]
    fn known_partners() {
        let bowtie = FamilyDescriptor::Friendship { n: 2 }.build().unwrap();
        let found = find_comatching_partners(&bowtie, 9).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].is_isomorphic(&build("5.10")));

        let k = build("K(2,1;1)");
        let found = find_comatching_partners(&k, 9).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].is_isomorphic(&build("K_{1,1} + K_3")));

        assert!(is_matching_unique(&build("K_3"), 9).unwrap());
        assert!(!is_matching_unique(&build("S(2,3)"), 9).unwrap());
        assert!(!is_matching_unique(&build("L(1,2)"), 9).unwrap());
    }

    #[test]
    fn batch_matches_single_queries() {
        let targets: Vec<Graph> = ["S(2)", "S(3)", "L(1,2)", "K_3", "5.18 + K_1"].iter().map(|s| build(s)).collect();
        let batch = find_comatching_partners_batch(&targets, 9).unwrap();
        for (g, partners) in targets.iter().zip(&batch) {
            assert_eq!(&find_comatching_partners(g, 9).unwrap(), partners);
        }
    }

    #[test]
    fn respects_the_cap() {
        let g = build("F(4)");
        assert!(matches!(find_comatching_partners(&g, 8), Err(Error::OrderCap { order: 9, cap: 8 })));
    }
}
