//! Connected graphs with at most five distinct matching roots.
//!
//! Expected shape by root count: two roots only for `K_2`; three for stars
//! and `K_3`; four for non-star graphs of order 4; five for order-5
//! non-stars and the center-joined families S, T, K, K' and L.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{timed, VerificationReport, Witness};
use crate::enumerate::{enumerate_graphs, EnumSpec, MAX_ENUMERATION_ORDER};
use crate::error::{Error, Result};
use crate::families::{recognize_all, single_descriptors_of_order};
use crate::graph::Graph;
use crate::spectrum::distinct_matching_roots;

const BATCH: usize = 1 << 15;

fn is_star(g: &Graph) -> bool {
    let n = g.order();
    n >= 2 && g.edge_count() == n - 1 && (0..n).any(|u| g.degree(u) == n - 1)
}

/// Whether a connected graph with `z` distinct roots has the predicted
/// shape. Graphs with more than five roots are outside the claim.
fn fits(g: &Graph, z: usize) -> bool {
    let n = g.order();
    match z {
        1 => n == 1,
        2 => n == 2,
        3 => is_star(g) || (n == 3 && g.edge_count() == 3),
        4 => n == 4 && !is_star(g),
        5 => (n == 5 && !is_star(g)) || recognize_all(g).iter().any(|d| d.is_classification_family()),
        _ => true,
    }
}

pub fn verify_classification(n_max: usize) -> Result<VerificationReport> {
    if n_max > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderCap { order: n_max, cap: MAX_ENUMERATION_ORDER });
    }
    timed(|| {
        let mut report = VerificationReport::new("five-root-classification", format!("connected, n <= {n_max}"));
        let mut total = 0usize;
        for n in 1..=n_max {
            let mut stream = enumerate_graphs(EnumSpec::connected(n))?;
            let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
            let mut classes = 0usize;
            loop {
                let batch: Vec<Graph> = stream.by_ref().take(BATCH).collect();
                if batch.is_empty() {
                    break;
                }
                classes += batch.len();
                let verdicts: Vec<(usize, bool)> = batch
                    .par_iter()
                    .map(|g| {
                        let z = distinct_matching_roots(g);
                        (z, fits(g, z))
                    })
                    .collect();
                for (g, (z, ok)) in batch.iter().zip(verdicts) {
                    if z <= 5 {
                        *histogram.entry(z).or_default() += 1;
                    }
                    if !ok {
                        report.fail([Witness::labeled(g, format!("z={z}, order {n}, unexpected shape"))]);
                    }
                }
            }
            total += classes;
            let hist: Vec<String> = histogram.iter().map(|(z, c)| format!("z={z}: {c}")).collect();
            report.notes.push(format!("n={n}: {classes} connected classes; {}", hist.join(", ")));
        }
        report.notes.push(format!("{total} connected classes checked"));

        // Every family member within the cap has at most five roots.
        let mut members = 0usize;
        for n in 1..=n_max {
            for d in single_descriptors_of_order(n).into_iter().filter(|d| d.is_classification_family()) {
                let Ok(g) = d.build() else { continue };
                members += 1;
                let z = distinct_matching_roots(&g);
                if z > 5 {
                    report.fail([Witness::labeled(&g, format!("{d} has z={z}"))]);
                }
            }
        }
        report.notes.push(format!("{members} family members on at most {n_max} vertices all have z <= 5"));
        Ok(report)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Status;

    #[test]
    fn small_sweep_confirms() {
        let r = verify_classification(6).unwrap();
        assert_eq!(r.status, Status::Confirmed, "{r}");
        assert!(r.notes.iter().any(|n| n.starts_with("n=5: 21 connected classes")));
    }

    #[test]
    fn shapes() {
        let g = |s: &str| crate::families::parse_graph_input(s).unwrap();
        assert!(fits(&g("K_2"), 2));
        assert!(fits(&g("K_3"), 3));
        assert!(fits(&g("Star(4)"), 3));
        assert!(!fits(&g("K_4"), 3));
        assert!(fits(&g("T(2,3)"), 5));
        assert!(!fits(&g("K_{2,3} + K_1"), 4));
        assert!(verify_classification(11).is_err());
    }
}
