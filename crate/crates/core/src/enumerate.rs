//! Isomorph-free generation by canonical augmentation.
//!
//! A graph on `n` vertices is produced from the canonical graph of
//! `G - w`, where `w` is the vertex that receives the last canonical label
//! of `G`. Each parent tries every neighbourhood for the new vertex in
//! increasing bitmask order and keeps a child when deleting its last
//! canonical vertex gives back the parent; duplicates among the children of
//! one parent are dropped by canonical form. Output is canonically labeled
//! and its order does not depend on the number of threads.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{bit, canonical_order, full_mask, root_partition, Graph};

pub const MAX_ENUMERATION_ORDER: usize = 10;

/// Parents handed to the thread pool at a time by [`GraphStream`].
const CHUNK: usize = 512;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EnumSpec {
    pub n: usize,
    pub connected_only: bool,
    pub edge_count: Option<usize>,
}

impl EnumSpec {
    pub fn all(n: usize) -> EnumSpec {
        EnumSpec { n, connected_only: false, edge_count: None }
    }

    pub fn connected(n: usize) -> EnumSpec {
        EnumSpec { n, connected_only: true, edge_count: None }
    }

    pub fn with_edges(self, m: usize) -> EnumSpec {
        EnumSpec { edge_count: Some(m), ..self }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidSpec("order must be at least 1".into()));
        }
        if self.n > MAX_ENUMERATION_ORDER {
            return Err(Error::OrderCap { order: self.n, cap: MAX_ENUMERATION_ORDER });
        }
        Ok(())
    }
}

/// Which final edge counts are wanted, indexed by edge count.
#[derive(Clone, Debug)]
struct Plan {
    n: usize,
    connected: bool,
    wanted: Vec<bool>,
    lo: usize,
    hi: usize,
}

impl Plan {
    fn new(n: usize, connected: bool, edges: Option<&[usize]>) -> Plan {
        let max = n * (n - 1) / 2;
        let mut wanted = vec![edges.is_none(); max + 1];
        if let Some(es) = edges {
            for &m in es {
                if m <= max {
                    wanted[m] = true;
                }
            }
        }
        // A connected graph needs at least n - 1 edges.
        if connected {
            for w in wanted.iter_mut().take(n.saturating_sub(1)) {
                *w = false;
            }
        }
        let lo = wanted.iter().position(|&w| w).unwrap_or(max + 1);
        let hi = wanted.iter().rposition(|&w| w).unwrap_or(0);
        Plan { n, connected, wanted, lo, hi }
    }

    fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    /// Whether a graph on `order` vertices with `e` edges can still grow
    /// into a wanted final edge count.
    fn viable(&self, order: usize, e: usize) -> bool {
        let room: usize = (order..self.n).sum();
        e <= self.hi && e + room >= self.lo
    }
}

/// Canonical children of a canonical parent on one more vertex.
fn children(parent: &Graph, final_level: bool, plan: &Plan) -> Vec<Graph> {
    let k = parent.order();
    let e = parent.edge_count();
    let degrees: Vec<usize> = (0..k).map(|u| parent.degree(u)).collect();
    let components = if final_level && plan.connected { parent.component_masks() } else { Vec::new() };
    let mut rows = parent.rows().to_vec();
    rows.push(0);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in 0..(1u64 << k) {
        let d = s.count_ones() as usize;
        let keep = if final_level { plan.wanted[e + d] } else { plan.viable(k + 1, e + d) };
        if !keep {
            continue;
        }
        // The last canonical vertex lies in the last root cell, which holds
        // exactly the vertices of maximum degree.
        if (0..k).any(|u| degrees[u] + usize::from(s & bit(u) != 0) > d) {
            continue;
        }
        if components.iter().any(|&c| c & s == 0) {
            continue;
        }
        for u in 0..k {
            rows[u] = parent.rows()[u] | if s & bit(u) != 0 { bit(k) } else { 0 };
        }
        rows[k] = s;
        let g = Graph::from_rows(k + 1, rows.clone());
        let cells = root_partition(&g);
        if cells.last().is_some_and(|&c| c & bit(k) == 0) {
            continue;
        }
        let order = canonical_order(&g);
        let w = order[k];
        if w != k && g.delete_vertex(w).expect("vertex in range").canonical_graph() != *parent {
            continue;
        }
        let mut perm = vec![0; k + 1];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        let canon = g.relabel(&perm);
        if seen.insert(canon.clone()) {
            out.push(canon);
        }
    }
    out
}

/// All canonical graphs on `order` vertices that can still reach the plan.
fn level(order: usize, plan: &Plan) -> Vec<Graph> {
    let mut current = vec![Graph::empty(1).expect("order 1")];
    for _ in 1..order {
        current = current
            .par_iter()
            .flat_map_iter(|p| children(p, false, plan))
            .collect();
    }
    current
}

/// Streaming output of an enumeration. Parents of the final level are kept
/// in memory; children are produced one chunk of parents at a time.
pub struct GraphStream {
    plan: Plan,
    parents: Vec<Graph>,
    next_parent: usize,
    buffer: std::vec::IntoIter<Graph>,
    pending_single: Option<Graph>,
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if let Some(g) = self.pending_single.take() {
            return Some(g);
        }
        loop {
            if let Some(g) = self.buffer.next() {
                return Some(g);
            }
            if self.next_parent >= self.parents.len() {
                return None;
            }
            let end = (self.next_parent + CHUNK).min(self.parents.len());
            let plan = &self.plan;
            let batch: Vec<Graph> = self.parents[self.next_parent..end]
                .par_iter()
                .flat_map_iter(|p| children(p, true, plan))
                .collect();
            self.next_parent = end;
            self.buffer = batch.into_iter();
        }
    }
}

fn stream_for(plan: Plan) -> GraphStream {
    let empty = GraphStream {
        plan: plan.clone(),
        parents: Vec::new(),
        next_parent: 0,
        buffer: Vec::new().into_iter(),
        pending_single: None,
    };
    if plan.is_empty() {
        return empty;
    }
    if plan.n == 1 {
        let single = plan.wanted[0].then(|| Graph::empty(1).expect("order 1"));
        return GraphStream { pending_single: single, ..empty };
    }
    let parents = level(plan.n - 1, &plan);
    GraphStream { parents, ..empty }
}

/// One canonically labeled representative of every isomorphism class
/// matching `spec`, in a deterministic order.
pub fn enumerate_graphs(spec: EnumSpec) -> Result<GraphStream> {
    spec.validate()?;
    let edges = spec.edge_count.map(|m| vec![m]);
    Ok(stream_for(Plan::new(spec.n, spec.connected_only, edges.as_deref())))
}

/// Like [`enumerate_graphs`] with any of several edge counts; one pass over
/// the parent level serves all of them.
pub fn enumerate_with_edge_counts(n: usize, connected_only: bool, edges: &[usize]) -> Result<GraphStream> {
    EnumSpec { n, connected_only, edge_count: None }.validate()?;
    Ok(stream_for(Plan::new(n, connected_only, Some(edges))))
}

pub fn count_graphs(spec: EnumSpec) -> Result<u64> {
    Ok(enumerate_graphs(spec)?.count() as u64)
}

/// Groups the enumeration by `key`; groups are ordered by key and members
/// keep enumeration order.
pub fn enumerate_with_invariant<K, F>(spec: EnumSpec, key: F) -> Result<BTreeMap<K, Vec<Graph>>>
where
    K: Ord + Send,
    F: Fn(&Graph) -> K + Sync,
{
    let graphs: Vec<Graph> = enumerate_graphs(spec)?.collect();
    let keys: Vec<K> = graphs.par_iter().map(&key).collect();
    let mut groups: BTreeMap<K, Vec<Graph>> = BTreeMap::new();
    for (k, g) in keys.into_iter().zip(graphs) {
        groups.entry(k).or_default().push(g);
    }
    Ok(groups)
}

/// Reduces every labeled graph on `n` vertices by canonical form; an
/// independent oracle for the class counts. Returns `(all, connected)`.
pub fn labeled_class_counts(n: usize) -> Result<(u64, u64)> {
    if n == 0 || n > 7 {
        return Err(Error::InvalidSpec(format!("labeled oracle supports 1..=7 vertices, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let classes: HashSet<Graph> = (0u64..1 << pairs.len())
        .into_par_iter()
        .map(|mask| {
            let mut rows = vec![0u64; n];
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask & bit(b) != 0 {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
            }
            Graph::from_rows(n, rows).canonical_graph()
        })
        .collect();
    let connected = classes.iter().filter(|g| g.is_connected()).count() as u64;
    debug_assert!(classes.iter().all(|g| g.rows().iter().all(|r| r & !full_mask(n) == 0)));
    Ok((classes.len() as u64, connected))
}
