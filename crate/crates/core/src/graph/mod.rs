//! Simple undirected graphs on at most 64 vertices.
//!
//! Each adjacency row is a single `u64`, so neighbourhood intersections and
//! component searches are word operations. Graphs are immutable values: every
//! operation returns a new graph.

mod canon;
mod graph6;

use std::fmt;

pub use canon::CanonicalLabel;
pub(crate) use canon::{canonical_order, root_partition};
pub use graph6::{read_graph6_stream, write_graph6_stream};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the indices of the set bits of `mask`, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows. Rows must already be symmetric and loop-free.
    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Graph {
        debug_assert_eq!(adj.len(), n);
        debug_assert!((0..n).all(|u| adj[u] & bit(u) == 0 && adj[u] & !full_mask(n) == 0));
        debug_assert!((0..n).all(|u| bits(adj[u]).all(|v| adj[v] & bit(u) != 0)));
        Graph { n, adj }
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            g.adj[u] = full_mask(n) & !bit(u);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Neighbourhood of `u` as a bitset.
    pub fn neighbors(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u >= self.n {
            Err(Error::VertexOutOfRange { vertex: u, order: self.n })
        } else {
            Ok(())
        }
    }

    /// Subgraph induced by the vertices in `mask`, renumbered in increasing index order.
    pub(crate) fn induced(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = bits(mask & full_mask(self.n)).collect();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| bits(self.adj[v] & mask).fold(0u64, |acc, w| acc | bit(pos[w])))
            .collect();
        Graph::from_rows(keep.len(), adj)
    }

    /// Removes `u`; vertices above `u` shift down by one.
    pub fn delete_vertex(&self, u: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        Ok(self.induced(full_mask(self.n) & !bit(u)))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        Ok(g)
    }

    /// Removes both endpoints of the edge `{u, v}`.
    pub fn delete_edge_ends(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(self.induced(full_mask(self.n) & !bit(u) & !bit(v)))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        let shift = self.n;
        let adj = self
            .adj
            .iter()
            .copied()
            .chain(other.adj.iter().map(|&r| r << shift))
            .collect();
        Ok(Graph::from_rows(n, adj))
    }

    /// Union with `t` isolated vertices.
    pub fn with_isolated(&self, t: usize) -> Result<Graph> {
        self.disjoint_union(&Graph::empty(t)?)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        component_masks_within(&self.adj, full_mask(self.n))
    }

    pub fn connected_components(&self) -> Vec<Graph> {
        self.component_masks()
            .into_iter()
            .map(|m| self.induced(m))
            .collect()
    }

    /// True for the graph on one vertex; false for the null graph.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_masks().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_masks().len() == self.n
    }

    /// Applies the relabeling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            adj[perm[u]] = bits(self.adj[u]).fold(0u64, |acc, w| acc | bit(perm[w]));
        }
        Graph::from_rows(self.n, adj)
    }

    /// The canonically relabeled copy of this graph.
    pub fn canonical_graph(&self) -> Graph {
        let order = canonical_order(self);
        let mut perm = vec![0; self.n];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        self.relabel(&perm)
    }

    pub fn canonical_form(&self) -> CanonicalLabel {
        CanonicalLabel::of_canonical_graph(&self.canonical_graph())
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n
            || self.edge_count() != other.edge_count()
            || self.degree_sequence() != other.degree_sequence()
        {
            return false;
        }
        self.canonical_graph() == other.canonical_graph()
    }
}

pub(crate) fn component_masks_within(adj: &[u64], mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= adj[v];
            }
            next &= mask & !comp;
            comp |= next;
            frontier = next;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Displays the graph6 encoding.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_graph6() {
            Ok(s) => f.write_str(&s),
            Err(_) => write!(f, "{self:?}"),
        }
    }
}
