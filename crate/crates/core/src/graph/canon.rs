//! Canonical labeling by partition refinement and backtracking.
//!
//! The search tree individualizes vertices of the first non-singleton cell of
//! an equitable ordered partition. Each leaf is a vertex ordering; the leaf
//! whose relabeled adjacency bit-string is lexicographically smallest wins.
//! Automorphisms discovered at equivalent leaves prune sibling branches
//! (orbit pruning) and let the search jump back to the point where the
//! current path left the first path.

use super::{bit, bits, full_mask, Graph};

/// Canonical form of a graph: its order plus the upper triangle of the
/// canonically relabeled adjacency matrix, row-major, packed MSB-first.
///
/// Two graphs have equal labels iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalLabel {
    n: usize,
    bytes: Vec<u8>,
}

impl CanonicalLabel {
    pub(crate) fn of_canonical_graph(g: &Graph) -> CanonicalLabel {
        let n = g.order();
        let nbits = n * n.saturating_sub(1) / 2;
        let mut bytes = vec![0u8; nbits.div_ceil(8)];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(i, j) {
                    bytes[k / 8] |= 0x80 >> (k % 8);
                }
                k += 1;
            }
        }
        CanonicalLabel { n, bytes }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Rebuilds the canonical graph this label describes.
    pub fn to_graph(&self) -> Graph {
        let mut adj = vec![0u64; self.n];
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.bytes[k / 8] & (0x80 >> (k % 8)) != 0 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
                k += 1;
            }
        }
        Graph::from_rows(self.n, adj)
    }

    /// Lowercase hex of the order byte followed by the packed bits.
    pub fn to_hex(&self) -> String {
        let mut s = format!("{:02x}", self.n);
        for b in &self.bytes {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }
}

/// Splits every cell of `cells` by neighbour counts until the ordered
/// partition is equitable. Sub-cells are ordered by increasing count, so
/// the result depends only on the graph up to relabeling.
fn refine(adj: &[u64], cells: &mut Vec<u64>, scratch: &mut Vec<u64>) {
    let mut buckets = [0u64; 65];
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            scratch.clear();
            for &cell in cells.iter() {
                if cell & (cell - 1) == 0 {
                    scratch.push(cell);
                    continue;
                }
                let mut lo = usize::MAX;
                let mut hi = 0;
                for v in bits(cell) {
                    let c = (adj[v] & splitter).count_ones() as usize;
                    buckets[c] |= bit(v);
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    buckets[lo] = 0;
                    scratch.push(cell);
                    continue;
                }
                changed = true;
                for b in buckets.iter_mut().take(hi + 1).skip(lo) {
                    if *b != 0 {
                        scratch.push(*b);
                        *b = 0;
                    }
                }
            }
            std::mem::swap(cells, scratch);
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Leaf {
    order: Vec<usize>,
    rows: Vec<u64>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    first_path: Vec<usize>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

enum Outcome {
    Continue,
    /// Return to the node whose prefix has this length.
    JumpTo(usize),
}

impl<'a> Search<'a> {
    /// Relabeled rows for a vertex ordering; bit `63 - j` marks column `j`,
    /// so lexicographic order on rows is lexicographic order on the
    /// row-major upper-triangle bit-string.
    fn leaf_rows(&self, order: &[usize]) -> Vec<u64> {
        let mut pos = [0usize; 64];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        order
            .iter()
            .map(|&v| bits(self.adj[v]).fold(0u64, |acc, w| acc | (1u64 << (63 - pos[w]))))
            .collect()
    }

    fn automorphism_between(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let mut perm = vec![0; self.n];
        for (x, y) in a.iter().zip(b) {
            perm[*x] = *y;
        }
        perm
    }

    fn visit(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Outcome {
        let target = cells.iter().position(|c| c & (c - 1) != 0);
        let Some(ti) = target else {
            return self.leaf(&cells, path);
        };
        let cell = cells[ti];
        let mut explored: Vec<usize> = Vec::new();
        let mut scratch = Vec::with_capacity(self.n);
        for w in bits(cell) {
            if !explored.is_empty() && self.same_orbit(path, &explored, w) {
                continue;
            }
            explored.push(w);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(bit(w));
            child.push(cell & !bit(w));
            child.extend_from_slice(&cells[ti + 1..]);
            refine(self.adj, &mut child, &mut scratch);
            path.push(w);
            let out = self.visit(child, path);
            path.pop();
            if let Outcome::JumpTo(level) = out {
                if level < path.len() {
                    return out;
                }
            }
        }
        Outcome::Continue
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Outcome {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let rows = self.leaf_rows(&order);
        let Some(first) = &self.first else {
            self.first = Some(Leaf { order: order.clone(), rows: rows.clone() });
            self.best = Some(Leaf { order, rows });
            self.first_path = path.to_vec();
            return Outcome::Continue;
        };
        if rows == first.rows {
            let a = self.automorphism_between(&first.order, &order);
            self.automorphisms.push(a);
            let common = self
                .first_path
                .iter()
                .zip(path)
                .take_while(|(x, y)| x == y)
                .count();
            return Outcome::JumpTo(common);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match rows.cmp(&best.rows) {
            std::cmp::Ordering::Less => self.best = Some(Leaf { order, rows }),
            std::cmp::Ordering::Equal => {
                let a = self.automorphism_between(&best.order, &order);
                self.automorphisms.push(a);
            }
            std::cmp::Ordering::Greater => {}
        }
        Outcome::Continue
    }

    /// Whether `w` shares an orbit with an explored sibling under the group
    /// generated by the known automorphisms fixing `path` pointwise.
    fn same_orbit(&self, path: &[usize], explored: &[usize], w: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.automorphisms {
            if path.iter().any(|&v| a[v] != v) {
                continue;
            }
            any = true;
            for v in 0..self.n {
                let (x, y) = (find(&mut parent, v), find(&mut parent, a[v]));
                if x != y {
                    parent[x] = y;
                }
            }
        }
        if !any {
            return false;
        }
        let rw = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == rw)
    }
}

/// Canonical vertex ordering: position `i` of the result holds the vertex
/// that receives canonical label `i`.
pub(crate) fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let adj = g.rows();
    let mut cells = vec![full_mask(n)];
    let mut scratch = Vec::with_capacity(n);
    refine(adj, &mut cells, &mut scratch);
    let mut search = Search {
        adj,
        n,
        first: None,
        first_path: Vec::new(),
        best: None,
        automorphisms: Vec::new(),
    };
    let mut path = Vec::new();
    search.visit(cells, &mut path);
    search.best.expect("search reaches at least one leaf").order
}

/// The ordered equitable partition of the whole vertex set.
pub(crate) fn root_partition(g: &Graph) -> Vec<u64> {
    let mut cells = vec![full_mask(g.order())];
    if g.order() > 0 {
        let mut scratch = Vec::new();
        refine(g.rows(), &mut cells, &mut scratch);
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    fn shuffled(rng: &mut ChaCha8Rng, g: &Graph) -> Graph {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(rng);
        g.relabel(&perm)
    }

    #[test]
    fn invariant_under_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=14);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            let h = shuffled(&mut rng, &g);
            assert_eq!(g.canonical_form(), h.canonical_form(), "{g:?}");
        }
    }

    #[test]
    fn idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let g = random_graph(&mut rng, 9, 0.4);
            let c = g.canonical_graph();
            assert_eq!(c.canonical_graph(), c);
            assert_eq!(g.canonical_form().to_graph(), c);
        }
    }

    #[test]
    fn symmetric_graphs_finish() {
        // Large automorphism groups: edgeless, complete, stars, matchings.
        for n in [1, 5, 20, 64] {
            let e = Graph::empty(n).unwrap();
            assert_eq!(e.canonical_graph(), e);
            let k = Graph::complete(n).unwrap();
            assert_eq!(k.canonical_graph(), k);
        }
        let star = Graph::from_edges(40, (1..40).map(|v| (0, v))).unwrap();
        let c = star.canonical_graph();
        assert_eq!(c.degree_sequence(), star.degree_sequence());
        let matching = Graph::from_edges(60, (0..30).map(|i| (2 * i, 2 * i + 1))).unwrap();
        let m2 = Graph::from_edges(60, (0..30).map(|i| (i, 59 - i))).unwrap();
        assert!(matching.is_isomorphic(&m2));
    }

    #[test]
    fn distinguishes_cospectral_like_pairs() {
        // C6 versus two triangles: both 2-regular on six vertices.
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let tt = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!c6.is_isomorphic(&tt));
        assert_ne!(c6.canonical_form(), tt.canonical_form());
    }

    #[test]
    fn label_round_trip_and_hex() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let l = g.canonical_form();
        assert_eq!(l.order(), 3);
        assert!(l.to_graph().is_isomorphic(&g));
        assert_eq!(l.to_hex().len(), 2 + 2 * l.bytes().len());
    }
}
