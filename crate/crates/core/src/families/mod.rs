//! Parametric families built by joining a center vertex to stars, isolated
//! vertices and triangles, with their closed-form matching polynomials.
//!
//! Vertex numbering for every construction: 0 is the center; the star
//! centers follow, then the leaves star by star, then the isolated
//! vertices, then the triangles.

mod parse;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

pub use parse::{parse_graph_input, Atom, GraphExpr};

use crate::appendix::appendix_label;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::poly::IntPoly;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum FamilyDescriptor {
    Complete { n: usize },
    CompleteBipartite { r: usize, s: usize },
    Star { k: usize },
    Friendship { n: usize },
    S { r: usize, s: usize },
    T { r: usize, k: usize },
    K { k: usize, t: usize, l: usize },
    KPrime { k: usize, t: usize, l: usize },
    L { t: usize, l: usize },
    GSet { r: usize, k: usize, t: usize, p: usize, q: usize },
    HSet { r: usize, s: usize, t: usize, p: usize, q: usize, l: usize },
}

use FamilyDescriptor as D;

/// How the center meets one star: through its center and/or some leaves.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct StarJoin {
    center: bool,
    leaves: usize,
}

impl FamilyDescriptor {
    pub fn is_set(&self) -> bool {
        matches!(self, D::GSet { .. } | D::HSet { .. })
    }

    /// True for the families named in the five-root classification.
    pub fn is_classification_family(&self) -> bool {
        matches!(self, D::S { .. } | D::Friendship { .. } | D::T { .. } | D::K { .. } | D::KPrime { .. } | D::L { .. })
    }

    fn invalid(&self, constraint: impl Into<String>) -> Error {
        Error::InvalidFamily { family: self.to_string(), constraint: constraint.into() }
    }

    /// Number of vertices of every graph the descriptor denotes.
    pub fn order(&self) -> usize {
        match *self {
            D::Complete { n } => n,
            D::CompleteBipartite { r, s } => r + s,
            D::Star { k } => k + 1,
            D::Friendship { n } => 2 * n + 1,
            D::S { r, .. } => 2 * r + 1,
            D::T { r, k } => r * (k + 1) + 1,
            D::K { k, t, .. } | D::KPrime { k, t, .. } => k + t + 2,
            D::L { t, .. } => t + 4,
            D::GSet { r, k, t, .. } => 1 + r * (k + 1) + t,
            D::HSet { r, s, t, .. } => 1 + 4 * r + t + 3 * s,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            D::Complete { n: 0 } => return Err(self.invalid("n >= 1")),
            D::CompleteBipartite { r, s } if r == 0 || s == 0 => return Err(self.invalid("r, s >= 1")),
            D::Friendship { n: 0 } => return Err(self.invalid("n >= 1")),
            D::S { r, s } if r == 0 || s < r || s > 2 * r => return Err(self.invalid("1 <= r <= s <= 2r")),
            D::T { r, k } if r == 0 || k == 0 => return Err(self.invalid("r, k >= 1")),
            D::K { k, l, .. } if k == 0 || l == 0 || l > k => return Err(self.invalid("1 <= l <= k")),
            D::KPrime { k, l, .. } if k == 0 || l > k => return Err(self.invalid("k >= 1 and l <= k")),
            D::L { l, .. } if !(1..=3).contains(&l) => return Err(self.invalid("l in {1,2,3}")),
            D::GSet { r, k, t, p, q } => {
                if r == 0 || k == 0 {
                    return Err(self.invalid("r, k >= 1"));
                }
                if p < r + t || p > r * (k + 1) + t || q > r {
                    return Err(self.invalid("r+t <= p <= r(k+1)+t and 0 <= q <= r"));
                }
            }
            D::HSet { r, s, t, p, q, l } => {
                if r + s == 0 {
                    return Err(self.invalid("r+s >= 1"));
                }
                if p < r + t || p > 4 * r + t || q > r {
                    return Err(self.invalid("r+t <= p <= 4r+t and 0 <= q <= r"));
                }
                if l < s || l > 3 * s {
                    return Err(self.invalid("s <= l <= 3s"));
                }
            }
            _ => {}
        }
        if self.order() > MAX_ORDER {
            return Err(Error::TooManyVertices(self.order()));
        }
        Ok(())
    }

    /// The graph a single-graph descriptor names. A set descriptor is
    /// accepted when it has exactly one member.
    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let join = |center, leaves| StarJoin { center, leaves };
        Ok(match *self {
            D::Complete { n } => Graph::complete(n)?,
            D::CompleteBipartite { r, s } => {
                Graph::from_edges(r + s, (0..r).flat_map(|i| (r..r + s).map(move |j| (i, j))))?
            }
            D::Star { k } => Graph::from_edges(k + 1, (1..=k).map(|v| (0, v)))?,
            D::Friendship { n } => D::S { r: n, s: 2 * n }.build()?,
            D::S { r, s } => {
                let doubled = s - r;
                let stars: Vec<StarJoin> = (0..r).map(|i| join(true, usize::from(i < doubled))).collect();
                assemble(r, 1, 0, &stars, &[])
            }
            D::T { r, k } => assemble(r, k, 0, &vec![join(true, 0); r], &[]),
            D::K { k, t, l } => assemble(1, k, t, &[join(false, l)], &[]),
            D::KPrime { k, t, l } => assemble(1, k, t, &[join(true, l)], &[]),
            D::L { t, l } => assemble(0, 3, t, &[], &[l]),
            D::GSet { .. } | D::HSet { .. } => {
                let members = self.members()?;
                if members.len() != 1 {
                    return Err(Error::NotSingleGraph(self.to_string(), members.len()));
                }
                members.into_iter().next().expect("one member")
            }
        })
    }

    /// Every graph the descriptor denotes, up to isomorphism, canonically
    /// labeled and sorted. Empty when the parameters admit no graph.
    pub fn members(&self) -> Result<Vec<Graph>> {
        self.validate()?;
        let (r, k, t, p, q, s, l) = match *self {
            D::GSet { r, k, t, p, q } => (r, k, t, p, q, 0, 0),
            D::HSet { r, s, t, p, q, l } => (r, 3, t, p, q, s, l),
            _ => return Ok(vec![self.build()?.canonical_graph()]),
        };
        let mut out = BTreeSet::new();
        if p < t + q {
            return Ok(Vec::new());
        }
        let leaf_edges = p - t - q;
        let joins: Vec<StarJoin> = [false, true]
            .into_iter()
            .flat_map(|c| (0..=k).map(move |leaves| StarJoin { center: c, leaves }))
            .filter(|j| j.center || j.leaves > 0)
            .collect();
        let mut star_choices = Vec::new();
        multisets(&joins, r, &mut Vec::new(), &mut |pick: &[StarJoin]| {
            let centers = pick.iter().filter(|j| j.center).count();
            let leaves: usize = pick.iter().map(|j| j.leaves).sum();
            if centers == q && leaves == leaf_edges {
                star_choices.push(pick.to_vec());
            }
        });
        let mut triangle_choices = Vec::new();
        multisets(&[1usize, 2, 3], s, &mut Vec::new(), &mut |pick: &[usize]| {
            if pick.iter().sum::<usize>() == l {
                triangle_choices.push(pick.to_vec());
            }
        });
        for stars in &star_choices {
            for tris in &triangle_choices {
                out.insert(assemble(r, k, t, stars, tris).canonical_graph());
            }
        }
        Ok(out.into_iter().collect())
    }

    /// The closed-form matching polynomial shared by every member.
    pub fn closed_form_mu(&self) -> Result<IntPoly> {
        self.validate()?;
        let z = |v: usize| v as i64;
        let x2 = IntPoly::x2_minus;
        Ok(match *self {
            D::Complete { n } => complete_mu(n),
            D::CompleteBipartite { r, s } => bipartite_mu(r, s),
            D::Star { k } => bipartite_mu(1, k),
            D::Friendship { n } => D::S { r: n, s: 2 * n }.closed_form_mu()?,
            D::S { r, s } => &(&IntPoly::x() * &x2(z(s) + 1)) * &x2(1).pow(r - 1),
            D::T { r, k } => {
                let body = &x2(z(r + k)) * &x2(z(k)).pow(r - 1);
                times_x_pow(&body, z(r * (k - 1) + 1))
            }
            D::K { k, t, l } => times_x_pow(&quartic(z(k + t + l), z((l + t) * (k - 1) + t)), z(k + t) - 2),
            D::KPrime { k, t, l } => {
                times_x_pow(&quartic(z(k + t + l + 1), z((l + t) * (k - 1) + t)), z(k + t) - 2)
            }
            D::L { t, l } => times_x_pow(&quartic(z(t + l + 3), z(3 * t + l)), z(t)),
            D::GSet { r, k, t, p, q } => {
                let body = &x2(z(k)).pow(r - 1) * &quartic(z(p + k), (z(p) - z(q)) * (z(k) - 1) + z(t));
                times_x_pow(&body, z(r * (k - 1) + t) - 1)
            }
            D::HSet { r, s, t, p, q, l } => {
                let c = 3 * z(t) + 2 * (z(p) - z(t) - z(q)) + z(l);
                let body = &x2(3).pow(r + s - 1) * &quartic(z(p + l + 3), c);
                times_x_pow(&body, z(2 * r + s + t) - 1)
            }
        })
    }
}

/// `x^4 - b x^2 + c`.
fn quartic(b: i64, c: i64) -> IntPoly {
    IntPoly::from_i64s(&[c, 0, -b, 0, 1])
}

fn times_x_pow(p: &IntPoly, e: i64) -> IntPoly {
    if e >= 0 {
        p.shift(e as usize)
    } else {
        p.unshift(e.unsigned_abs() as usize).expect("closed form divisible by the negative power of x")
    }
}

fn complete_mu(n: usize) -> IntPoly {
    // m(K_n, k) = n! / (k! (n-2k)! 2^k)
    let mut coeffs = vec![BigInt::from(0); n + 1];
    let mut m = BigInt::from(1);
    for k in 0..=n / 2 {
        coeffs[n - 2 * k] = if k % 2 == 0 { m.clone() } else { -m.clone() };
        if n >= 2 * k + 2 {
            m = m * BigInt::from((n - 2 * k) * (n - 2 * k - 1)) / BigInt::from(2 * (k + 1));
        }
    }
    IntPoly::from_coeffs(coeffs)
}

fn bipartite_mu(r: usize, s: usize) -> IntPoly {
    // m(K_{r,s}, k) = C(r,k) C(s,k) k!
    let mut coeffs = vec![BigInt::from(0); r + s + 1];
    let mut m = BigInt::from(1);
    for k in 0..=r.min(s) {
        coeffs[r + s - 2 * k] = if k % 2 == 0 { m.clone() } else { -m.clone() };
        m = m * BigInt::from((r - k) * (s - k)) / BigInt::from(k + 1);
    }
    IntPoly::from_coeffs(coeffs)
}

fn assemble(r: usize, k: usize, t: usize, stars: &[StarJoin], triangles: &[usize]) -> Graph {
    debug_assert_eq!(stars.len(), r);
    let n = 1 + r * (k + 1) + t + 3 * triangles.len();
    let mut edges = Vec::new();
    let leaf = |i: usize, j: usize| 1 + r + i * k + j;
    for (i, join) in stars.iter().enumerate() {
        let c = 1 + i;
        edges.extend((0..k).map(|j| (c, leaf(i, j))));
        if join.center {
            edges.push((0, c));
        }
        edges.extend((0..join.leaves).map(|j| (0, leaf(i, j))));
    }
    let iso = 1 + r * (k + 1);
    edges.extend((iso..iso + t).map(|v| (0, v)));
    for (j, &joined) in triangles.iter().enumerate() {
        let b = iso + t + 3 * j;
        edges.extend([(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
        edges.extend((0..joined).map(|i| (0, b + i)));
    }
    Graph::from_edges(n, edges).expect("family constructions stay within range")
}

/// Calls `f` on every non-decreasing selection of `len` items.
fn multisets<T: Copy>(items: &[T], len: usize, acc: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
    fn go<T: Copy>(items: &[T], from: usize, len: usize, acc: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
        if acc.len() == len {
            f(acc);
            return;
        }
        for i in from..items.len() {
            acc.push(items[i]);
            go(items, i, len, acc, f);
            acc.pop();
        }
    }
    go(items, 0, len, acc, f);
}

/// All single-graph descriptors whose graphs have exactly `n` vertices.
pub fn single_descriptors_of_order(n: usize) -> Vec<FamilyDescriptor> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    out.push(D::Complete { n });
    for r in 1..=n / 2 {
        out.push(D::CompleteBipartite { r, s: n - r });
    }
    out.push(D::Star { k: n - 1 });
    if n % 2 == 1 && n >= 3 {
        out.push(D::Friendship { n: (n - 1) / 2 });
        let r = (n - 1) / 2;
        out.extend((r..=2 * r).map(|s| D::S { r, s }));
    }
    for r in 1..n {
        if (n - 1).is_multiple_of(r) && (n - 1) / r >= 2 {
            out.push(D::T { r, k: (n - 1) / r - 1 });
        }
    }
    if n >= 3 {
        for k in 1..=n - 2 {
            let t = n - 2 - k;
            out.extend((1..=k).map(|l| D::K { k, t, l }));
            out.extend((0..=k).map(|l| D::KPrime { k, t, l }));
        }
    }
    if n >= 4 {
        out.extend((1..=3).map(|l| D::L { t: n - 4, l }));
    }
    out
}

type Table = HashMap<Graph, Vec<FamilyDescriptor>>;

fn table_for(n: usize) -> Arc<Table> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<Table>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.lock().expect("recognition tables lock").get(&n) {
        return Arc::clone(t);
    }
    let mut table: Table = HashMap::new();
    for d in single_descriptors_of_order(n) {
        if let Ok(g) = d.build() {
            table.entry(g.canonical_graph()).or_default().push(d);
        }
    }
    let table = Arc::new(table);
    tables.lock().expect("recognition tables lock").insert(n, Arc::clone(&table));
    table
}

/// Every single-graph descriptor whose graph is isomorphic to `g`.
pub fn recognize_all(g: &Graph) -> Vec<FamilyDescriptor> {
    if g.order() == 0 || g.order() > MAX_ORDER {
        return Vec::new();
    }
    table_for(g.order()).get(&g.canonical_graph()).cloned().unwrap_or_default()
}

pub fn recognize(g: &Graph) -> Option<FamilyDescriptor> {
    recognize_all(g).into_iter().next()
}

/// A readable name for `g` built from its components, largest first, e.g.
/// `K_{1,5} ∪ K_3` or `5.18 ∪ K_1`.
pub fn describe(g: &Graph) -> String {
    if g.order() == 0 {
        return "K_0".to_string();
    }
    let mut comps = g.connected_components();
    comps.sort_by_key(|c| std::cmp::Reverse((c.order(), c.edge_count())));
    let mut parts: Vec<(String, usize)> = Vec::new();
    for c in comps {
        let name = component_name(&c);
        match parts.last_mut() {
            Some((last, count)) if *last == name => *count += 1,
            _ => parts.push((name, 1)),
        }
    }
    parts
        .into_iter()
        .map(|(name, count)| if count == 1 { name } else { format!("{count}{name}") })
        .collect::<Vec<_>>()
        .join(" ∪ ")
}

fn component_name(c: &Graph) -> String {
    let found = recognize_all(c);
    let pick = |pred: fn(&FamilyDescriptor) -> bool| found.iter().find(|d| pred(d)).copied();
    if let Some(d) = pick(|d| matches!(d, D::Complete { .. } | D::CompleteBipartite { .. })) {
        return d.to_string();
    }
    if let Some(label) = appendix_label(c) {
        return label.to_string();
    }
    if let Some(d) = pick(|d| d.is_classification_family()) {
        return d.to_string();
    }
    c.to_string()
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            D::Complete { n } if n < 10 => write!(f, "K_{n}"),
            D::Complete { n } => write!(f, "K_{{{n}}}"),
            D::CompleteBipartite { r, s } => write!(f, "K_{{{r},{s}}}"),
            D::Star { k } => write!(f, "Star({k})"),
            D::Friendship { n } => write!(f, "F({n})"),
            D::S { r, s } => write!(f, "S({r},{s})"),
            D::T { r, k } => write!(f, "T({r},{k})"),
            D::K { k, t, l } => write!(f, "K({k},{t};{l})"),
            D::KPrime { k, t, l } => write!(f, "K'({k},{t};{l})"),
            D::L { t, l } => write!(f, "L({t},{l})"),
            D::GSet { r, k, t, p, q } => write!(f, "G(r={r},k={k},t={t},p={p},q={q})"),
            D::HSet { r, s, t, p, q, l } => write!(f, "H(r={r},s={s},t={t},p={p},q={q},l={l})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::matching_polynomial;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn builds() {
        let f2 = D::Friendship { n: 2 }.build().unwrap();
        assert_eq!((f2.order(), f2.edge_count()), (5, 6));
        assert_eq!(matching_polynomial(&f2), p("x^5-6x^3+5x"));
        let t23 = D::T { r: 2, k: 3 }.build().unwrap();
        assert_eq!((t23.order(), t23.edge_count()), (9, 8));
        let l11 = D::L { t: 1, l: 1 }.build().unwrap();
        assert_eq!(l11.order(), 5);
        assert_eq!(matching_polynomial(&l11), p("x^5-5x^3+4x"));
        let s24 = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]).unwrap();
        assert!(f2.is_isomorphic(&s24));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(D::S { r: 3, s: 5 }.closed_form_mu().unwrap(), p("x^7-8x^5+13x^3-6x"));
        assert_eq!(D::K { k: 2, t: 1, l: 1 }.closed_form_mu().unwrap(), p("x^5-4x^3+3x"));
        assert_eq!(D::L { t: 2, l: 1 }.closed_form_mu().unwrap(), p("x^6-6x^4+7x^2"));
        assert_eq!(D::Complete { n: 4 }.closed_form_mu().unwrap(), p("x^4-6x^2+3"));
        assert_eq!(D::CompleteBipartite { r: 2, s: 3 }.closed_form_mu().unwrap(), p("x^5-6x^3+6x"));
        assert_eq!(D::Star { k: 0 }.closed_form_mu().unwrap(), p("x"));
        assert_eq!(D::Complete { n: 1 }.closed_form_mu().unwrap(), p("x"));
    }

    #[test]
    fn validation_reports_the_constraint() {
        let err = D::S { r: 2, s: 5 }.validate().unwrap_err();
        assert!(matches!(err, Error::InvalidFamily { ref constraint, .. } if constraint.contains("s <= 2r")));
        assert!(D::L { t: 1, l: 4 }.build().is_err());
        assert!(D::K { k: 2, t: 0, l: 0 }.build().is_err());
        assert!(D::GSet { r: 1, k: 2, t: 0, p: 4, q: 0 }.validate().is_err());
        assert!(D::HSet { r: 0, s: 1, t: 0, p: 0, q: 0, l: 4 }.validate().is_err());
    }

    #[test]
    fn set_members() {
        let path = D::GSet { r: 1, k: 1, t: 0, p: 1, q: 1 }.members().unwrap();
        assert_eq!(path.len(), 1);
        assert!(path[0].is_isomorphic(&D::S { r: 1, s: 1 }.build().unwrap()));
        for (k, t, l) in [(1, 0, 1), (2, 1, 1), (3, 2, 2), (4, 0, 4)] {
            let set = D::GSet { r: 1, k, t, p: l + t, q: 0 };
            assert_eq!(set.members().unwrap().len(), 1, "{set}");
        }
        let g = D::GSet { r: 2, k: 3, t: 1, p: 4, q: 1 };
        let expected = &(&p("x").pow(4) * &p("x^2-3")) * &p("x^4-7x^2+7");
        assert_eq!(g.closed_form_mu().unwrap(), expected);
        let members = g.members().unwrap();
        assert!(members.len() > 1);
        assert!(members.iter().all(|m| matching_polynomial(m) == expected));
        assert!(matches!(g.build(), Err(Error::NotSingleGraph(_, _))));
        // Parameters satisfying the inequalities but admitting no connected graph.
        assert!(D::GSet { r: 2, k: 2, t: 0, p: 2, q: 0 }.members().unwrap().len() == 1);
    }

    #[test]
    fn k_and_k_prime_symmetry() {
        for k in 1..=5 {
            for t in 0..=4 {
                for l in 1..=k {
                    let a = D::K { k, t, l }.build().unwrap();
                    let b = D::K { k: l + t, t: k - l, l }.build().unwrap();
                    assert!(a.is_isomorphic(&b), "K({k},{t};{l})");
                    let a = D::KPrime { k, t, l }.build().unwrap();
                    let b = D::KPrime { k: l + t, t: k - l, l }.build().unwrap();
                    assert!(a.is_isomorphic(&b), "K'({k},{t};{l})");
                }
            }
        }
    }

    #[test]
    fn recognition() {
        let s22 = D::S { r: 2, s: 2 }.build().unwrap();
        assert!(recognize_all(&s22).contains(&D::S { r: 2, s: 2 }));
        let k3 = Graph::complete(3).unwrap();
        let found = recognize_all(&k3);
        assert!(found.contains(&D::Friendship { n: 1 }));
        assert!(found.contains(&D::Complete { n: 3 }));
        let k = D::K { k: 4, t: 1, l: 2 }.build().unwrap();
        assert!(recognize_all(&k).contains(&D::K { k: 3, t: 2, l: 2 }));
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(recognize_all(&c5).iter().all(|d| !d.is_classification_family()));
    }

    #[test]
    fn descriptions() {
        let g = D::Star { k: 5 }.build().unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(describe(&g), "K_{1,5} ∪ K_3");
        let g = crate::appendix::appendix_row("5.18").unwrap().graph().with_isolated(2).unwrap();
        assert_eq!(describe(&g), "5.18 ∪ 2K_1");
        let g = D::KPrime { k: 5, t: 0, l: 5 }.build().unwrap();
        assert_eq!(describe(&g), "K'(5,0;5)");
    }
}
