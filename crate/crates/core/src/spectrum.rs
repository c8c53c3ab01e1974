//! Root structure of matching polynomials: distinct-root counts, exact root
//! summaries, interlacing, and root multiplicities tracked across graphs.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::matching_polynomial;
use crate::poly::{
    cauchy_bound, distinct_real_root_count, gcd, isolate_real_roots, refine_root, squarefree_decomposition, squarefree_part, IntPoly,
    RationalInterval, SturmChain,
};

/// A real algebraic number carried as a square-free integer polynomial with
/// exactly one root in `interval` (or the rational point itself).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootHandle {
    factor: IntPoly,
    interval: RationalInterval,
}

impl RootHandle {
    pub fn new(factor: IntPoly, interval: RationalInterval) -> Result<RootHandle> {
        if factor.is_constant() {
            return Err(Error::InvalidHandle("certifying factor must have positive degree".into()));
        }
        let chain = SturmChain::new(&factor)?;
        if chain.count_in(&interval) != 1 {
            return Err(Error::InvalidHandle(format!("{interval} does not isolate exactly one root of {factor}")));
        }
        Ok(RootHandle { factor: factor.primitive(), interval })
    }

    /// The handle of a rational number `r`, certified by `bx - a` for `r = a/b`.
    pub fn rational(r: BigRational) -> RootHandle {
        let factor = IntPoly::from_coeffs(vec![-r.numer().clone(), r.denom().clone()]);
        RootHandle { factor, interval: RationalInterval::point(r) }
    }

    pub fn integer(k: i64) -> RootHandle {
        RootHandle::rational(BigRational::from_integer(k.into()))
    }

    pub fn factor(&self) -> &IntPoly {
        &self.factor
    }

    pub fn interval(&self) -> &RationalInterval {
        &self.interval
    }

    pub fn approx(&self) -> f64 {
        if self.interval.is_point() {
            return self.interval.approx();
        }
        let width = BigRational::new(1.into(), BigInt::from(10u64).pow(12));
        refine_root(&self.factor, &self.interval, &width).map_or(f64::NAN, |iv| iv.approx())
    }
}

impl fmt::Display for RootHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in {}", self.factor, self.interval)
    }
}

/// Exact description of the matching roots of a graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSummary {
    order: usize,
    mu: IntPoly,
    zero_mult: usize,
    squarefree: IntPoly,
    roots: Vec<(RationalInterval, usize)>,
    handles: Vec<RootHandle>,
}

impl RootSummary {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn polynomial(&self) -> &IntPoly {
        &self.mu
    }

    pub fn zero_multiplicity(&self) -> usize {
        self.zero_mult
    }

    pub fn squarefree(&self) -> &IntPoly {
        &self.squarefree
    }

    /// `z(G)`, the number of distinct roots.
    pub fn distinct_roots(&self) -> usize {
        self.roots.len()
    }

    /// Isolating intervals in ascending order with multiplicities.
    pub fn roots(&self) -> &[(RationalInterval, usize)] {
        &self.roots
    }

    /// One handle per distinct root, aligned with [`RootSummary::roots`].
    pub fn handles(&self) -> &[RootHandle] {
        &self.handles
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.roots.iter().map(|(_, m)| *m).collect()
    }

    /// The multiset of roots, e.g. `{0, (±1)^2, ±√6}`; irrational roots
    /// other than square roots of integers are shown as decimals.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        if self.zero_mult > 0 {
            parts.push(with_power("0".to_string(), self.zero_mult, false));
        }
        for (i, (iv, m)) in self.roots.iter().enumerate() {
            if iv.hi() <= &BigRational::zero() {
                continue;
            }
            let body = format!("±{}", self.describe_positive(i));
            parts.push(with_power(body, *m, true));
        }
        format!("{{{}}}", parts.join(", "))
    }

    fn describe_positive(&self, i: usize) -> String {
        let (iv, _) = &self.roots[i];
        if iv.is_point() {
            let r = iv.lo();
            return if r.is_integer() { r.numer().to_string() } else { format!("{}/{}", r.numer(), r.denom()) };
        }
        let approx = self.handles[i].approx();
        if let Some(c) = (approx * approx).round().to_i64().filter(|&c| c > 0) {
            let q = IntPoly::x2_minus(c);
            if SturmChain::new(&q).is_ok_and(|ch| ch.count_in(iv) == 1) && q.divides(&self.mu) {
                return format!("√{c}");
            }
        }
        format!("{approx:.6}")
    }
}

fn with_power(body: String, m: usize, signed: bool) -> String {
    match (m, signed) {
        (1, _) => body,
        (_, true) => format!("({body})^{m}"),
        (_, false) => format!("{body}^{m}"),
    }
}

impl fmt::Display for RootSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z={} zero_mult={} R={}", self.distinct_roots(), self.zero_mult, self.render())
    }
}

/// Square-free factors certifying each root: a rational root `a/b` gets
/// `bx - a`; an irrational root gets its Yun factor with the rational
/// linear factors divided out.
fn handles_for(p: &IntPoly, roots: &[(RationalInterval, usize)]) -> Result<Vec<RootHandle>> {
    let yun = squarefree_decomposition(p)?;
    let mut irrational_parts: Vec<IntPoly> = yun.clone();
    for (iv, m) in roots {
        if iv.is_point() {
            let lin = RootHandle::rational(iv.lo().clone()).factor;
            let f = &mut irrational_parts[m - 1];
            *f = f.div_exact(&lin).expect("rational root divides its Yun factor").primitive();
        }
    }
    roots
        .iter()
        .map(|(iv, m)| {
            if iv.is_point() {
                Ok(RootHandle::rational(iv.lo().clone()))
            } else {
                RootHandle::new(irrational_parts[m - 1].clone(), iv.clone())
            }
        })
        .collect()
}

/// Root summary of an arbitrary nonzero polynomial whose roots are all real.
pub fn summarize_polynomial(p: &IntPoly, order: usize) -> Result<RootSummary> {
    let roots = isolate_real_roots(p)?;
    let handles = handles_for(p, &roots)?;
    Ok(RootSummary {
        order,
        mu: p.clone(),
        zero_mult: p.trailing_zeros(),
        squarefree: squarefree_part(p)?,
        roots,
        handles,
    })
}

pub fn root_summary(g: &Graph) -> Result<RootSummary> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    summarize_polynomial(&matching_polynomial(g), g.order())
}

/// `z(G)` by a Sturm count over the Cauchy bound; zero for the null graph.
pub fn distinct_matching_roots(g: &Graph) -> usize {
    distinct_real_root_count(&matching_polynomial(g)).expect("matching polynomials are nonzero")
}

/// Whether the roots of `inner` interlace those of `outer` when both are
/// sorted with multiplicity: `θ_1 ≥ η_1 ≥ θ_2 ≥ ... ≥ η_{n-1} ≥ θ_n`.
/// Requires `deg inner = deg outer - 1` and all roots real.
pub fn interlaces_polys(outer: &IntPoly, inner: &IntPoly) -> Result<bool> {
    let (Some(n), Some(m)) = (outer.degree(), inner.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if m + 1 != n {
        return Ok(false);
    }
    // Isolate the roots of both polynomials at once, then look up each
    // root's multiplicity in either polynomial through its Yun factors.
    let joint = isolate_real_roots(&squarefree_part(&(outer * inner))?)?;
    let mult_in = |p: &IntPoly| -> Result<Vec<usize>> {
        let chains: Vec<SturmChain> = squarefree_decomposition(p)?
            .iter()
            .map(SturmChain::new)
            .collect::<Result<_>>()?;
        Ok(joint
            .iter()
            .map(|(iv, _)| {
                chains
                    .iter()
                    .position(|c| !c.base().is_constant() && c.count_in(iv) > 0)
                    .map_or(0, |i| i + 1)
            })
            .collect())
    };
    let (mo, mi) = (mult_in(outer)?, mult_in(inner)?);
    if mo.iter().sum::<usize>() != n || mi.iter().sum::<usize>() != m {
        return Ok(false);
    }
    let expand = |ms: &[usize]| -> Vec<usize> {
        ms.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i, k)).collect()
    };
    let (theta, eta) = (expand(&mo), expand(&mi));
    // Ascending: θ_0 ≤ η_0 ≤ θ_1 ≤ ... ≤ η_{n-2} ≤ θ_{n-1}.
    Ok(eta.iter().enumerate().all(|(i, &e)| theta[i] <= e && e <= theta[i + 1]))
}

pub fn interlaces(g: &Graph, u: usize) -> Result<bool> {
    let inner = g.delete_vertex(u)?;
    interlaces_polys(&matching_polynomial(g), &matching_polynomial(&inner))
}

/// Multiplicity of the root named by `theta` in `p`; 0 if it is not a root.
pub fn multiplicity_in(p: &IntPoly, theta: &RootHandle) -> Result<usize> {
    if theta.factor.is_constant() {
        return Err(Error::InvalidHandle("certifying factor must have positive degree".into()));
    }
    for (i, f) in squarefree_decomposition(p)?.iter().enumerate() {
        if f.is_constant() {
            continue;
        }
        let h = gcd(f, &theta.factor)?;
        if !h.is_constant() && SturmChain::new(&h)?.count_in(&theta.interval) > 0 {
            return Ok(i + 1);
        }
    }
    Ok(0)
}

/// `mult(θ, G)`.
pub fn multiplicity_of(g: &Graph, theta: &RootHandle) -> Result<usize> {
    multiplicity_in(&matching_polynomial(g), theta)
}

/// A vertex `u` with `mult(θ, G-u) = mult(θ, G) + 1`, if one exists.
pub fn gallai_witness(g: &Graph, theta: &RootHandle) -> Result<Option<usize>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = multiplicity_of(g, theta)?;
    if m < 2 {
        return Err(Error::MultiplicityTooSmall(m));
    }
    for u in 0..g.order() {
        if multiplicity_of(&g.delete_vertex(u)?, theta)? == m + 1 {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

/// Whether every real root of `p` is at least `bound`.
pub fn roots_at_least(p: &IntPoly, bound: &BigRational) -> Result<bool> {
    let chain = SturmChain::new(p)?;
    let b = cauchy_bound(chain.base());
    let below = -b;
    if bound <= &below {
        return Ok(true);
    }
    Ok(chain.count_open(&below, bound) == 0)
}

/// Whether all matching roots of `g` are `≥ -1`.
pub fn matching_roots_at_least_minus_one(g: &Graph) -> bool {
    let minus_one = BigRational::from_integer((-1).into());
    roots_at_least(&matching_polynomial(g), &minus_one).expect("matching polynomials are nonzero")
}

/// Whether `p(-x) = (-1)^deg p(x)`, i.e. the roots are symmetric about 0.
pub fn has_symmetric_roots(p: &IntPoly) -> bool {
    let d = p.degree().unwrap_or(0);
    p.coeffs().iter().enumerate().all(|(i, c)| c.is_zero() || (d - i).is_multiple_of(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn star(k: usize) -> Graph {
        Graph::from_edges(k + 1, (1..=k).map(|v| (0, v))).unwrap()
    }

    /// S(3,5): center 0 adjacent to star centers 1,2,3 and to leaves 4,5 of
    /// the stars {1,4} and {2,5}; the third K_2 is {3,6}.
    fn s35() -> Graph {
        g(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (0, 4), (0, 5)])
    }

    #[test]
    fn summaries() {
        let k2 = root_summary(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(k2.distinct_roots(), 2);
        assert_eq!(k2.render(), "{±1}");
        let s = root_summary(&s35()).unwrap();
        assert_eq!(s.polynomial().to_string(), "x^7-8x^5+13x^3-6x");
        assert_eq!(s.distinct_roots(), 5);
        assert_eq!(s.render(), "{0, (±1)^2, ±√6}");
        assert_eq!(s.multiplicities(), vec![1, 2, 1, 2, 1]);
        let k14 = root_summary(&star(4)).unwrap();
        assert_eq!(k14.render(), "{0^3, ±2}");
        assert_eq!(root_summary(&Graph::empty(0).unwrap()), Err(Error::EmptyGraph));
    }

    #[test]
    fn distinct_counts() {
        assert_eq!(distinct_matching_roots(&Graph::complete(2).unwrap()), 2);
        assert_eq!(distinct_matching_roots(&Graph::complete(3).unwrap()), 3);
        assert_eq!(distinct_matching_roots(&star(5)), 3);
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(distinct_matching_roots(&c4), 4);
    }

    #[test]
    fn interlacing_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!((0..3).all(|u| interlaces(&k3, u).unwrap()));
        assert!(interlaces(&star(3), 0).unwrap());
        assert!(interlaces(&star(3), 1).unwrap());
        assert!(interlaces(&k3, 3).is_err());
        // x^2 - 4 does not interlace x^3 - x: its roots ±2 lie outside [-1, 1].
        let p = |s: &str| s.parse::<IntPoly>().unwrap();
        assert!(!interlaces_polys(&p("x^3-x"), &p("x^2-4")).unwrap());
        assert!(interlaces_polys(&p("x^3-x"), &p("x^2")).unwrap());
        assert!(!interlaces_polys(&p("x^3-x"), &p("x")).unwrap());
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity_of(&star(4), &RootHandle::integer(0)).unwrap(), 3);
        assert_eq!(multiplicity_of(&Graph::complete(2).unwrap(), &RootHandle::integer(5)).unwrap(), 0);
        // T(2,3): two K_{1,3} whose centers 1, 2 are joined to the center 0.
        let t23 = g(9, &[(0, 1), (0, 2), (1, 3), (1, 4), (1, 5), (2, 6), (2, 7), (2, 8)]);
        let summary = root_summary(&t23).unwrap();
        let sqrt3 = summary
            .handles()
            .iter()
            .find(|h| (h.approx() - 3f64.sqrt()).abs() < 1e-9)
            .unwrap();
        assert_eq!(multiplicity_of(&t23, sqrt3).unwrap(), 1);
        assert!(RootHandle::new(IntPoly::x2_minus(3), RationalInterval::point(BigRational::zero())).is_err());
    }

    #[test]
    fn gallai_examples() {
        let k14 = star(4);
        assert_eq!(gallai_witness(&k14, &RootHandle::integer(0)).unwrap(), Some(0));
        let s = s35();
        let w = gallai_witness(&s, &RootHandle::integer(1)).unwrap().unwrap();
        assert_eq!(multiplicity_of(&s.delete_vertex(w).unwrap(), &RootHandle::integer(1)).unwrap(), 3);
        assert_eq!(
            gallai_witness(&Graph::complete(2).unwrap(), &RootHandle::integer(1)),
            Err(Error::MultiplicityTooSmall(1))
        );
        assert_eq!(gallai_witness(&Graph::empty(2).unwrap(), &RootHandle::integer(0)), Err(Error::Disconnected));
    }

    #[test]
    fn lower_bound_minus_one() {
        assert!(matching_roots_at_least_minus_one(&Graph::complete(2).unwrap()));
        assert!(!matching_roots_at_least_minus_one(&Graph::complete(3).unwrap()));
        assert!(!matching_roots_at_least_minus_one(&star(2)));
    }

    #[test]
    fn symmetry() {
        assert!(has_symmetric_roots(&matching_polynomial(&s35())));
        assert!(!has_symmetric_roots(&"x^2+x".parse().unwrap()));
    }
}
