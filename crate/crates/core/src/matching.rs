//! Matching vectors, matching polynomials and characteristic polynomials.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{bit, bits, component_masks_within, full_mask, CanonicalLabel, Graph};
use crate::poly::IntPoly;

/// Components at least this large are memoized by canonical form.
const MEMO_MIN_ORDER: u32 = 12;

const BRUTE_FORCE_MAX_ORDER: usize = 16;

/// `m(G,0), m(G,1), ..., m(G,ν)` together with the order of `G`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MatchingVector {
    order: usize,
    counts: Vec<BigUint>,
}

impl MatchingVector {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `m(G,k)`, zero beyond the maximum matching size.
    pub fn count(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    pub fn max_matching_size(&self) -> usize {
        self.counts.len() - 1
    }

    /// Counts as `u64`, for tests and display; `None` if any entry is too large.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.counts.iter().map(|c| u64::try_from(c).ok()).collect()
    }

    /// `Σ (-1)^k m(G,k) x^(n-2k)`.
    pub fn to_polynomial(&self) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.order + 1];
        for (k, c) in self.counts.iter().enumerate() {
            let c = BigInt::from(c.clone());
            coeffs[self.order - 2 * k] = if k % 2 == 0 { c } else { -c };
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Rebuilds a vector from stored counts; `None` unless `m(G,0) = 1`
    /// and every matching fits in `order` vertices.
    pub(crate) fn from_stored(order: usize, counts: Vec<BigUint>) -> Option<MatchingVector> {
        let fits = !counts.is_empty() && 2 * (counts.len() - 1) <= order && counts[0] == BigUint::from(1u8);
        fits.then(|| MatchingVector::from_counts(order, counts))
    }

    fn from_counts<C: Count>(order: usize, mut counts: Vec<C>) -> MatchingVector {
        while counts.len() > 1 && counts.last().is_some_and(Count::is_zero) {
            counts.pop();
        }
        MatchingVector { order, counts: counts.into_iter().map(Count::into_biguint).collect() }
    }
}

/// How the recurrence picks the vertex whose edges are expanded.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum PivotRule {
    /// Highest degree in the current component, lowest index on ties.
    #[default]
    MaxDegree,
    MinDegree,
    LowestIndex,
    HighestIndex,
}

trait Count: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_usize(v: usize) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn into_biguint(self) -> BigUint;
}

impl Count for u128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_usize(v: usize) -> Self {
        v as u128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn into_biguint(self) -> BigUint {
        BigUint::from(self)
    }
}

impl Count for BigUint {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_usize(v: usize) -> Self {
        BigUint::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn into_biguint(self) -> BigUint {
        self
    }
}

/// Expanding every edge at a pivot `u` with `m(G) = m(G-e) + m(G-u-v)·x`
/// leaves `m(G) = m(G-u) + Σ_{v~u} m(G-u-v)·x`, so the state of the
/// recursion is just a vertex mask over the original rows.
struct Engine<'a, C> {
    adj: &'a [u64],
    pivot: PivotRule,
    memo: HashMap<CanonicalLabel, Vec<C>>,
}

impl<C: Count> Engine<'_, C> {
    fn vector(&mut self, mask: u64) -> Option<Vec<C>> {
        let mut acc = vec![C::one()];
        for comp in component_masks_within(self.adj, mask) {
            let v = self.connected(comp)?;
            acc = convolve(&acc, &v)?;
        }
        Some(acc)
    }

    fn connected(&mut self, mask: u64) -> Option<Vec<C>> {
        let size = mask.count_ones();
        let degree = |v: usize| (self.adj[v] & mask).count_ones();
        let edges: u32 = bits(mask).map(degree).sum::<u32>() / 2;
        // Trees with a dominating vertex (stars) and anything on three vertices.
        if edges + 1 == size && bits(mask).any(|v| degree(v) + 1 == size) {
            return Some(if size == 1 { vec![C::one()] } else { vec![C::one(), C::from_usize(edges as usize)] });
        }
        if size == 3 {
            return Some(vec![C::one(), C::from_usize(edges as usize)]);
        }
        let key = (size >= MEMO_MIN_ORDER).then(|| {
            let rows: Vec<u64> = self.adj.to_vec();
            Graph::from_rows(self.adj.len(), rows).induced(mask).canonical_form()
        });
        if let Some(hit) = key.as_ref().and_then(|k| self.memo.get(k)) {
            return Some(hit.clone());
        }
        let u = self.choose_pivot(mask);
        let rest = mask & !bit(u);
        let mut out = self.vector(rest)?;
        for v in bits(self.adj[u] & mask) {
            let sub = self.vector(rest & !bit(v))?;
            if out.len() < sub.len() + 1 {
                out.resize(sub.len() + 1, C::zero());
            }
            for (k, c) in sub.iter().enumerate() {
                out[k + 1] = out[k + 1].add(c)?;
            }
        }
        if let Some(k) = key {
            self.memo.insert(k, out.clone());
        }
        Some(out)
    }

    fn choose_pivot(&self, mask: u64) -> usize {
        let degree = |v: usize| (self.adj[v] & mask).count_ones();
        match self.pivot {
            PivotRule::MaxDegree => bits(mask).fold(usize::MAX, |best, v| {
                if best == usize::MAX || degree(v) > degree(best) { v } else { best }
            }),
            PivotRule::MinDegree => bits(mask).fold(usize::MAX, |best, v| {
                if best == usize::MAX || degree(v) < degree(best) { v } else { best }
            }),
            PivotRule::LowestIndex => mask.trailing_zeros() as usize,
            PivotRule::HighestIndex => 63 - mask.leading_zeros() as usize,
        }
    }
}

fn convolve<C: Count>(a: &[C], b: &[C]) -> Option<Vec<C>> {
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y)?)?;
        }
    }
    Some(out)
}

fn run<C: Count>(g: &Graph, pivot: PivotRule) -> Option<Vec<C>> {
    let mut engine = Engine::<C> { adj: g.rows(), pivot, memo: HashMap::new() };
    engine.vector(full_mask(g.order()))
}

/// Matching vector by the edge recurrence with component splitting. Counts
/// are accumulated in `u128` and recomputed with big integers on overflow.
pub fn matching_vector(g: &Graph) -> MatchingVector {
    matching_vector_with(g, PivotRule::default())
}

pub fn matching_vector_with(g: &Graph, pivot: PivotRule) -> MatchingVector {
    match run::<u128>(g, pivot) {
        Some(v) => MatchingVector::from_counts(g.order(), v),
        None => {
            let v = run::<BigUint>(g, pivot).expect("big-integer counts cannot overflow");
            MatchingVector::from_counts(g.order(), v)
        }
    }
}

/// Matching vector by explicit enumeration of all matchings; an oracle for
/// [`matching_vector`].
pub fn matching_vector_bruteforce(g: &Graph) -> Result<MatchingVector> {
    if g.order() > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::BruteForceGuard(g.order()));
    }
    let edges: Vec<u64> = g.edges().map(|(u, v)| bit(u) | bit(v)).collect();
    let mut counts = vec![0u64; g.order() / 2 + 1];
    fn extend(edges: &[u64], from: usize, covered: u64, size: usize, counts: &mut [u64]) {
        counts[size] += 1;
        for (j, &e) in edges.iter().enumerate().skip(from) {
            if covered & e == 0 {
                extend(edges, j + 1, covered | e, size + 1, counts);
            }
        }
    }
    extend(&edges, 0, 0, 0, &mut counts);
    Ok(MatchingVector::from_counts(g.order(), counts.into_iter().map(u128::from).collect()))
}

pub fn matching_polynomial(g: &Graph) -> IntPoly {
    matching_vector(g).to_polynomial()
}

pub fn max_matching_size(g: &Graph) -> usize {
    matching_vector(g).max_matching_size()
}

/// `det(xI - A)` by Bareiss elimination over `Z[x]`. The leading principal
/// minors of `xI - A` are monic, so no pivot is ever zero.
pub fn characteristic_polynomial(g: &Graph) -> IntPoly {
    let n = g.order();
    if n == 0 {
        return IntPoly::one();
    }
    let x = IntPoly::x();
    let minus_one = IntPoly::constant(BigInt::from(-1));
    let mut m: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        x.clone()
                    } else if g.has_edge(i, j) {
                        minus_one.clone()
                    } else {
                        IntPoly::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut prev = IntPoly::one();
    for k in 0..n - 1 {
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss quotients are exact");
            }
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].clone()
}
