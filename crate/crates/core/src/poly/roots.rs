//! Sturm sequences and exact real-root isolation.
//!
//! Everything here is certified with integer arithmetic. Sign evaluation
//! first tries a floating-point Horner pass with a rigorous error bound and
//! falls back to exact evaluation whenever that bound cannot decide.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::gcd::{squarefree_decomposition, squarefree_part};
use super::IntPoly;
use crate::error::{Error, Result};

/// A closed rational interval `[lo, hi]`. When `lo < hi` it is used as an
/// isolating interval whose endpoints are not the isolated root; when
/// `lo == hi` it denotes the exact rational root `lo`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    /// `None` when `lo > hi`.
    pub fn new(lo: BigRational, hi: BigRational) -> Option<RationalInterval> {
        (lo <= hi).then_some(RationalInterval { lo, hi })
    }

    pub fn point(r: BigRational) -> RationalInterval {
        RationalInterval { lo: r.clone(), hi: r }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    /// The mirror image under `x -> -x`.
    pub fn negate(&self) -> RationalInterval {
        RationalInterval { lo: -&self.hi, hi: -&self.lo }
    }

    /// Approximate midpoint, for display only.
    pub fn approx(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// True when the two intervals share no point (touching endpoints of
    /// open isolating intervals count as disjoint).
    pub fn disjoint_from(&self, other: &RationalInterval) -> bool {
        let touch_ok = |a: &RationalInterval, b: &RationalInterval| {
            a.hi < b.lo || (a.hi == b.lo && !(a.is_point() && b.is_point()))
        };
        touch_ok(self, other) || touch_ok(other, self)
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Sturm chain of the square-free part of a polynomial, built with
/// sign-corrected primitive pseudo-remainders so every entry stays integral.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<IntPoly>,
    /// `seq` rounded to f64, for the sign filter.
    approx: Vec<Vec<f64>>,
}

/// Sign of a polynomial with f64 coefficients at an exactly representable
/// `x`, or `None` when the Horner error bound straddles zero. The bound
/// `8(d+2)u * sum |a_i||x|^i` covers coefficient rounding and evaluation.
fn filtered_sign(coeffs: &[f64], x: f64) -> Option<i32> {
    let ax = x.abs();
    let (mut v, mut s) = (0.0f64, 0.0f64);
    for c in coeffs.iter().rev() {
        v = v * x + c;
        s = s * ax + c.abs();
    }
    if !s.is_finite() || s < 1e-250 {
        return None;
    }
    let bound = s * (4.0 * (coeffs.len() as f64 + 2.0) * f64::EPSILON);
    if v > bound {
        Some(1)
    } else if v < -bound {
        Some(-1)
    } else {
        None
    }
}

/// `x` as an f64 when the conversion is exact: a dyadic rational with a
/// numerator of at most 53 bits.
fn exact_f64(x: &BigRational) -> Option<f64> {
    let (num, den) = (x.numer(), x.denom());
    let shift = den.trailing_zeros()?;
    if den.bits() != shift + 1 || shift > 900 || num.bits() > 53 {
        return None;
    }
    Some(num.to_f64()? / den.to_f64()?)
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Result<SturmChain> {
        Ok(SturmChain::from_squarefree(squarefree_part(p)?))
    }

    pub(crate) fn from_squarefree(q: IntPoly) -> SturmChain {
        let mut seq = vec![q.clone()];
        if q.is_constant() {
            return SturmChain::with_approx(seq);
        }
        seq.push(q.derivative().primitive());
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            if b.is_constant() {
                break;
            }
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // prem = lc(b)^e * rem; we need a positive multiple of -rem.
            let e = a.deg() - b.deg() + 1;
            let flip = b.lc().is_negative() && e % 2 == 1;
            let next = if flip { r } else { -r };
            let c = next.content();
            seq.push(IntPoly::from_coeffs(next.coeffs().iter().map(|x| x / &c).collect()));
        }
        SturmChain::with_approx(seq)
    }

    fn with_approx(seq: Vec<IntPoly>) -> SturmChain {
        let approx = seq
            .iter()
            .map(|p| p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY)).collect())
            .collect();
        SturmChain { seq, approx }
    }

    fn sign(&self, i: usize, x: &BigRational, fx: Option<f64>) -> i32 {
        fx.and_then(|f| filtered_sign(&self.approx[i], f)).unwrap_or_else(|| self.seq[i].sign_at(x))
    }

    fn base_sign(&self, x: &BigRational) -> i32 {
        self.sign(0, x, exact_f64(x))
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.seq
    }

    /// The square-free polynomial the chain starts from.
    pub fn base(&self) -> &IntPoly {
        &self.seq[0]
    }

    fn variations(&self, x: &BigRational) -> usize {
        self.probe(x).0
    }

    /// Sign variations at `x` and whether `x` is a root of the base.
    fn probe(&self, x: &BigRational) -> (usize, bool) {
        let mut last = 0i32;
        let mut v = 0;
        let mut root = false;
        let fx = exact_f64(x);
        for i in 0..self.seq.len() {
            let s = self.sign(i, x, fx);
            if s == 0 {
                root |= i == 0;
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        (v, root)
    }

    /// Distinct roots strictly inside `(lo, hi)`. Endpoints may be roots:
    /// for a square-free base, `V(a) - V(b)` counts the roots in `(a, b]`.
    pub fn count_open(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if lo >= hi {
            return 0;
        }
        let at_hi = usize::from(self.base_sign(hi) == 0);
        self.variations(lo) - self.variations(hi) - at_hi
    }

    /// Distinct roots in the closed interval `[lo, hi]`.
    pub fn count_closed(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if lo > hi {
            return 0;
        }
        if lo == hi {
            return usize::from(self.base_sign(lo) == 0);
        }
        self.count_open(lo, hi)
            + usize::from(self.base_sign(lo) == 0)
            + usize::from(self.base_sign(hi) == 0)
    }

    /// Roots of the base inside an isolating interval: the open interior, or
    /// the point itself for a degenerate interval.
    pub fn count_in(&self, iv: &RationalInterval) -> usize {
        if iv.is_point() {
            usize::from(self.base_sign(iv.lo()) == 0)
        } else {
            self.count_open(iv.lo(), iv.hi())
        }
    }
}

/// `1 + max_{i<d} |a_i| / |a_d|`; every complex root has modulus below it.
pub fn cauchy_bound(p: &IntPoly) -> BigRational {
    let Some(lead) = p.leading() else {
        return BigRational::one();
    };
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    BigRational::one() + BigRational::new(max, lead.abs())
}

/// Smallest power of two `2^k` with `|a_{d-i}| <= |a_d| 2^{(k-1)i}` for all
/// `i`, so at least the Fujiwara bound; every complex root lies strictly
/// inside `(-2^k, 2^k)`.
pub fn dyadic_root_bound(p: &IntPoly) -> BigRational {
    let Some(lead) = p.leading() else {
        return BigRational::one();
    };
    let lead = lead.abs();
    let d = p.coeffs().len() - 1;
    let fits = |k: usize| {
        (1..=d).all(|i| {
            let c = p.coeffs()[d - i].abs();
            c <= &lead << ((k - 1) * i)
        })
    };
    let mut k = 1;
    while !fits(k) {
        k += 1;
    }
    BigRational::from_integer(BigInt::one() << k)
}

/// Number of distinct real roots of `p` strictly inside the interval. A
/// degenerate interval has empty interior and yields 0.
pub fn sturm_count(p: &IntPoly, iv: &RationalInterval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(SturmChain::new(p)?.count_open(iv.lo(), iv.hi()))
}

pub fn distinct_real_root_count(p: &IntPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let chain = SturmChain::new(p)?;
    let b = dyadic_root_bound(chain.base());
    Ok(chain.count_open(&-b.clone(), &b))
}

struct Isolator<'a> {
    chain: &'a SturmChain,
    lead: BigInt,
    out: Vec<RationalInterval>,
}

/// An endpoint with its sign variations. At a root of the square-free base
/// the zero is skipped, so `V(x)` equals `V(x+)`.
struct End {
    x: BigRational,
    v: usize,
}

impl Isolator<'_> {
    /// `count` roots lie strictly between the endpoints.
    fn bisect(&mut self, lo: End, hi: End, count: usize) {
        match count {
            0 => {}
            1 => {
                let iv = self.single(lo, hi);
                self.out.push(iv);
            }
            _ => {
                let x = (&lo.x + &hi.x) / BigRational::from_integer(2.into());
                let (v, root) = self.chain.probe(&x);
                // V(lo) - V(m) counts the roots in (lo, m].
                let left = lo.v - v - usize::from(root);
                let right = count - left - usize::from(root);
                self.bisect(lo, End { x: x.clone(), v }, left);
                if root {
                    self.out.push(RationalInterval::point(x.clone()));
                }
                self.bisect(End { x, v }, hi, right);
            }
        }
    }

    /// Shrinks an interval holding exactly one root until it is narrower
    /// than `1/|lc|`; a rational root then sits on the grid `k/|lc|`.
    fn single(&self, mut lo: End, mut hi: End) -> RationalInterval {
        let base = self.chain.base();
        let step = BigRational::new(BigInt::one(), self.lead.clone());
        while &hi.x - &lo.x >= step {
            let x = (&lo.x + &hi.x) / BigRational::from_integer(2.into());
            let (v, root) = self.chain.probe(&x);
            if root {
                return RationalInterval::point(x);
            }
            if lo.v - v == 1 {
                hi = End { x, v };
            } else {
                lo = End { x, v };
            }
        }
        let (lo, hi) = (lo.x, hi.x);
        let scaled_lo = (&lo * BigRational::from_integer(self.lead.clone())).floor().to_integer();
        let scaled_hi = (&hi * BigRational::from_integer(self.lead.clone())).ceil().to_integer();
        let mut k = scaled_lo;
        while k <= scaled_hi {
            let r = BigRational::new(k.clone(), self.lead.clone());
            if r > lo && r < hi && base.sign_at(&r) == 0 {
                return RationalInterval::point(r);
            }
            k += 1;
        }
        RationalInterval { lo, hi }
    }
}

/// Isolates the distinct real roots of `p` in ascending order, each tagged
/// with its multiplicity in `p`.
pub fn isolate_real_roots(p: &IntPoly) -> Result<Vec<(RationalInterval, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let chain = SturmChain::new(p)?;
    if chain.base().is_constant() {
        return Ok(Vec::new());
    }
    let b = dyadic_root_bound(chain.base());
    let (lo, hi) = (-b.clone(), b);
    let (v_lo, v_hi) = (chain.variations(&lo), chain.variations(&hi));
    let mut iso = Isolator { chain: &chain, lead: chain.base().lc().abs(), out: Vec::new() };
    iso.bisect(End { x: lo, v: v_lo }, End { x: hi, v: v_hi }, v_lo - v_hi);
    let factors: Vec<SturmChain> = squarefree_decomposition(p)?
        .into_iter()
        .map(SturmChain::from_squarefree)
        .collect();
    Ok(iso
        .out
        .into_iter()
        .map(|iv| {
            let mult = factors
                .iter()
                .position(|f| !f.base().is_constant() && f.count_in(&iv) > 0)
                .map_or(0, |i| i + 1);
            (iv, mult)
        })
        .collect())
}

/// Narrows an isolating interval of `p` to width at most `width`.
pub fn refine_root(p: &IntPoly, iv: &RationalInterval, width: &BigRational) -> Result<RationalInterval> {
    if iv.is_point() {
        return Ok(iv.clone());
    }
    let chain = SturmChain::new(p)?;
    let (mut lo, mut hi) = (iv.lo().clone(), iv.hi().clone());
    if chain.count_open(&lo, &hi) != 1 {
        return Err(Error::InvalidHandle(format!("{iv} does not isolate a single root of {p}")));
    }
    while &hi - &lo > *width {
        let m = (&lo + &hi) / BigRational::from_integer(2.into());
        if chain.base_sign(&m) == 0 {
            return Ok(RationalInterval::point(m));
        }
        if chain.count_open(&lo, &m) == 1 {
            hi = m;
        } else {
            lo = m;
        }
    }
    Ok(RationalInterval { lo, hi })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn filtered_sign_never_contradicts_exact() {
        // (x - 3/8)^2 (x^2 - 2) with huge cofactors near the double root.
        let polys = [p("64x^4-48x^3-119x^2+96x-18"), p("x^16-120x^14+5460x^12-120120x^10+1320x^8-1"), p("x^3")];
        let approx: Vec<Vec<f64>> = polys.iter().map(|p| p.coeffs().iter().map(|c| c.to_f64().unwrap()).collect()).collect();
        let mut decided = 0;
        for k in -4096i64..=4096 {
            let x = q(k, 1024);
            let fx = exact_f64(&x).unwrap();
            for (poly, a) in polys.iter().zip(&approx) {
                if let Some(s) = filtered_sign(a, fx) {
                    assert_eq!(s, poly.sign_at(&x), "{poly} at {x}");
                    decided += 1;
                }
            }
        }
        assert!(decided > 20_000);
        assert_eq!(exact_f64(&q(1, 3)), None);
        assert_eq!(exact_f64(&q(-5, 8)), Some(-0.625));
    }

    fn iv(a: i64, b: i64) -> RationalInterval {
        RationalInterval::new(q(a, 1), q(b, 1)).unwrap()
    }

    #[test]
    fn sturm_count_examples() {
        assert_eq!(sturm_count(&p("x^2-2"), &iv(0, 2)).unwrap(), 1);
        assert_eq!(sturm_count(&p("x^5-6x^3+5x"), &iv(-10, 10)).unwrap(), 5);
        assert_eq!(sturm_count(&p("x^2+1"), &iv(-10, 10)).unwrap(), 0);
        assert_eq!(sturm_count(&IntPoly::zero(), &iv(0, 1)), Err(Error::ZeroPolynomial));
        // Endpoints that are roots are excluded from the open count.
        assert_eq!(sturm_count(&p("x^2-1"), &iv(-1, 1)).unwrap(), 0);
        assert_eq!(sturm_count(&p("x^3-x"), &iv(-1, 1)).unwrap(), 1);
        assert_eq!(sturm_count(&p("x^3-x"), &iv(0, 2)).unwrap(), 1);
        // Repeated roots count once.
        assert_eq!(sturm_count(&p("x^2-1").pow(3), &iv(-5, 5)).unwrap(), 2);
    }

    #[test]
    fn closed_counts() {
        let c = SturmChain::new(&p("x^3-x")).unwrap();
        assert_eq!(c.count_closed(&q(-1, 1), &q(1, 1)), 3);
        assert_eq!(c.count_closed(&q(0, 1), &q(0, 1)), 1);
        assert_eq!(c.count_closed(&q(1, 2), &q(1, 2)), 0);
    }

    #[test]
    fn distinct_counts() {
        assert_eq!(distinct_real_root_count(&p("x^2-1")).unwrap(), 2);
        assert_eq!(distinct_real_root_count(&p("x^5-4x^3")).unwrap(), 3);
        let t23 = &(&p("x").pow(5) * &p("x^2-5")) * &p("x^2-3");
        assert_eq!(distinct_real_root_count(&t23).unwrap(), 5);
        assert_eq!(distinct_real_root_count(&p("7")).unwrap(), 0);
        assert_eq!(distinct_real_root_count(&p("x^4+1")).unwrap(), 0);
    }

    #[test]
    fn isolation_examples() {
        let r = isolate_real_roots(&p("x^2-1")).unwrap();
        assert_eq!(r, vec![(RationalInterval::point(q(-1, 1)), 1), (RationalInterval::point(q(1, 1)), 1)]);

        let r = isolate_real_roots(&(&p("x") * &p("x^2-1").pow(2))).unwrap();
        let mults: Vec<usize> = r.iter().map(|(_, m)| *m).collect();
        assert_eq!(mults, vec![2, 1, 2]);
        assert!(r.iter().all(|(i, _)| i.is_point()));

        let f3 = &(&p("x") * &p("x^2-7")) * &p("x^2-1").pow(2);
        let r = isolate_real_roots(&f3).unwrap();
        let mults: Vec<usize> = r.iter().map(|(_, m)| *m).collect();
        assert_eq!(mults, vec![1, 2, 1, 2, 1]);
        let s7 = 7f64.sqrt();
        assert!(r[0].0.lo() < &q(-2645, 1000) && r[0].0.hi() > &q(-2646, 1000) || (r[0].0.approx() + s7).abs() < 1.0);
        let chain = SturmChain::new(&f3).unwrap();
        for (i, _) in &r {
            assert_eq!(chain.count_in(i), 1);
        }
    }

    #[test]
    fn rational_non_integer_roots() {
        let r = isolate_real_roots(&p("6x^2-5x+1")).unwrap();
        assert_eq!(r[0].0, RationalInterval::point(q(1, 3)));
        assert_eq!(r[1].0, RationalInterval::point(q(1, 2)));
        let r = isolate_real_roots(&p("4x^2-1")).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|(i, m)| i.is_point() && *m == 1));
    }

    #[test]
    fn isolation_is_mirror_symmetric_for_even_polys() {
        let poly = &(&p("x^2-3") * &p("x^2-5")) * &p("x^4-7x^2+7");
        let r = isolate_real_roots(&poly).unwrap();
        assert_eq!(r.len(), 8);
        for (a, b) in r.iter().zip(r.iter().rev()) {
            assert_eq!(a.0, b.0.negate());
        }
        for w in r.windows(2) {
            assert!(w[0].0.disjoint_from(&w[1].0));
        }
    }

    #[test]
    fn refinement_narrows() {
        let poly = p("x^2-2");
        let r = isolate_real_roots(&poly).unwrap();
        let fine = refine_root(&poly, &r[1].0, &q(1, 1_000_000)).unwrap();
        assert!((fine.approx() - 2f64.sqrt()).abs() < 1e-6);
        assert!(refine_root(&poly, &iv(-3, 3), &q(1, 10)).is_err());
    }
}
