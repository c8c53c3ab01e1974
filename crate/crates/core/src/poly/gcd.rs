//! Fraction-free division, subresultant gcd and square-free decomposition.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

impl IntPoly {
    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        assert!(!b.is_zero(), "pseudo-division by zero");
        if self.is_zero() || self.deg() < b.deg() {
            return self.clone();
        }
        let db = b.deg();
        let lb = b.lc().clone();
        let mut r = self.coeffs.clone();
        let mut e = self.deg() - db + 1;
        while r.len() > db && !r.is_empty() {
            let lr = r.last().unwrap().clone();
            let shift = r.len() - 1 - db;
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[shift + j] -= &lr * bc;
            }
            debug_assert!(r.last().unwrap().is_zero());
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            e -= 1;
        }
        let r = IntPoly::from_coeffs(r);
        if e > 0 {
            r.scale(&num_traits::pow(lb, e))
        } else {
            r
        }
    }

    /// Exact division over the integers; `None` if `d` does not divide `self`
    /// with an integral quotient.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.deg() < d.deg() {
            return None;
        }
        let dd = d.deg();
        let ld = d.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.deg() - dd + 1];
        for k in (0..q.len()).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(ld);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &qk * dc;
            }
            q[k] = qk;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(q))
    }

    /// Divisibility over the rationals (content is ignored).
    pub fn divides(&self, p: &IntPoly) -> bool {
        p.is_zero() || p.div_exact(&self.primitive()).is_some()
    }
}

/// Primitive gcd with positive leading coefficient, via the subresultant
/// pseudo-remainder sequence.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a.is_zero() {
        return Ok(b.primitive());
    }
    if b.is_zero() {
        return Ok(a.primitive());
    }
    let (mut f, mut g) = if a.deg() >= b.deg() {
        (a.primitive(), b.primitive())
    } else {
        (b.primitive(), a.primitive())
    };
    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = f.deg() - g.deg();
        let r = f.pseudo_rem(&g);
        if r.is_zero() {
            return Ok(g.primitive());
        }
        if r.deg() == 0 {
            return Ok(IntPoly::one());
        }
        let divisor = &gg * num_traits::pow(h.clone(), delta);
        let next = IntPoly::from_coeffs(r.coeffs.iter().map(|c| c / &divisor).collect());
        f = g;
        g = next;
        gg = f.lc().clone();
        // h <- gg^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(gg.clone(), delta) / num_traits::pow(h, delta - 1)
        };
    }
}

/// `p / gcd(p, p')`, primitive with positive leading coefficient.
pub fn squarefree_part(p: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(IntPoly::one());
    }
    let g = gcd(p, &p.derivative())?;
    Ok(p
        .primitive()
        .div_exact(&g)
        .expect("gcd with a primitive divisor divides exactly")
        .primitive())
}

/// Yun's algorithm: returns `f_1, f_2, ...` with `primitive(p) = prod f_i^i`,
/// each `f_i` square-free, primitive, with positive leading coefficient and
/// pairwise coprime. Trailing entries may be `1`.
pub fn squarefree_decomposition(p: &IntPoly) -> Result<Vec<IntPoly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let a = p.primitive();
    if a.is_constant() {
        return Ok(Vec::new());
    }
    let da = a.derivative();
    let c = gcd(&a, &da)?;
    let mut w = a.div_exact(&c).expect("exact");
    let y = da.div_exact(&c).expect("exact");
    let mut z = &y - &w.derivative();
    let mut out = Vec::new();
    while !w.is_constant() {
        let g = if z.is_zero() { w.primitive() } else { gcd(&w, &z)? };
        w = w.div_exact(&g).expect("exact");
        let y = if z.is_zero() { IntPoly::zero() } else { z.div_exact(&g).expect("exact") };
        z = &y - &w.derivative();
        out.push(g);
    }
    Ok(out)
}
