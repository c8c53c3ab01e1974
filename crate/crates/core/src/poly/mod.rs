//! Dense univariate polynomials over the integers.

mod gcd;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use self::gcd::{gcd, squarefree_decomposition, squarefree_part};
pub use roots::{
    cauchy_bound, distinct_real_root_count, dyadic_root_bound, isolate_real_roots, refine_root, sturm_count,
    RationalInterval, SturmChain,
};

use crate::error::{Error, Result};

/// Integer polynomial; `coeffs[i]` is the coefficient of `x^i` and the top
/// entry is nonzero. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    pub fn x() -> IntPoly {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly::from_coeffs(coeffs)
    }

    /// Coefficients in increasing degree; trailing zeros are dropped.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^2 - c`, the shape every family factor takes.
    pub fn x2_minus(c: i64) -> IntPoly {
        IntPoly::from_i64s(&[-c, 0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub(crate) fn deg(&self) -> usize {
        self.degree().expect("nonzero polynomial")
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub(crate) fn lc(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Multiplicity of the root 0: the number of vanishing low coefficients.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divides by `x^k`; `None` if some dropped coefficient is nonzero.
    pub fn unshift(&self, k: usize) -> Option<IntPoly> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `p(-x)`
    pub fn reflect(&self) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// gcd of the coefficients (non-negative); zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let den = x.denom();
        let d = self.coeffs.len().saturating_sub(1) as u32;
        BigRational::new(self.homogeneous_eval(x), num_traits::pow(den.clone(), d as usize))
    }

    /// `den^deg * p(num/den)`, an integer with the sign of `p(x)` (den > 0).
    pub(crate) fn homogeneous_eval(&self, x: &BigRational) -> BigInt {
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc
    }

    /// Sign of `p(x)` as -1, 0 or 1.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let v = self.homogeneous_eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn approx_eval(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> IntPoly {
    let n = a.len().max(b.len());
    let coeffs = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect();
    IntPoly::from_coeffs(coeffs)
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| acc * p)
    }
}

/// Descending powers with explicit signs and caret exponents, e.g.
/// `x^5-6x^3+5x`. Unit coefficients are omitted except on the constant.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Parses the display form. Whitespace and `*` between coefficient and
/// `x` are accepted; `−` (U+2212) is read as a minus sign.
impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<IntPoly> {
        let chars: Vec<char> = s
            .chars()
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .filter(|c| !c.is_whitespace())
            .collect();
        let err = |pos: usize, msg: &str| Error::PolyParse { pos, msg: msg.to_string() };
        if chars.is_empty() {
            return Err(err(0, "empty polynomial"));
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let mut sign = BigInt::one();
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(err(i, "expected '+' or '-' between terms"));
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            if i < chars.len() && chars[i] == '*' {
                if digits.is_empty() {
                    return Err(err(i, "'*' without a coefficient"));
                }
                i += 1;
            }
            let mut power = 0usize;
            if i < chars.len() && chars[i] == 'x' {
                i += 1;
                power = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let ps = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if ps == i {
                        return Err(err(i, "expected exponent after '^'"));
                    }
                    let e: String = chars[ps..i].iter().collect();
                    power = e.parse().map_err(|_| err(ps, "exponent too large"))?;
                }
            } else if digits.is_empty() {
                return Err(err(i, "expected a coefficient or 'x'"));
            }
            let c = if digits.is_empty() {
                BigInt::one()
            } else {
                digits.parse::<BigInt>().map_err(|_| err(start, "bad coefficient"))?
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += sign * c;
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn ring_operations() {
        assert_eq!(p("x^2-1") * p("x^3-3x"), p("x^5-4x^3+3x"));
        assert_eq!(p("x^3-3x").derivative(), p("3x^2-3"));
        let q = p("x^5-6x^3+5x");
        assert_eq!(&q + &IntPoly::zero(), q);
        assert_eq!(&q - &q, IntPoly::zero());
        assert_eq!(p("x+1").pow(3), p("x^3+3x^2+3x+1"));
        assert_eq!(p("x^2-1").shift(2), p("x^4-x^2"));
        assert_eq!(p("x^4-x^2").unshift(2), Some(p("x^2-1")));
        assert_eq!(p("x^4-x^2").unshift(3), None);
        assert_eq!(p("x^3+x^2-2").reflect(), p("-x^3+x^2-2"));
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(p("x^5-6x^3+5x").degree(), Some(5));
    }

    #[test]
    fn evaluation() {
        let q = p("x^5-6x^3+5x");
        let half = BigRational::new(1.into(), 2.into());
        // (1/32) - 6/8 + 5/2 = 57/32
        assert_eq!(q.eval(&half), BigRational::new(57.into(), 32.into()));
        assert_eq!(q.eval_int(&BigInt::from(1)), BigInt::zero());
        assert_eq!(q.sign_at(&BigRational::from_integer(3.into())), 1);
        assert_eq!(q.sign_at(&BigRational::from_integer((-3).into())), -1);
    }

    #[test]
    fn content_and_primitive() {
        assert_eq!(p("-4x^2+6").primitive(), p("2x^2-3"));
        assert_eq!(p("-4x^2+6").content(), BigInt::from(2));
        assert_eq!(p("x^2+x").trailing_zeros(), 1);
    }

    #[test]
    fn display_matches_table_notation() {
        for s in ["x^5-6x^3+5x", "x^2-1", "x^4-3x^2", "x", "-x^3+2", "7", "x^9-8x^7+15x^5"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p("x^2 − 3*x + x").to_string(), "x^2-2x");
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<IntPoly>().is_err());
        assert!("x^".parse::<IntPoly>().is_err());
        assert!("x x".parse::<IntPoly>().is_err());
        assert!("3+".parse::<IntPoly>().is_err());
        assert!("2x3".parse::<IntPoly>().is_err());
    }
}
