//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficient `i` multiplies `t^i`. The leading coefficient is nonzero; the
/// zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `t - r`
    pub fn linear_root(r: i64) -> Self {
        Self::from_i64(&[-r, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of `p(x)`, computed on the homogenized numerator so no rational
    /// arithmetic is needed.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let (p, q) = (x.numer(), x.denom());
        // q > 0 for normalized rationals, so q^d does not change the sign.
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        acc.sign_ordering()
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divide by the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo_rem by zero polynomial");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.leading().expect("nonzero").clone();
        let mut r = self.coeffs.clone();
        let mut steps = 0;
        while r.len() > db && !r.is_empty() {
            let lr = r.last().expect("nonempty").clone();
            let shift = r.len() - 1 - db;
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[i + shift] -= &lr * bc;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            steps += 1;
        }
        let mut out = Self::new(r);
        let missing = da - db + 1 - steps;
        if missing > 0 {
            let f = num_traits::pow(lb, missing);
            out = out.scale(&f);
        }
        out
    }

    /// Exact quotient over the integers, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(da) = self.degree() else {
            return Some(Self::zero());
        };
        if da < dd {
            return None;
        }
        let ld = d.leading().expect("nonzero");
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - dd + 1];
        for k in (0..=da - dd).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(ld);
            if !rem.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &qk * dc;
            }
            q[k] = qk;
        }
        if r.iter().all(Zero::is_zero) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `t^k * p(1/t)`; requires `k >= deg p`.
    pub fn reciprocal(&self, k: usize) -> Self {
        let mut c = self.coeffs.clone();
        assert!(c.len() <= k + 1, "reciprocal degree {k} below polynomial degree");
        c.resize(k + 1, BigInt::zero());
        c.reverse();
        Self::new(c)
    }

    /// `p(-t)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Largest power `k` with `(t - 1)^k | self`, and the cofactor.
    pub fn split_unit_root(&self) -> (usize, Self) {
        let lin = Self::linear_root(1);
        let mut k = 0;
        let mut p = self.clone();
        while !p.is_zero() && p.eval(&BigInt::one()).is_zero() {
            p = p.div_exact(&lin).expect("t - 1 divides p when p(1) = 0");
            k += 1;
        }
        (k, p)
    }

    /// Strict upper bound on the absolute value of every real root:
    /// `1 + ceil(max |a_i| / |a_d|)`.
    pub fn cauchy_bound(&self) -> BigInt {
        let lead = self.leading().expect("nonzero polynomial").abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_default();
        let (q, r) = max.div_rem(&lead);
        let ceil = if r.is_zero() { q } else { q + 1 };
        ceil + 1
    }
}

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
pub fn gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let (mut a, mut b) = (a.primitive_part(), b.primitive_part());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.primitive_part();
    }
    a
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
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
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{abs}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{abs}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[-2, 1]);
        let b = p(&[-3, 1]);
        assert_eq!(&a * &b, p(&[6, -5, 1]));
        assert_eq!(&(&a * &b) - &a, p(&[8, -6, 1]));
        assert_eq!((&a * &b).derivative(), p(&[-5, 2]));
        assert_eq!(p(&[6, -5, 1]).eval(&BigInt::from(2)), BigInt::zero());
        assert_eq!(format!("{}", p(&[6, -5, 1])), "t^2 - 5*t + 6");
    }

    #[test]
    fn exact_division() {
        let a = p(&[6, -5, 1]);
        assert_eq!(a.div_exact(&p(&[-2, 1])), Some(p(&[-3, 1])));
        assert_eq!(a.div_exact(&p(&[-1, 1])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[1, 2])), Some(p(&[2])));
    }

    #[test]
    fn gcd_is_primitive() {
        let a = &p(&[-2, 1]) * &p(&[-3, 1]);
        let b = &p(&[-2, 1]) * &p(&[5, 7]);
        assert_eq!(gcd(&a.scale(&BigInt::from(6)), &b.scale(&BigInt::from(-4))), p(&[-2, 1]));
        assert_eq!(gcd(&p(&[1, 1]), &p(&[-1, 1])), p(&[1]));
    }

    #[test]
    fn pseudo_remainder_matches_definition() {
        let a = p(&[1, 0, 3, 2]);
        let b = p(&[1, 3]);
        // lc(b)^(3-1+1) * a mod b = 27 * a(-1/3) as a constant
        let r = a.pseudo_rem(&b);
        let expect = BigRational::from_integer(BigInt::from(27))
            * a.eval_rational(&BigRational::new(BigInt::from(-1), BigInt::from(3)));
        assert!(expect.is_integer());
        assert_eq!(r, IntPolynomial::constant(expect.to_integer()));
    }

    #[test]
    fn sign_at_rational() {
        let q = p(&[-2, 0, 1]);
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(q.sign_at(&r(1, 1)), Ordering::Less);
        assert_eq!(q.sign_at(&r(3, 2)), Ordering::Greater);
        assert_eq!(q.sign_at(&r(-3, 2)), Ordering::Greater);
        assert_eq!(p(&[-1, 2]).sign_at(&r(1, 2)), Ordering::Equal);
    }

    #[test]
    fn reciprocal_and_unit_roots() {
        assert_eq!(p(&[1, 2, 3]).reciprocal(3), p(&[0, 3, 2, 1]));
        let (k, rest) = (&(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[5, 1])).split_unit_root();
        assert_eq!((k, rest), (2, p(&[5, 1])));
    }

    #[test]
    fn cauchy_bound_exceeds_roots() {
        let q = &p(&[-7, 1]) * &p(&[3, 2]);
        assert!(q.cauchy_bound() > BigInt::from(7));
    }
}
