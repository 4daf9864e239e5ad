//! Exact real-root machinery over the integers.
//!
//! Multiplicities come from square-free decomposition, never from numeric
//! clustering. Roots are isolated with Sturm chains and carried around as
//! [`AlgebraicNumber`]s: a square-free defining polynomial plus an open rational
//! interval holding exactly one of its roots.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::det::det_poly;
use crate::error::{Error, Result};
use crate::graph::{complement, Graph};
use crate::poly::{gcd, IntPolynomial};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// Yun's algorithm: `p = c * prod f_i^m_i` with each `f_i` primitive and
/// square-free, pairwise coprime, multiplicities strictly increasing.
pub fn squarefree_decompose(p: &IntPolynomial) -> Result<Vec<(IntPolynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = p.primitive_part();
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let dp = p.derivative();
    let a0 = gcd(&p, &dp);
    let exact = |a: &IntPolynomial, b: &IntPolynomial| {
        a.div_exact(b)
            .ok_or_else(|| Error::Internal("inexact division in square-free decomposition".into()))
    };
    let mut b = exact(&p, &a0)?;
    let c = exact(&dp, &a0)?;
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while !b.is_constant() {
        let a = gcd(&b, &d);
        let nb = exact(&b, &a)?;
        let c = exact(&d, &a)?;
        d = &c - &nb.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        b = nb;
        i += 1;
    }
    Ok(out)
}

/// Product of the distinct irreducible factors, primitive.
pub fn squarefree_part(p: &IntPolynomial) -> Result<IntPolynomial> {
    let parts = squarefree_decompose(p)?;
    Ok(parts
        .iter()
        .fold(IntPolynomial::from_i64(&[1]), |acc, (f, _)| &acc * f))
}

/// Sturm chain of a square-free polynomial, kept primitive up to positive
/// scaling so sign patterns are exact.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<IntPolynomial>,
}

fn positive_primitive(p: &IntPolynomial) -> IntPolynomial {
    let c = p.content();
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    IntPolynomial::new(p.coeffs().iter().map(|x| x / &c).collect())
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Self {
        let mut seq = vec![positive_primitive(p)];
        let d = positive_primitive(&p.derivative());
        if !d.is_zero() {
            seq.push(d);
        }
        while seq.len() >= 2 {
            let a = &seq[seq.len() - 2];
            let b = &seq[seq.len() - 1];
            if b.is_constant() {
                break;
            }
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            let e = a.degree().expect("nonzero") - b.degree().expect("nonzero") + 1;
            let lc_neg = b.leading().expect("nonzero").is_negative();
            // prem = lc^e * rem; the next term is -rem up to a positive factor
            let next = if lc_neg && e % 2 == 1 { r } else { -&r };
            seq.push(positive_primitive(&next));
        }
        SturmChain { seq }
    }

    pub fn polynomial(&self) -> &IntPolynomial {
        &self.seq[0]
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut last = Ordering::Equal;
        let mut v = 0;
        for s in &self.seq {
            let sg = s.sign_at(x);
            if sg == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && sg != last {
                v += 1;
            }
            last = sg;
        }
        v
    }

    /// Number of distinct real roots in `(lo, hi]`. Endpoints must not be roots.
    pub fn count(&self, lo: &BigRational, hi: &BigRational) -> Result<usize> {
        for x in [lo, hi] {
            if self.seq[0].sign_at(x) == Ordering::Equal {
                return Err(Error::EndpointIsRoot(x.to_string()));
            }
        }
        if lo >= hi {
            return Ok(0);
        }
        Ok(self.variations(lo).saturating_sub(self.variations(hi)))
    }
}

/// Number of real roots of a square-free `p` in `(lo, hi]`.
pub fn sturm_count(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    SturmChain::new(p).count(lo, hi)
}

/// A point strictly inside `(a, b)` that is not a root of `p`: the midpoint,
/// else the thirds, else further interior fractions.
fn split_point(p: &IntPolynomial, a: &BigRational, b: &BigRational) -> BigRational {
    let w = b - a;
    let mut candidates = vec![rat(1, 2), rat(1, 3), rat(2, 3)];
    let mut k = 4;
    loop {
        for f in candidates.drain(..) {
            let x = a + &w * f;
            if p.sign_at(&x) != Ordering::Equal {
                return x;
            }
        }
        candidates.push(rat(1, k));
        candidates.push(rat(k - 1, k));
        k += 1;
    }
}

/// Real algebraic number: the unique root of the square-free `defining`
/// polynomial in the open interval `(lo, hi)`. Endpoints are never roots, so
/// `defining` changes sign across the interval.
#[derive(Clone)]
pub struct AlgebraicNumber {
    defining: IntPolynomial,
    lo: BigRational,
    hi: BigRational,
}

impl AlgebraicNumber {
    /// Checks the isolation property with a Sturm count.
    pub fn new(defining: IntPolynomial, lo: BigRational, hi: BigRational) -> Result<Self> {
        let defining = defining.primitive_part();
        let n = sturm_count(&defining, &lo, &hi)?;
        if n != 1 {
            return Err(Error::Internal(format!("interval holds {n} roots, expected 1")));
        }
        Ok(AlgebraicNumber { defining, lo, hi })
    }

    pub fn defining(&self) -> &IntPolynomial {
        &self.defining
    }

    pub fn lower(&self) -> &BigRational {
        &self.lo
    }

    pub fn upper(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// One bisection step, keeping the designated root.
    fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / int(BigInt::from(2));
        match self.defining.sign_at(&mid) {
            Ordering::Equal => {
                // The root is `mid` itself; shrink symmetrically around it.
                let two = int(BigInt::from(2));
                self.lo = (&self.lo + &mid) / &two;
                self.hi = (&mid + &self.hi) / two;
            }
            s if s == self.defining.sign_at(&self.lo) => self.lo = mid,
            _ => self.hi = mid,
        }
    }

    /// Narrow the isolating interval to width at most `width`.
    pub fn refine(&mut self, width: &BigRational) {
        assert!(width.is_positive(), "refinement width must be positive");
        while &self.width() > width {
            self.bisect();
        }
    }

    pub fn refined(&self, width: &BigRational) -> Self {
        let mut a = self.clone();
        a.refine(width);
        a
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / int(BigInt::from(2))
    }

    /// Nearest double, from a `2^-60`-wide enclosure.
    pub fn to_f64(&self) -> f64 {
        let w = BigRational::new(BigInt::one(), BigInt::one() << 60usize);
        let a = self.refined(&w);
        let m = a.midpoint();
        m.numer().to_f64().unwrap_or(f64::NAN) / m.denom().to_f64().unwrap_or(f64::NAN)
    }

    /// Exact rational value when the defining polynomial is linear.
    pub fn as_rational(&self) -> Option<BigRational> {
        (self.defining.degree() == Some(1)).then(|| {
            BigRational::new(-self.defining.coeff(0), self.defining.coeff(1))
        })
    }

    /// `1/x` for `x > 0`: the reciprocal defining polynomial and inverted interval.
    pub fn recip(&self) -> Result<Self> {
        if !self.lo.is_positive() {
            let mut a = self.clone();
            while !a.lo.is_positive() {
                if a.hi <= BigRational::zero() {
                    return Err(Error::Internal("reciprocal of a non-positive number".into()));
                }
                a.bisect();
            }
            return a.recip();
        }
        let d = self.defining.degree().expect("nonconstant");
        AlgebraicNumber::new(
            self.defining.reciprocal(d),
            self.hi.recip(),
            self.lo.recip(),
        )
    }

    /// True iff `p` vanishes at this number.
    pub fn is_root_of(&self, p: &IntPolynomial) -> bool {
        if p.is_zero() {
            return true;
        }
        let h = gcd(&self.defining, p);
        if h.is_constant() {
            return false;
        }
        // every root of h is a root of `defining`, so h has 0 or 1 roots here
        sturm_count(&h, &self.lo, &self.hi).expect("endpoints are non-roots of defining") == 1
    }

    /// Exact comparison. Equality is decided through the common factor of the
    /// defining polynomials; otherwise intervals are refined to disjointness.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        let h = gcd(&self.defining, &other.defining);
        if !h.is_constant() {
            let lo = if self.lo > other.lo { &self.lo } else { &other.lo };
            let hi = if self.hi < other.hi { &self.hi } else { &other.hi };
            if lo < hi && sturm_count(&h, lo, hi).expect("endpoints are non-roots") >= 1 {
                return Ordering::Equal;
            }
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if a.width() >= b.width() {
                a.bisect();
            } else {
                b.bisect();
            }
        }
    }

    /// Compare with a rational.
    pub fn cmp_rational(&self, x: &BigRational) -> Ordering {
        let mut a = self.clone();
        loop {
            if &a.hi <= x {
                return Ordering::Less;
            }
            if &a.lo >= x {
                return Ordering::Greater;
            }
            if self.defining.sign_at(x) == Ordering::Equal {
                return Ordering::Equal;
            }
            a.bisect();
        }
    }

    /// Decimal rendering truncated toward negative infinity, `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10), digits);
        let w = BigRational::new(BigInt::one(), &scale * BigInt::from(10));
        let a = self.refined(&w);
        // Round the midpoint; the enclosure is ten times narrower than the last digit.
        decimal_string(&a.midpoint(), digits)
    }
}

/// Deterministic decimal rendering of a rational, rounded half away from zero.
pub fn decimal_string(x: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = x * int(scale.clone());
    let r = scaled.round().to_integer();
    let neg = r.is_negative();
    let a = r.abs();
    let ip = &a / &scale;
    let fp = &a % &scale;
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push_str(&ip.to_string());
    if digits > 0 {
        s.push('.');
        s.push_str(&format!("{:0>width$}", fp.to_string(), width = digits));
    }
    s
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlgebraicNumber(root of {} in ({}, {}) ~ {})",
            self.defining,
            self.lo,
            self.hi,
            self.to_f64()
        )
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(12))
    }
}

/// Smallest root of a square-free `f` in `(lo, hi)`, if any.
pub fn smallest_root_in(
    f: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<Option<AlgebraicNumber>> {
    let chain = SturmChain::new(f);
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let mut count = chain.count(&lo, &hi)?;
    if count == 0 {
        return Ok(None);
    }
    while count > 1 {
        let mid = split_point(f, &lo, &hi);
        let left = chain.count(&lo, &mid)?;
        if left >= 1 {
            hi = mid;
            count = left;
        } else {
            lo = mid;
            count -= left;
        }
    }
    Ok(Some(AlgebraicNumber {
        defining: chain.polynomial().primitive_part(),
        lo,
        hi,
    }))
}

/// All real roots of a square-free `f` in `(lo, hi)`, ascending.
pub fn isolate_roots(
    f: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<Vec<AlgebraicNumber>> {
    let chain = SturmChain::new(f);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        match chain.count(&a, &b)? {
            0 => {}
            1 => out.push(AlgebraicNumber {
                defining: chain.polynomial().primitive_part(),
                lo: a,
                hi: b,
            }),
            _ => {
                let m = split_point(f, &a, &b);
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(out)
}

/// The smallest root `> 1` of `p` and its multiplicity.
pub fn smallest_root_above_one(p: &IntPolynomial) -> Result<Option<(AlgebraicNumber, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // (t - 1) factors do not contribute roots > 1
    let (_, q) = p.split_unit_root();
    if q.is_constant() {
        return Ok(None);
    }
    let one = BigRational::one();
    let hi = int(q.cauchy_bound());
    let mut best: Option<(AlgebraicNumber, usize)> = None;
    for (f, m) in squarefree_decompose(&q)? {
        if let Some(root) = smallest_root_in(&f, &one, &hi)? {
            let better = match &best {
                None => true,
                Some((b, _)) => root.cmp_exact(b) == Ordering::Less,
            };
            if better {
                best = Some((root, m));
            }
        }
    }
    Ok(best)
}

/// `mu`, `tau1` and `tau0` of a graph.
#[derive(Clone, Debug)]
pub struct RootReport {
    pub mu: usize,
    pub tau1: Option<AlgebraicNumber>,
    pub tau0: Option<AlgebraicNumber>,
}

/// `mu(G)` and `tau1(G)` only.
pub fn mu_tau1(g: &Graph) -> Result<(usize, Option<AlgebraicNumber>)> {
    let c = det_poly(g);
    if c.is_zero() {
        return Err(Error::Internal(format!(
            "Cayley-Menger polynomial vanishes identically for {g:?}"
        )));
    }
    Ok(match smallest_root_above_one(&c)? {
        Some((r, m)) => (m, Some(r)),
        None => (0, None),
    })
}

pub fn mu(g: &Graph) -> usize {
    mu_tau1(g).expect("nonzero Cayley-Menger polynomial").0
}

pub fn root_report(g: &Graph) -> Result<RootReport> {
    let (mu, tau1) = mu_tau1(g)?;
    let (_, tau1_bar) = mu_tau1(&complement(g))?;
    let tau0 = tau1_bar.map(|t| t.recip()).transpose()?;
    Ok(RootReport { mu, tau1, tau0 })
}
