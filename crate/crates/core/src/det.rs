//! Bordered Cayley–Menger matrices of a graph and their exact determinants.
//!
//! Off-diagonal entries are 1 on edges and `t` on non-edges. `C_G(t)` is the
//! determinant of the bordered matrix, `M_G(t)` of the unbordered one.
//!
//! Two independent determinant routes exist: evaluation at small integers
//! with fraction-free elimination followed by exact interpolation (the
//! default), and fraction-free elimination directly over `Z[t]` (the audit
//! path). They must agree exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par;
use crate::poly::IntPolynomial;

/// Matrix order from which evaluation points are processed in parallel.
const PAR_ORDER: usize = 24;

/// `constant + linear * t`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ParamEntry {
    pub constant: i64,
    pub linear: i64,
}

impl ParamEntry {
    pub const ZERO: ParamEntry = ParamEntry { constant: 0, linear: 0 };
    pub const ONE: ParamEntry = ParamEntry { constant: 1, linear: 0 };
    pub const T: ParamEntry = ParamEntry { constant: 0, linear: 1 };

    fn at(self, x: i64) -> BigInt {
        BigInt::from(self.constant) + BigInt::from(self.linear) * BigInt::from(x)
    }

    fn to_poly(self) -> IntPolynomial {
        IntPolynomial::from_i64(&[self.constant, self.linear])
    }
}

/// Square matrix whose entries are polynomials of degree at most one in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamMatrix {
    order: usize,
    entries: Vec<ParamEntry>,
}

impl ParamMatrix {
    pub fn new(order: usize, entries: Vec<ParamEntry>) -> Self {
        assert_eq!(entries.len(), order * order);
        ParamMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> ParamEntry {
        self.entries[i * self.order + j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    fn eval(&self, x: i64) -> Vec<Vec<BigInt>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j).at(x)).collect())
            .collect()
    }
}

fn pair_entry(g: &Graph, i: usize, j: usize) -> ParamEntry {
    if i == j {
        ParamEntry::ZERO
    } else if g.has_edge(i, j) {
        ParamEntry::ONE
    } else {
        ParamEntry::T
    }
}

/// The bordered `(n+1) x (n+1)` matrix `A_G(t)`.
pub fn cm_matrix(g: &Graph) -> ParamMatrix {
    let k = g.n() + 1;
    let mut e = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            e.push(match (i, j) {
                (0, 0) => ParamEntry::ZERO,
                (0, _) | (_, 0) => ParamEntry::ONE,
                _ => pair_entry(g, i - 1, j - 1),
            });
        }
    }
    ParamMatrix::new(k, e)
}

/// The `n x n` squared-distance matrix whose determinant is `M_G(t)`.
pub fn distance_matrix(g: &Graph) -> ParamMatrix {
    let n = g.n();
    let e = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| pair_entry(g, i, j))
        .collect();
    ParamMatrix::new(n, e)
}

/// `C_G(t)`
pub fn det_poly(g: &Graph) -> IntPolynomial {
    det_of_param_matrix(&cm_matrix(g)).expect("interpolation of an integer determinant")
}

/// `M_G(t)`
pub fn dist_det_poly(g: &Graph) -> IntPolynomial {
    det_of_param_matrix(&distance_matrix(g)).expect("interpolation of an integer determinant")
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Exact determinant of a rational matrix, by clearing denominators row by row.
pub fn rational_det(a: &[Vec<BigRational>]) -> BigRational {
    let mut scale = BigInt::one();
    let rows: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
            scale *= &l;
            row.iter()
                .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    BigRational::new(bareiss_det(rows), scale)
}

/// Evaluation points 0, 1, -1, 2, -2, ...
fn eval_points(count: usize) -> Vec<i64> {
    (0..count as i64)
        .map(|i| if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) })
        .collect()
}

/// Newton interpolation over the rationals, expanded to monomial form.
fn interpolate(xs: &[i64], ys: &[BigInt]) -> Result<IntPolynomial> {
    let k = xs.len();
    let mut dd: Vec<BigRational> = ys.iter().cloned().map(BigRational::from_integer).collect();
    for level in 1..k {
        for i in (level..k).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = BigInt::from(xs[i] - xs[i - level]);
            dd[i] = num / BigRational::from_integer(den);
        }
    }
    // Horner on the Newton form: p = dd0 + (t - x0)(dd1 + (t - x1)(...))
    let mut coeffs = vec![BigRational::zero(); k];
    for i in (0..k).rev() {
        // coeffs <- coeffs * (t - x_i) + dd_i
        let xi = BigRational::from_integer(BigInt::from(xs[i]));
        let mut next = vec![BigRational::zero(); k];
        for j in 0..k {
            if coeffs[j].is_zero() {
                continue;
            }
            if j + 1 < k {
                next[j + 1] += &coeffs[j];
            }
            next[j] -= &coeffs[j] * &xi;
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    let mut out = Vec::with_capacity(k);
    for (i, c) in coeffs.into_iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::Internal(format!(
                "interpolated coefficient of t^{i} is {c}, not an integer"
            )));
        }
        out.push(c.to_integer());
    }
    Ok(IntPolynomial::new(out))
}

/// Exact determinant by evaluating at `order + 1` small integers and
/// interpolating. A non-integral coefficient is an internal arithmetic error.
pub fn det_of_param_matrix(m: &ParamMatrix) -> Result<IntPolynomial> {
    let xs = eval_points(m.order() + 1);
    let ys: Vec<BigInt> = if m.order() >= PAR_ORDER {
        par::map(&xs, |&x| bareiss_det(m.eval(x)))
    } else {
        xs.iter().map(|&x| bareiss_det(m.eval(x))).collect()
    };
    let p = interpolate(&xs, &ys)?;
    if p.degree().is_some_and(|d| d > m.order()) {
        return Err(Error::Internal("determinant degree exceeds matrix order".into()));
    }
    Ok(p)
}

/// Fraction-free elimination over `Z[t]`. Independent of the evaluation path.
pub fn det_symbolic(m: &ParamMatrix) -> Result<IntPolynomial> {
    let n = m.order();
    if n == 0 {
        return Ok(IntPolynomial::constant(BigInt::one()));
    }
    let mut a: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).to_poly()).collect())
        .collect();
    let mut negate = false;
    let mut prev = IntPolynomial::constant(BigInt::one());
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(IntPolynomial::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = v.div_exact(&prev).ok_or_else(|| {
                    Error::Internal("inexact division in polynomial Bareiss".into())
                })?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}
