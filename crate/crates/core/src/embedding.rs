//! Embedding dimension, numeric realization, circumradius and the Borsuk
//! predicate `theta + mu > n`.

use std::cmp::Ordering;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cover::{theta, ThetaResult, DEFAULT_NODE_BUDGET};
use crate::det::{det_poly, dist_det_poly};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{gcd, IntPolynomial};
use crate::roots::{decimal_string, mu_tau1, AlgebraicNumber};

/// Relative eigenvalue cutoff for numeric rank.
pub const RANK_TOLERANCE: f64 = 1e-8;
/// Default isolating-interval width for `tau1` before realization.
pub fn default_precision() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(24))
}

/// Parses a positive precision written as `1e-24`, `0.001` or `1/1000`.
pub fn parse_precision(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidParamPoint(format!("bad precision `{s}`"));
    let int = |x: &str| x.parse::<BigInt>().map_err(|_| bad());
    let s = s.trim();
    let value = if let Some((p, q)) = s.split_once('/') {
        let q = int(q)?;
        if q.is_zero() {
            return Err(bad());
        }
        BigRational::new(int(p)?, q)
    } else {
        let (mant, exp) = match s.split_once(['e', 'E']) {
            Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
            None => (s, 0),
        };
        let (whole, frac) = mant.split_once('.').unwrap_or((mant, ""));
        if !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = int(&format!("{}{frac}", if whole.is_empty() { "0" } else { whole }))?;
        let exp = exp - frac.len() as i32;
        let ten = BigInt::from(10).pow(exp.unsigned_abs());
        if exp >= 0 {
            BigRational::from_integer(digits * ten)
        } else {
            BigRational::new(digits, ten)
        }
    };
    if !value.is_positive() {
        return Err(bad());
    }
    Ok(value)
}

const REALIZE_RETRIES: usize = 4;
/// Squared long distance used for graphs with `mu = 0` that are not complete.
const SIMPLEX_T: f64 = 2.0;

pub fn dim2e(g: &Graph) -> usize {
    let (mu, _) = mu_tau1(g).expect("nonzero Cayley-Menger polynomial");
    (g.n() - mu).saturating_sub(1)
}

/// Points realizing a graph with edge length 1 and non-edge length `sqrt(t)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointConfiguration {
    pub dim: usize,
    pub points: Vec<Vec<f64>>,
    /// Squared non-edge distance.
    pub t: f64,
    /// Largest absolute deviation of a realized distance from its target.
    pub max_deviation: f64,
    /// Gram eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
}

impl PointConfiguration {
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.points[i]
            .iter()
            .zip(&self.points[j])
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    /// Least-squares circumcenter and the spread max - min of the vertex
    /// distances to it. `None` for fewer than two points.
    pub fn circumcenter_spread(&self) -> Option<(Vec<f64>, f64)> {
        let n = self.points.len();
        if n < 2 || self.dim == 0 {
            return None;
        }
        let p0 = &self.points[0];
        let norm2 = |p: &[f64]| p.iter().map(|x| x * x).sum::<f64>();
        let a = DMatrix::from_fn(n - 1, self.dim, |i, k| 2.0 * (self.points[i + 1][k] - p0[k]));
        let b = DVector::from_fn(n - 1, |i, _| norm2(&self.points[i + 1]) - norm2(p0));
        // the points span `dim` affine dimensions, so `a` has full column rank
        let c = (a.transpose() * &a).cholesky()?.solve(&(a.transpose() * b));
        let center: Vec<f64> = c.iter().copied().collect();
        let dists: Vec<f64> = self
            .points
            .iter()
            .map(|p| {
                p.iter()
                    .zip(&center)
                    .map(|(x, y)| (x - y) * (x - y))
                    .sum::<f64>()
                    .sqrt()
            })
            .collect();
        let max = dists.iter().cloned().fold(f64::MIN, f64::max);
        let min = dists.iter().cloned().fold(f64::MAX, f64::min);
        Some((center, max - min))
    }
}

fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Classical multidimensional scaling of the squared-distance matrix
/// (1 on edges, `t` on non-edges), keeping eigenvalues above the relative
/// tolerance.
fn embed_at(g: &Graph, t: f64, expected_dim: usize) -> Result<PointConfiguration> {
    let n = g.n();
    let d = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            0.0
        } else if g.has_edge(i, j) {
            1.0
        } else {
            t
        }
    });
    let j = DMatrix::identity(n, n) - DMatrix::from_element(n, n, 1.0 / n as f64);
    let gram = (&j * d * &j) * -0.5;
    let gram = (&gram + gram.transpose()) * 0.5;
    let eig = SymmetricEigen::new(gram);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[b]
            .partial_cmp(&eig.eigenvalues[a])
            .unwrap_or(Ordering::Equal)
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let top = eigenvalues.first().copied().unwrap_or(0.0).max(0.0);
    let tol = RANK_TOLERANCE * top.max(f64::MIN_POSITIVE);
    if let Some(&min) = eigenvalues.last() {
        if min < -tol {
            return Err(Error::NegativeEigenvalue { value: min });
        }
    }
    let kept = eigenvalues.iter().filter(|&&l| l > tol).count();
    if kept != expected_dim {
        return Err(Error::RankMismatch {
            expected: expected_dim,
            found: kept,
        });
    }
    let points = (0..n)
        .map(|i| {
            order[..kept]
                .iter()
                .map(|&k| eig.eigenvectors[(i, k)] * eig.eigenvalues[k].sqrt())
                .collect()
        })
        .collect();
    let mut cfg = PointConfiguration {
        dim: kept,
        points,
        t,
        max_deviation: 0.0,
        eigenvalues,
    };
    let target_long = t.sqrt();
    for a in 0..n {
        for b in a + 1..n {
            let target = if g.has_edge(a, b) { 1.0 } else { target_long };
            cfg.max_deviation = cfg.max_deviation.max((cfg.distance(a, b) - target).abs());
        }
    }
    Ok(cfg)
}

/// Realize `g` as a two-distance set in dimension `n - mu - 1`.
///
/// `tau1` is refined to `precision` before the numeric step. Graphs with
/// `mu = 0` are realized as simplices (non-edges at squared distance 2).
/// Distances are certified against `max(10 * sqrt(precision), 1e-9)`.
pub fn realize(g: &Graph, precision: &BigRational) -> Result<PointConfiguration> {
    let (mu, tau1) = mu_tau1(g)?;
    let dim = (g.n() - mu).saturating_sub(1);
    let tolerance = (10.0 * rational_to_f64(precision).sqrt()).max(1e-9);
    let certify = |cfg: PointConfiguration| {
        if cfg.max_deviation > tolerance {
            Err(Error::CertificationFailed {
                deviation: cfg.max_deviation,
                tolerance,
            })
        } else {
            Ok(cfg)
        }
    };
    let Some(tau1) = tau1 else {
        return certify(embed_at(g, SIMPLEX_T, dim)?);
    };
    let mut width = precision.clone();
    let mut last = None;
    for _ in 0..=REALIZE_RETRIES {
        let t = rational_to_f64(&tau1.refined(&width).midpoint());
        match embed_at(g, t, dim) {
            Ok(cfg) => return certify(cfg),
            Err(e @ Error::RankMismatch { .. }) => {
                last = Some(e);
                width = &width * &width;
            }
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// Closed rational interval.
#[derive(Clone, Debug, PartialEq)]
struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    fn add(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn mul(&self, o: &Interval) -> Interval {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        Interval {
            lo: c.iter().min().expect("four").clone(),
            hi: c.iter().max().expect("four").clone(),
        }
    }

    fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    fn recip(&self) -> Interval {
        assert!(!self.contains_zero());
        Interval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        }
    }
}

fn eval_interval(p: &IntPolynomial, x: &Interval) -> Interval {
    let mut acc = Interval::point(BigRational::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&Interval::point(BigRational::from_integer(c.clone())));
    }
    acc
}

const SQRT_SCALE_DIGITS: u32 = 18;

fn sqrt_floor(x: &BigRational) -> BigRational {
    let s = BigInt::from(10).pow(SQRT_SCALE_DIGITS);
    let scaled = (x * BigRational::from_integer(&s * &s)).floor().to_integer();
    BigRational::new(scaled.sqrt(), s)
}

fn sqrt_ceil(x: &BigRational) -> BigRational {
    let s = BigInt::from(10).pow(SQRT_SCALE_DIGITS);
    let scaled = (x * BigRational::from_integer(&s * &s)).ceil().to_integer();
    let r = scaled.sqrt();
    let r = if &r * &r == scaled { r } else { r + 1 };
    BigRational::new(r, s)
}

/// Certified enclosure of the circumradius.
#[derive(Clone, Debug, PartialEq)]
pub struct Radius {
    pub lower: BigRational,
    pub upper: BigRational,
}

impl Radius {
    pub fn value(&self) -> f64 {
        rational_to_f64(&((&self.lower + &self.upper) / BigRational::from_integer(2.into())))
    }

    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }

    pub fn to_decimal(&self, digits: usize) -> String {
        decimal_string(
            &((&self.lower + &self.upper) / BigRational::from_integer(2.into())),
            digits,
        )
    }
}

/// Enclosure width for the radius.
fn radius_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(12))
}

/// Circumradius `sqrt(F_G(tau1))` with `F_G = -M_G / (2 C_G)` reduced to
/// lowest terms. `None` when `mu = 0` or the reduced denominator vanishes at
/// `tau1` (the realization is not spherical).
pub fn spherical_radius(g: &Graph) -> Result<Option<Radius>> {
    let (mu, tau1) = mu_tau1(g)?;
    let Some(tau1) = tau1.filter(|_| mu >= 1) else {
        return Ok(None);
    };
    radius_at(&det_poly(g), &dist_det_poly(g), &tau1)
}

fn radius_at(c: &IntPolynomial, m: &IntPolynomial, tau1: &AlgebraicNumber) -> Result<Option<Radius>> {
    let h = gcd(m, c);
    let (num, den) = if h.is_zero() {
        (m.clone(), c.clone())
    } else {
        let q = |p: &IntPolynomial| {
            p.div_exact(&h)
                .ok_or_else(|| Error::Internal("gcd does not divide".into()))
        };
        (q(m)?, q(c)?)
    };
    if tau1.is_root_of(&den) {
        return Ok(None);
    }
    let two = BigRational::from_integer(2.into());
    let mut a = tau1.clone();
    let target = radius_width();
    for _ in 0..400 {
        let x = Interval {
            lo: a.lower().clone(),
            hi: a.upper().clone(),
        };
        let dv = eval_interval(&den, &x);
        if !dv.contains_zero() {
            let f = eval_interval(&num, &x).mul(&dv.recip());
            // F = -f / 2
            let f = Interval {
                lo: -&f.hi / &two,
                hi: -&f.lo / &two,
            };
            if f.hi.is_negative() {
                return Err(Error::NegativeRadiusSquared);
            }
            if f.lo.is_positive() {
                let r = Radius {
                    lower: sqrt_floor(&f.lo),
                    upper: sqrt_ceil(&f.hi),
                };
                if r.width() <= target {
                    return Ok(Some(r));
                }
            }
        }
        let w = a.width() / BigRational::from_integer(BigInt::one() << 16usize);
        a.refine(&w);
    }
    Err(Error::Internal("radius enclosure did not converge".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub limit: u128,
    pub pass: bool,
    /// `limit - n`, negative when violated.
    pub slack: i128,
}

impl BoundCheck {
    fn new(n: u128, limit: u128) -> Self {
        BoundCheck {
            limit,
            pass: n <= limit,
            slack: limit as i128 - n as i128,
        }
    }
}

/// Two-distance cardinality bounds in dimension `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsVerdict {
    pub n: u128,
    pub d: u128,
    /// `n <= (d+1)(d+2)/2`
    pub general: BoundCheck,
    /// `n <= d(d+1)/2`, checked for spherical sets only.
    pub spherical: Option<BoundCheck>,
}

impl BoundsVerdict {
    pub fn pass(&self) -> bool {
        self.general.pass && self.spherical.as_ref().is_none_or(|s| s.pass)
    }
}

/// `d(d+1)/2`
pub fn c2(d: u128) -> u128 {
    d * (d + 1) / 2
}

pub fn general_bound(d: u128) -> u128 {
    (d + 1) * (d + 2) / 2
}

pub fn cardinality_bounds(n: u128, d: u128, spherical: bool) -> BoundsVerdict {
    assert!(d >= 1, "dimension must be positive");
    BoundsVerdict {
        n,
        d,
        general: BoundCheck::new(n, general_bound(d)),
        spherical: spherical.then(|| BoundCheck::new(n, c2(d))),
    }
}

/// Known counterexample parameters, kept as metadata: `(name, n, d, lower bound on B(S))`.
pub const KNOWN_COUNTEREXAMPLES: [(&str, u128, u128, u128); 3] = [
    ("Bondarenko S1", 416, 65, 84),
    ("Bondarenko S2", 31671, 782, 1377),
    ("Jenrich S3", 352, 64, 71),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ThetaValue {
    Exact(usize),
    Bounds([usize; 2]),
}

pub const FLAG_COUNTEREXAMPLE: &str = "COUNTEREXAMPLE";
pub const FLAG_THETA_INEXACT: &str = "THETA_INEXACT";
pub const FLAG_SPHERICAL_AUDIT: &str = "SPHERICAL_AUDIT_DISAGREES";
pub const FLAG_REALIZATION_ERROR: &str = "REALIZATION_ERROR";

pub const TAU_DIGITS: usize = 15;
pub const RADIUS_DIGITS: usize = 10;
/// Circumcenter spread below which the numeric audit calls a realization spherical.
pub const SPHERICAL_SPREAD_TOLERANCE: f64 = 1e-6;

/// Invariants of one graph. Serializes to the stable report schema.
#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingReport {
    pub schema: u32,
    pub n: usize,
    pub mu: usize,
    pub tau1: Option<String>,
    pub dim: usize,
    pub theta: ThetaValue,
    pub theta_exact: bool,
    pub borsuk_score: Option<i64>,
    pub spherical: bool,
    pub radius: Option<String>,
    pub bounds: Option<BoundsVerdict>,
    pub flags: Vec<String>,
    #[serde(skip)]
    pub tau1_exact: Option<AlgebraicNumber>,
    #[serde(skip)]
    pub theta_result: ThetaResult,
    #[serde(skip)]
    pub radius_enclosure: Option<Radius>,
}

impl EmbeddingReport {
    pub fn is_counterexample(&self) -> bool {
        self.flags.iter().any(|f| f == FLAG_COUNTEREXAMPLE)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn borsuk_check(g: &Graph) -> Result<EmbeddingReport> {
    borsuk_check_with(g, DEFAULT_NODE_BUDGET, true)
}

/// Full report. `audit` additionally realizes the graph numerically and
/// cross-checks sphericality against the circumcenter spread.
pub fn borsuk_check_with(g: &Graph, node_budget: u64, audit: bool) -> Result<EmbeddingReport> {
    let n = g.n();
    let (mu, tau1) = mu_tau1(g)?;
    let dim = (n - mu).saturating_sub(1);
    let th = theta(g, node_budget);
    let mut flags = Vec::new();
    let (theta_value, score) = if th.exact {
        (
            ThetaValue::Exact(th.upper),
            Some(th.upper as i64 + mu as i64 - n as i64),
        )
    } else {
        flags.push(FLAG_THETA_INEXACT.to_string());
        (ThetaValue::Bounds([th.lower, th.upper]), None)
    };
    if score.is_some_and(|s| s > 0) {
        flags.push(FLAG_COUNTEREXAMPLE.to_string());
    }
    let radius = match &tau1 {
        Some(t) if mu >= 1 => radius_at(&det_poly(g), &dist_det_poly(g), t)?,
        _ => None,
    };
    let spherical = radius.is_some();
    if audit && mu >= 1 {
        match realize(g, &default_precision()) {
            Ok(cfg) => {
                if let Some((_, spread)) = cfg.circumcenter_spread() {
                    if (spread < SPHERICAL_SPREAD_TOLERANCE) != spherical {
                        flags.push(FLAG_SPHERICAL_AUDIT.to_string());
                    }
                }
            }
            Err(_) => flags.push(FLAG_REALIZATION_ERROR.to_string()),
        }
    }
    let bounds = (dim >= 1).then(|| cardinality_bounds(n as u128, dim as u128, spherical));
    Ok(EmbeddingReport {
        schema: 1,
        n,
        mu,
        tau1: tau1.as_ref().map(|t| t.to_decimal(TAU_DIGITS)),
        dim,
        theta: theta_value,
        theta_exact: th.exact,
        borsuk_score: score,
        spherical,
        radius: radius.as_ref().map(|r| r.to_decimal(RADIUS_DIGITS)),
        bounds,
        flags,
        tau1_exact: tau1,
        theta_result: th,
        radius_enclosure: radius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_strings() {
        let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        assert_eq!(parse_precision("1e-3").unwrap(), r(1, 1000));
        assert_eq!(parse_precision("0.25").unwrap(), r(1, 4));
        assert_eq!(parse_precision("2.5e-1").unwrap(), r(1, 4));
        assert_eq!(parse_precision("1/8").unwrap(), r(1, 8));
        assert_eq!(parse_precision("1e-24").unwrap(), default_precision());
        for bad in ["0", "-1e-3", "x", "1/0", "1e"] {
            assert!(parse_precision(bad).is_err(), "{bad}");
        }
    }

    fn precision() -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(10).pow(24))
    }

    #[test]
    fn dimensions_of_named_graphs() {
        for n in 1..6 {
            assert_eq!(dim2e(&Graph::complete(n)), n - 1);
        }
        assert_eq!(dim2e(&Graph::cycle(5)), 2);
        assert_eq!(dim2e(&Graph::triangular(5)), 4);
    }

    #[test]
    fn square_realizes_as_unit_square() {
        let cfg = realize(&Graph::cycle(4), &precision()).unwrap();
        assert_eq!(cfg.dim, 2);
        // explicit unit square 0-1-2-3
        let sq: [[f64; 2]; 4] = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
        for i in 0..4 {
            for j in 0..4 {
                let e: f64 = ((sq[i][0] - sq[j][0]).powi(2) + (sq[i][1] - sq[j][1]).powi(2)).sqrt();
                assert!((cfg.distance(i, j) - e).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn pentagon_realizes_as_regular_pentagon() {
        let cfg = realize(&Graph::cycle(5), &precision()).unwrap();
        assert_eq!(cfg.dim, 2);
        let r = 1.0 / (2.0 * (std::f64::consts::PI / 5.0).sin());
        let pts: Vec<[f64; 2]> = (0..5)
            .map(|k| {
                let a = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
                [r * a.cos(), r * a.sin()]
            })
            .collect();
        for i in 0..5 {
            for j in 0..5 {
                let e = ((pts[i][0] - pts[j][0]).powi(2) + (pts[i][1] - pts[j][1]).powi(2)).sqrt();
                assert!((cfg.distance(i, j) - e).abs() < 1e-9, "{i}{j}");
            }
        }
    }

    #[test]
    fn triangle_is_a_simplex() {
        let cfg = realize(&Graph::complete(3), &precision()).unwrap();
        assert_eq!(cfg.dim, 2);
        assert!(cfg.max_deviation < 1e-12);
    }

    #[test]
    fn radii_of_square_and_pentagon() {
        let r4 = spherical_radius(&Graph::cycle(4)).unwrap().unwrap();
        assert!((r4.value() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-10);
        assert!(r4.width() <= BigRational::new(1.into(), BigInt::from(10).pow(9)));
        let r5 = spherical_radius(&Graph::cycle(5)).unwrap().unwrap();
        let expect = 1.0 / (2.0 * 36f64.to_radians().sin());
        assert!((r5.value() - expect).abs() < 1e-10);
        assert!(spherical_radius(&Graph::complete(4)).unwrap().is_none());
    }

    #[test]
    fn non_spherical_configuration_has_no_radius() {
        // scan small graphs for a realization whose vertices are not concyclic
        let mut found = false;
        for n in 4..=6 {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            for mask in (0u32..1 << pairs.len()).step_by(3) {
                let mut g = Graph::empty(n);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
                let (mu, _) = mu_tau1(&g).unwrap();
                if mu == 0 {
                    continue;
                }
                let Ok(cfg) = realize(&g, &precision()) else { continue };
                let (_, spread) = cfg.circumcenter_spread().unwrap();
                if spread > 1e-3 {
                    assert!(spherical_radius(&g).unwrap().is_none(), "{g:?}");
                    found = true;
                    break;
                }
            }
            if found {
                break;
            }
        }
        assert!(found, "no non-spherical realization found");
    }

    #[test]
    fn cardinality_comparisons() {
        assert_eq!(c2(65), 2145);
        assert_eq!(c2(64), 2080);
        assert_eq!(c2(782), 306153);
        assert_eq!(general_bound(65), 2211);
        for (_, n, d, _) in KNOWN_COUNTEREXAMPLES {
            let v = cardinality_bounds(n, d, true);
            assert!(v.pass());
        }
        let v = cardinality_bounds(416, 65, true);
        assert_eq!(v.spherical.unwrap().slack, 2145 - 416);
        assert!(!cardinality_bounds(7, 2, false).general.pass);
    }

    #[test]
    fn borsuk_reports() {
        let r = borsuk_check(&Graph::cycle(5)).unwrap();
        assert_eq!((r.mu, r.dim, r.theta.clone(), r.borsuk_score), (2, 2, ThetaValue::Exact(3), Some(0)));
        assert!(r.spherical && !r.is_counterexample());
        assert!(r.flags.is_empty(), "{:?}", r.flags);

        let r = borsuk_check(&Graph::triangular(5)).unwrap();
        assert_eq!((r.mu, r.dim, r.borsuk_score), (5, 4, Some(-2)));

        let r = borsuk_check(&Graph::clique_union(&[3, 2, 1])).unwrap();
        assert_eq!((r.mu, r.theta.clone(), r.borsuk_score), (0, ThetaValue::Exact(3), Some(-3)));
        assert!(r.radius.is_none());
    }

    #[test]
    fn report_json_fields() {
        let r = borsuk_check(&Graph::cycle(4)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        for k in [
            "n", "mu", "tau1", "dim", "theta", "theta_exact", "borsuk_score", "spherical", "radius",
            "bounds", "flags", "schema",
        ] {
            assert!(keys.contains(&k), "{k}");
        }
        assert_eq!(keys.len(), 12);
        assert_eq!(v["tau1"], "2.000000000000000");
        assert_eq!(r.to_json(), borsuk_check(&Graph::cycle(4)).unwrap().to_json());
    }
}
