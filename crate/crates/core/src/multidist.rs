//! Edge colorings of `K_n` as s-distance sets.
//!
//! Convention: color 1 is the longest distance, fixed to 1, and color `i`
//! sits at squared distance `t_i` with `1 > t_2 > ... > t_s > 0`. Everything
//! is evaluated at exact rational points.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cover::{theta, ThetaResult};
use crate::det::{det_of_param_matrix, rational_det, ParamEntry, ParamMatrix};
use crate::error::{Error, Result};
use crate::graph::{complement, Graph};
use crate::par;
use crate::roots::{isolate_roots, mu_tau1, squarefree_part, AlgebraicNumber};

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Total coloring of the pairs of `0..n` with colors `1..=s`. Colors may go
/// unused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    s: usize,
    colors: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoringJson {
    n: usize,
    s: usize,
    pairs: Vec<[usize; 3]>,
}

impl EdgeColoring {
    /// `pairs` lists `(u, v, color)`; every pair must appear exactly once.
    pub fn new(n: usize, s: usize, pairs: &[(usize, usize, usize)]) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidColoring("need at least one color".into()));
        }
        let mut colors = vec![0; n * n.saturating_sub(1) / 2];
        for &(u, v, c) in pairs {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if c == 0 || c > s {
                return Err(Error::InvalidColoring(format!("color {c} outside 1..={s}")));
            }
            let k = pair_index(n, u, v);
            if colors[k] != 0 {
                return Err(Error::InvalidColoring(format!("pair ({u}, {v}) colored twice")));
            }
            colors[k] = c;
        }
        if let Some(k) = colors.iter().position(|&c| c == 0) {
            let (u, v) = Self::pair_at(n, k);
            return Err(Error::InvalidColoring(format!("pair ({u}, {v}) uncolored")));
        }
        Ok(EdgeColoring { n, s, colors })
    }

    fn pair_at(n: usize, k: usize) -> (usize, usize) {
        let mut u = 0;
        let mut k = k;
        while k >= n - u - 1 {
            k -= n - u - 1;
            u += 1;
        }
        (u, u + 1 + k)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn color(&self, u: usize, v: usize) -> usize {
        self.colors[pair_index(self.n, u, v)]
    }

    /// `G_i`: the pairs of color `i`.
    pub fn class_graph(&self, i: usize) -> Graph {
        let mut g = Graph::empty(self.n);
        for (k, &c) in self.colors.iter().enumerate() {
            if c == i {
                let (u, v) = Self::pair_at(self.n, k);
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn to_json(&self) -> String {
        let pairs = (0..self.colors.len())
            .map(|k| {
                let (u, v) = Self::pair_at(self.n, k);
                [u, v, self.colors[k]]
            })
            .collect();
        let j = ColoringJson {
            n: self.n,
            s: self.s,
            pairs,
        };
        serde_json::to_string(&j).expect("coloring serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: ColoringJson = serde_json::from_str(text)
            .map_err(|e| Error::InvalidColoring(format!("bad JSON: {e}")))?;
        let pairs: Vec<_> = j.pairs.iter().map(|p| (p[0], p[1], p[2])).collect();
        EdgeColoring::new(j.n, j.s, &pairs)
    }
}

/// Which side of a graph becomes the long distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Color 1 = edges of `g`. The two-distance parameter is `t = t_2 < 1`.
    Literal,
    /// Color 1 = non-edges of `g`, matching the two-distance modules where
    /// edges have length 1 and non-edges `sqrt(t)`, `t > 1`. Use
    /// [`aligned_param`] to translate `t`.
    Aligned,
}

/// Two-coloring of `K_n` from a graph that is neither complete nor empty.
pub fn coloring_from_graph(g: &Graph, orientation: Orientation) -> Result<EdgeColoring> {
    let n = g.n();
    if g.edge_count() == 0 || g.is_complete() {
        return Err(Error::InvalidColoring(
            "complete and empty graphs give a single color".into(),
        ));
    }
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            let long = match orientation {
                Orientation::Literal => g.has_edge(u, v),
                Orientation::Aligned => !g.has_edge(u, v),
            };
            pairs.push((u, v, if long { 1 } else { 2 }));
        }
    }
    EdgeColoring::new(n, 2, &pairs)
}

/// Parameter point `(t_2, ..., t_s)` with `1 > t_2 > ... > t_s > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamPoint {
    t: Vec<BigRational>,
}

impl ParamPoint {
    pub fn new(t: Vec<BigRational>) -> Result<Self> {
        let one = BigRational::one();
        let mut prev = &one;
        for x in &t {
            if !x.is_positive() || x >= prev {
                return Err(Error::InvalidParamPoint(
                    "need 1 > t_2 > ... > t_s > 0".into(),
                ));
            }
            prev = x;
        }
        Ok(ParamPoint { t })
    }

    /// Parses `"a/b,c/d,..."` or decimals such as `0.36`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text
            .split(',')
            .map(|s| parse_rational(s.trim()))
            .collect::<Result<Vec<_>>>()?;
        ParamPoint::new(t)
    }

    pub fn values(&self) -> &[BigRational] {
        &self.t
    }

    /// Squared distance of color `i`.
    pub fn sq_distance(&self, i: usize) -> BigRational {
        if i == 1 {
            BigRational::one()
        } else {
            self.t[i - 2].clone()
        }
    }
}

impl std::fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.t.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidParamPoint(format!("cannot parse `{s}`"));
    let int = |x: &str| x.parse::<BigInt>().map_err(|_| bad());
    if let Some((p, q)) = s.split_once('/') {
        let q = int(q)?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(int(p)?, q));
    }
    if let Some((w, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || w.starts_with('-') {
            return Err(bad());
        }
        let scale = BigInt::from(10).pow(frac.len() as u32);
        let whole = if w.is_empty() { BigInt::zero() } else { int(w)? };
        return Ok(BigRational::new(whole * &scale + int(frac)?, scale));
    }
    Ok(BigRational::from_integer(int(s)?))
}

/// The one orientation map: a graph's two-distance parameter `t > 1`
/// (edges 1, non-edges `sqrt(t)`) becomes `t_2 = 1/t` for its aligned coloring.
pub fn aligned_param(t: &BigRational) -> Result<ParamPoint> {
    if t <= &BigRational::one() {
        return Err(Error::InvalidParamPoint("aligned parameter needs t > 1".into()));
    }
    ParamPoint::new(vec![t.recip()])
}

/// Inverse of [`aligned_param`].
pub fn two_distance_param(p: &ParamPoint) -> Result<BigRational> {
    match p.values() {
        [t2] => Ok(t2.recip()),
        _ => Err(Error::InvalidParamPoint("expected a single parameter".into())),
    }
}

fn check_arity(l: &EdgeColoring, p: &ParamPoint) -> Result<()> {
    if p.t.len() + 1 != l.s {
        return Err(Error::InvalidParamPoint(format!(
            "{} colors need {} parameters, got {}",
            l.s,
            l.s - 1,
            p.t.len()
        )));
    }
    Ok(())
}

/// Squared-distance matrix, `n x n`.
pub fn distance_matrix_at(l: &EdgeColoring, p: &ParamPoint) -> Result<Vec<Vec<BigRational>>> {
    check_arity(l, p)?;
    let n = l.n;
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::zero()
                    } else {
                        p.sq_distance(l.color(i, j))
                    }
                })
                .collect()
        })
        .collect())
}

/// The bordered `(n+1) x (n+1)` matrix `A_L` at `p`.
pub fn a_matrix_at(l: &EdgeColoring, p: &ParamPoint) -> Result<Vec<Vec<BigRational>>> {
    let d = distance_matrix_at(l, p)?;
    let n = l.n;
    let mut a = vec![vec![BigRational::one(); n + 1]; n + 1];
    a[0][0] = BigRational::zero();
    for i in 0..n {
        a[i + 1][1..].clone_from_slice(&d[i]);
    }
    Ok(a)
}

/// Gram matrix by double centering.
pub fn gram_at(l: &EdgeColoring, p: &ParamPoint) -> Result<Vec<Vec<BigRational>>> {
    let d = distance_matrix_at(l, p)?;
    let n = l.n;
    let nn = BigRational::from_integer(BigInt::from(n));
    let row: Vec<BigRational> = d
        .iter()
        .map(|r| r.iter().fold(BigRational::zero(), |a, x| a + x) / &nn)
        .collect();
    let all = row.iter().fold(BigRational::zero(), |a, x| a + x) / &nn;
    let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| (&d[i][j] - &row[i] - &row[j] + &all) * &half)
                .collect()
        })
        .collect())
}

/// `(psd, rank)` of a symmetric rational matrix, by pivoted LDL^T.
pub fn psd_rank(m: &[Vec<BigRational>]) -> (bool, usize) {
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut live: Vec<usize> = (0..a.len()).collect();
    let mut rank = 0;
    loop {
        if live.iter().any(|&i| a[i][i].is_negative()) {
            return (false, rank);
        }
        let Some(pos) = live.iter().position(|&i| a[i][i].is_positive()) else {
            let clean = live.iter().all(|&i| live.iter().all(|&j| a[i][j].is_zero()));
            return (clean, rank);
        };
        let k = live.remove(pos);
        rank += 1;
        let pivot = a[k][k].clone();
        for &i in &live {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for &j in &live {
                let delta = &f * &a[k][j];
                a[i][j] -= delta;
            }
        }
    }
}

/// Embedding dimension at `p`: the Gram rank when the Gram matrix is
/// positive semidefinite, `None` when `p` is not realizable.
pub fn dim_at(l: &EdgeColoring, p: &ParamPoint) -> Result<Option<usize>> {
    let (psd, rank) = psd_rank(&gram_at(l, p)?);
    Ok(psd.then_some(rank))
}

/// `(M_L(p), C_L(p))`.
pub fn determinants_at(l: &EdgeColoring, p: &ParamPoint) -> Result<(BigRational, BigRational)> {
    Ok((
        rational_det(&distance_matrix_at(l, p)?),
        rational_det(&a_matrix_at(l, p)?),
    ))
}

/// `H_L = M_L / C_L` at `p`; `None` where `C_L(p) = 0`.
pub fn h_ratio_at(l: &EdgeColoring, p: &ParamPoint) -> Result<Option<BigRational>> {
    let (m, c) = determinants_at(l, p)?;
    Ok((!c.is_zero()).then(|| m / c))
}

/// Where the minimum rank was found.
#[derive(Clone, Debug)]
pub enum Witness {
    Rational(ParamPoint),
    /// Two colors only: `t_2` is algebraic.
    Algebraic(AlgebraicNumber),
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::Rational(p) => write!(f, "{p}"),
            Witness::Algebraic(a) => write!(f, "({})", a.to_decimal(15)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Sample {
    pub point: ParamPoint,
    pub dim: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct RankSearch {
    /// Minimum rank found, `None` if no realizable point was seen.
    pub dim: Option<usize>,
    pub witness: Option<Witness>,
    /// False when a rank drop was located but not evaluated exactly, or the
    /// budget cut the line search short.
    pub exact: bool,
    /// Grid evaluations, in grid order.
    pub grid: Vec<Sample>,
    /// Consecutive grid points (along `t_2`) where `C_L` changes sign.
    pub sign_changes: Vec<(ParamPoint, ParamPoint)>,
    pub evaluations: usize,
}

impl RankSearch {
    fn offer(&mut self, dim: usize, w: Witness) {
        if self.dim.is_none_or(|d| dim < d) {
            self.dim = Some(dim);
            self.witness = Some(w);
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Strictly decreasing `len`-tuples from `{1/N, ..., (N-1)/N}`.
fn grid_points(den: usize, len: usize) -> Vec<ParamPoint> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(len);
    fn rec(den: usize, len: usize, below: usize, cur: &mut Vec<usize>, out: &mut Vec<ParamPoint>) {
        if cur.len() == len {
            let t = cur
                .iter()
                .map(|&k| BigRational::new(BigInt::from(k), BigInt::from(den)))
                .collect();
            out.push(ParamPoint { t });
            return;
        }
        for k in (1..below).rev() {
            cur.push(k);
            rec(den, len, k, cur, out);
            cur.pop();
        }
    }
    rec(den, len, den, &mut cur, &mut out);
    out
}

/// Simplest fraction in `[lo, hi]`, `0 < lo <= hi`.
fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let ce = lo.ceil();
    if &ce <= hi {
        return ce;
    }
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

/// `C_L` along the line where `t_2` varies and `t_3, ..., t_s` are fixed,
/// scaled to integer coefficients.
fn line_polynomial(l: &EdgeColoring, rest: &[BigRational]) -> Result<crate::IntPolynomial> {
    let q = rest
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let small = |x: BigInt| {
        x.to_i64()
            .ok_or_else(|| Error::Internal("grid denominator overflows i64".into()))
    };
    let qi = small(q.clone())?;
    let n = l.n;
    let k = n + 1;
    let mut e = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            e.push(match (i, j) {
                (0, 0) => ParamEntry::ZERO,
                (0, _) | (_, 0) => ParamEntry::ONE,
                _ if i == j => ParamEntry::ZERO,
                _ => match l.color(i - 1, j - 1) {
                    1 => ParamEntry { constant: qi, linear: 0 },
                    2 => ParamEntry { constant: 0, linear: qi },
                    c => {
                        let v = &rest[c - 3] * BigRational::from_integer(q.clone());
                        ParamEntry { constant: small(v.to_integer())?, linear: 0 }
                    }
                },
            });
        }
    }
    det_of_param_matrix(&ParamMatrix::new(k, e))
}

/// Grid denominator for two colors.
fn grid_den_2(budget: usize) -> usize {
    budget.clamp(2, 4096) + 1
}

/// Minimum embedding dimension over the open parameter simplex.
///
/// A coarse rational grid comes first. Rank drops only happen where `C_L`
/// vanishes, so the grid is followed by exact root isolation: for two colors
/// the drop is at `1/tau1` of the short-distance graph with multiplicity
/// `mu`; for more colors `C_L` is isolated along grid lines in `t_2` and
/// rational roots are evaluated exactly.
pub fn minimize_rank(l: &EdgeColoring, budget: usize, seed: u64) -> Result<RankSearch> {
    if l.s < 2 {
        return Err(Error::InvalidColoring("rank search needs at least two colors".into()));
    }
    let budget = budget.max(1);
    let len = l.s - 1;
    let den = if len == 1 {
        grid_den_2(budget)
    } else {
        let mut den = len + 1;
        while binomial(den, len) <= budget / 2 {
            den += 1;
        }
        den
    };
    let points = grid_points(den, len);
    let evals = par::map(&points, |p| -> Result<(Option<usize>, Ordering)> {
        let (_, c) = determinants_at(l, p)?;
        Ok((dim_at(l, p)?, c.numer().sign().cmp(&num_bigint::Sign::NoSign)))
    });
    let mut search = RankSearch {
        dim: None,
        witness: None,
        exact: true,
        grid: Vec::with_capacity(points.len()),
        sign_changes: Vec::new(),
        evaluations: points.len(),
    };
    let mut signs = Vec::with_capacity(points.len());
    for (p, e) in points.into_iter().zip(evals) {
        let (dim, sign) = e?;
        if let Some(d) = dim {
            search.offer(d, Witness::Rational(p.clone()));
        }
        signs.push(sign);
        search.grid.push(Sample { point: p, dim });
    }
    let mut lines_of: BTreeMap<&[BigRational], Vec<usize>> = BTreeMap::new();
    for (i, s) in search.grid.iter().enumerate() {
        lines_of.entry(&s.point.t[1..]).or_default().push(i);
    }
    let mut changes = Vec::new();
    for idx in lines_of.values_mut() {
        idx.sort_by(|&a, &b| search.grid[a].point.t[0].cmp(&search.grid[b].point.t[0]));
        for w in idx.windows(2) {
            if signs[w[0]] != signs[w[1]] {
                changes.push((search.grid[w[0]].point.clone(), search.grid[w[1]].point.clone()));
            }
        }
    }
    search.sign_changes = changes;
    if len == 1 {
        let short = l.class_graph(2);
        let (mu, tau1) = mu_tau1(&short)?;
        if let Some(tau1) = tau1 {
            let t2 = tau1.recip()?;
            let dim = l.n - 1 - mu;
            if let Some(r) = t2.as_rational() {
                let p = ParamPoint::new(vec![r])?;
                if dim_at(l, &p)? != Some(dim) {
                    return Err(Error::Internal("rank at the rational root disagrees with mu".into()));
                }
                search.offer(dim, Witness::Rational(p));
            } else {
                search.offer(dim, Witness::Algebraic(t2));
            }
        }
        return Ok(search);
    }

    let mut lines = grid_points(den, len - 1)
        .into_iter()
        .map(|p| p.t)
        .filter(|rest| rest[0] < BigRational::one())
        .collect::<Vec<_>>();
    lines.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let room = budget.saturating_sub(search.evaluations);
    if lines.len() > room {
        lines.truncate(room);
        search.exact = false;
    }
    search.evaluations += lines.len();
    let found = par::map(&lines, |rest| line_roots(l, rest));
    for f in found {
        let (hits, unresolved) = f?;
        if unresolved {
            search.exact = false;
        }
        for (d, p) in hits {
            search.offer(d, Witness::Rational(p));
        }
    }
    Ok(search)
}

/// Exact ranks at the rational roots of `C_L` on one line, plus whether an
/// irrational root was left unevaluated.
fn line_roots(l: &EdgeColoring, rest: &[BigRational]) -> Result<(Vec<(usize, ParamPoint)>, bool)> {
    let c = line_polynomial(l, rest)?;
    if c.is_zero() || c.is_constant() {
        return Ok((Vec::new(), false));
    }
    let f = squarefree_part(&c)?;
    let mut eps = BigRational::new(BigInt::one(), BigInt::from(1u64 << 40));
    let (lo, hi) = loop {
        let lo = &rest[0] + &eps;
        let hi = BigRational::one() - &eps;
        if f.sign_at(&lo) != Ordering::Equal && f.sign_at(&hi) != Ordering::Equal {
            break (lo, hi);
        }
        eps /= BigRational::from_integer(BigInt::from(2));
    };
    let mut hits = Vec::new();
    let mut unresolved = false;
    let width = BigRational::new(BigInt::one(), BigInt::from(1u64 << 40));
    for root in isolate_roots(&f, &lo, &hi)? {
        let r = root.refined(&width);
        let guess = simplest_between(r.lower(), r.upper());
        if f.sign_at(&guess) != Ordering::Equal {
            unresolved = true;
            continue;
        }
        let mut t = vec![guess];
        t.extend_from_slice(rest);
        let p = ParamPoint::new(t)?;
        if let Some(d) = dim_at(l, &p)? {
            hits.push((d, p));
        }
    }
    Ok((hits, unresolved))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SdistVerdict {
    Candidate,
    No,
    Unresolved,
}

#[derive(Clone, Debug)]
pub struct SdistCheck {
    pub dim: usize,
    /// Clique cover of the complement of the long-distance graph.
    pub theta: ThetaResult,
    pub verdict: SdistVerdict,
}

/// Compare `theta` of the complement of `G_1` with `dim + 1`.
pub fn sdist_borsuk_check_dim(l: &EdgeColoring, dim: usize, node_budget: u64) -> SdistCheck {
    let th = theta(&complement(&l.class_graph(1)), node_budget);
    let verdict = if !th.exact {
        SdistVerdict::Unresolved
    } else if th.upper > dim + 1 {
        SdistVerdict::Candidate
    } else {
        SdistVerdict::No
    };
    SdistCheck {
        dim,
        theta: th,
        verdict,
    }
}

/// [`sdist_borsuk_check_dim`] at the dimension realized at `p`.
pub fn sdist_borsuk_check(l: &EdgeColoring, p: &ParamPoint, node_budget: u64) -> Result<SdistCheck> {
    let dim = dim_at(l, p)?
        .ok_or_else(|| Error::InvalidParamPoint(format!("{p} is not realizable")))?;
    Ok(sdist_borsuk_check_dim(l, dim, node_budget))
}
