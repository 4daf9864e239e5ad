//! Clique covering number `theta(G)` as the chromatic number of the
//! complement, and independence number `alpha(G)` as its lower bound.

use serde::{Deserialize, Serialize};

use crate::graph::{complement, Graph};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaResult {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    /// Cliques of `G` covering every vertex; `cover.len() == upper`.
    pub cover: Vec<Vec<usize>>,
    pub nodes_expanded: u64,
}

fn bits_iter(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        let mut x = word;
        std::iter::from_fn(move || {
            if x == 0 {
                return None;
            }
            let b = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(w * 64 + b)
        })
    })
}

fn first_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

fn bits_and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn bits_empty(a: &[u64]) -> bool {
    a.iter().all(|&w| w == 0)
}

/// Maximum clique by branch and bound with a greedy-coloring bound.
struct MaxClique<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl MaxClique<'_> {
    /// Greedy sequential coloring of `p`; returns vertices with their color
    /// numbers in nondecreasing color order.
    fn color_sort(&self, p: &[u64]) -> Vec<(usize, usize)> {
        let mut uncolored = p.to_vec();
        let mut out = Vec::new();
        let mut color = 0;
        while !bits_empty(&uncolored) {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = first_bit(&q) {
                q[v / 64] &= !(1 << (v % 64));
                uncolored[v / 64] &= !(1 << (v % 64));
                for (w, r) in q.iter_mut().zip(self.g.row(v)) {
                    *w &= !r;
                }
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&mut self, mut p: Vec<u64>) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        let order = self.color_sort(&p);
        for &(v, c) in order.iter().rev() {
            if self.current.len() + c <= self.best.len() || self.aborted {
                return;
            }
            self.current.push(v);
            let np = bits_and(&p, self.g.row(v));
            if bits_empty(&np) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(np);
            }
            self.current.pop();
            p[v / 64] &= !(1 << (v % 64));
        }
    }
}

/// Maximum clique of `g` within `budget` search nodes: (clique, exact).
pub fn max_clique(g: &Graph, budget: u64) -> (Vec<usize>, bool, u64) {
    let n = g.n();
    if n == 0 {
        return (Vec::new(), true, 0);
    }
    let mut all = vec![0u64; g.words()];
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    // greedy start: repeatedly take the highest-degree candidate
    let mut greedy = Vec::new();
    let mut cand = all.clone();
    loop {
        let pick = bits_iter(&cand).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
        let Some(v) = pick else { break };
        greedy.push(v);
        cand = bits_and(&cand, g.row(v));
    }
    let mut s = MaxClique {
        g,
        best: greedy,
        current: Vec::new(),
        nodes: 0,
        budget,
        aborted: false,
    };
    s.expand(all);
    let mut best = s.best;
    best.sort_unstable();
    (best, !s.aborted, s.nodes)
}

/// Independence number: `(size, exact)`. When inexact, `size` is the best
/// independent set found, hence still a lower bound.
pub fn alpha(g: &Graph, node_budget: u64) -> (usize, bool) {
    let (set, exact, _) = max_clique(&complement(g), node_budget);
    (set.len(), exact)
}

/// Exact coloring by DSATUR branch and bound.
struct Dsatur<'a> {
    h: &'a Graph,
    degree: Vec<usize>,
    color: Vec<Option<usize>>,
    /// `adj_count[v][c]`: colored neighbors of `v` using color `c`
    adj_count: Vec<Vec<u32>>,
    sat: Vec<usize>,
    best: usize,
    best_coloring: Vec<usize>,
    lower: usize,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl Dsatur<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        for u in self.h.neighbors(v) {
            if self.adj_count[u][c] == 0 {
                self.sat[u] += 1;
            }
            self.adj_count[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = None;
        for u in self.h.neighbors(v) {
            self.adj_count[u][c] -= 1;
            if self.adj_count[u][c] == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    /// Highest saturation, then highest degree, then lowest index.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.h.n() {
            if self.color[v].is_some() {
                continue;
            }
            best = match best {
                None => Some(v),
                Some(b) if (self.sat[v], self.degree[v]) > (self.sat[b], self.degree[b]) => Some(v),
                keep => keep,
            };
        }
        best
    }

    fn search(&mut self, used: usize) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        let Some(v) = self.pick() else {
            if used < self.best {
                self.best = used;
                self.best_coloring = self.color.iter().map(|c| c.expect("complete")).collect();
            }
            return;
        };
        for c in 0..used {
            if self.adj_count[v][c] == 0 {
                self.assign(v, c);
                self.search(used);
                self.unassign(v, c);
                if self.aborted || self.best <= self.lower {
                    return;
                }
            }
        }
        if used + 1 < self.best {
            self.assign(v, used);
            self.search(used + 1);
            self.unassign(v, used);
        }
    }

    fn greedy(&mut self) -> Vec<usize> {
        let mut used = 0;
        while let Some(v) = self.pick() {
            let c = (0..used).find(|&c| self.adj_count[v][c] == 0).unwrap_or(used);
            used = used.max(c + 1);
            self.assign(v, c);
        }
        let out: Vec<usize> = self.color.iter().map(|c| c.expect("colored")).collect();
        for (v, &c) in out.iter().enumerate() {
            self.unassign(v, c);
        }
        out
    }
}

fn classes(coloring: &[usize]) -> Vec<Vec<usize>> {
    let k = coloring.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut out = vec![Vec::new(); k];
    for (v, &c) in coloring.iter().enumerate() {
        out[c].push(v);
    }
    out.sort();
    out
}

/// Clique covering number, exact if the search closes within `node_budget`.
pub fn theta(g: &Graph, node_budget: u64) -> ThetaResult {
    let n = g.n();
    if n == 0 {
        return ThetaResult {
            lower: 0,
            upper: 0,
            exact: true,
            cover: Vec::new(),
            nodes_expanded: 0,
        };
    }
    let h = complement(g);
    // a clique of the complement is an independent set of g
    let (clique, _, clique_nodes) = max_clique(&h, node_budget);
    let lower = clique.len().max(1);
    let mut s = Dsatur {
        h: &h,
        degree: (0..n).map(|v| h.degree(v)).collect(),
        color: vec![None; n],
        adj_count: vec![vec![0; n + 1]; n],
        sat: vec![0; n],
        best: usize::MAX,
        best_coloring: Vec::new(),
        lower,
        nodes: 0,
        budget: node_budget.saturating_sub(clique_nodes),
        aborted: false,
    };
    let greedy = s.greedy();
    s.best = greedy.iter().map(|&c| c + 1).max().unwrap_or(0);
    s.best_coloring = greedy;
    if s.best > lower {
        s.search(0);
    }
    let upper = s.best;
    let exact = !s.aborted || upper == lower;
    ThetaResult {
        lower: if exact { upper } else { lower },
        upper,
        exact,
        cover: classes(&s.best_coloring),
        nodes_expanded: s.nodes + clique_nodes,
    }
}

/// True iff every set is a clique of `g` and together they cover all vertices.
pub fn verify_cover(g: &Graph, cover: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; g.n()];
    for set in cover {
        if set.iter().any(|&v| v >= g.n()) || !g.is_clique(set) {
            return false;
        }
        for &v in set {
            seen[v] = true;
        }
    }
    seen.into_iter().all(|s| s)
}
