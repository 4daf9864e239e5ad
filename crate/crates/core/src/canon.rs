//! Canonical labeling by color refinement with individualization.
//!
//! The search tree branches on the first non-singleton cell of the equitable
//! partition and keeps the lexicographically largest relabeled adjacency.
//! Vertices of a cell that are twins (same neighborhood up to each other)
//! yield isomorphic subtrees, so only one representative per twin class is
//! expanded.

use sha2::{Digest, Sha256};

use crate::graph::Graph;

/// Upper-triangle adjacency bits of the canonically relabeled graph.
/// Two graphs are isomorphic iff their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Stable 64-bit digest of the form.
    pub fn hash64(&self) -> u64 {
        let mut h = Sha256::new();
        h.update((self.n as u64).to_le_bytes());
        for w in &self.bits {
            h.update(w.to_le_bytes());
        }
        let d = h.finalize();
        u64::from_le_bytes(d[..8].try_into().expect("digest has 32 bytes"))
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.bits[k / 64] >> (63 - k % 64) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

fn form_of(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = g.n();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

/// Replace colors by their dense rank.
fn normalize(colors: &mut [u32]) {
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colors.iter_mut() {
        *c = distinct.binary_search(c).expect("present") as u32;
    }
}

/// Refine a dense coloring to the coarsest equitable refinement. The new
/// color order is a function of (old color, neighbor counts per color), so
/// refinement commutes with relabeling.
fn refine(g: &Graph, colors: &mut Vec<u32>) {
    let n = g.n();
    let mut k = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut counts = vec![0u32; k];
                for u in g.neighbors(v) {
                    counts[colors[u] as usize] += 1;
                }
                (colors[v], counts, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = vec![0u32; n];
        let mut c = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                c += 1;
            }
            next[sigs[i].2] = c;
        }
        let new_k = if n == 0 { 0 } else { c as usize + 1 };
        *colors = next;
        if new_k == k {
            return;
        }
        k = new_k;
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    (0..g.n())
        .filter(|&w| w != u && w != v)
        .all(|w| g.has_edge(u, w) == g.has_edge(v, w))
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, mut colors: Vec<u32>) {
        refine(self.g, &mut colors);
        let n = self.g.n();
        let k = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        if k == n {
            let mut order = vec![0; n];
            for (v, &c) in colors.iter().enumerate() {
                order[c as usize] = v;
            }
            let form = form_of(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| form > *b) {
                self.best = Some((form, order));
            }
            return;
        }
        let mut sizes = vec![0usize; k];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).expect("not discrete") as u32;
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut reps: Vec<usize> = Vec::new();
        for &v in &cell {
            if !reps.iter().any(|&r| are_twins(self.g, r, v)) {
                reps.push(v);
            }
        }
        for v in reps {
            let mut next: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
            next[v] = 2 * colors[v];
            normalize(&mut next);
            self.descend(next);
        }
    }
}

/// Vertex order `order` such that `g.permuted(&order)` is the canonical graph.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    canonical(g).1
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical(g).0
}

fn canonical(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    let mut colors: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    normalize(&mut colors);
    let mut s = Search { g, best: None };
    s.descend(colors);
    let (bits, order) = s.best.unwrap_or_default();
    (CanonicalForm { n, bits }, order)
}

/// Isomorphism-invariant 64-bit hash. Equal forms give equal hashes; the form
/// itself decides isomorphism when hashes collide.
pub fn canonical_hash(g: &Graph) -> u64 {
    canonical_form(g).hash64()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}
