//! Simple undirected graphs on dense vertex sets `0..n`.
//!
//! Adjacency is a packed symmetric bitset: row `u` occupies `words` consecutive
//! `u64`s and bit `v` of that row is set iff `{u, v}` is an edge.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

/// Simple undirected graph with an irreflexive, symmetric adjacency relation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        complement(&Graph::empty(n))
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for i in 0..n {
                g.add_edge(i, (i + 1) % n);
            }
        } else if n == 2 {
            g.add_edge(0, 1);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Triangular graph T(k): the line graph of K_k. Vertices are the 2-subsets
    /// of `0..k` in lexicographic order, adjacent when they intersect.
    pub fn triangular(k: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
            .collect();
        let mut g = Graph::empty(pairs.len());
        for (i, p) in pairs.iter().enumerate() {
            for (j, q) in pairs.iter().enumerate().skip(i + 1) {
                if p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Disjoint union of cliques with the given sizes, vertices numbered block by block.
    pub fn clique_union(sizes: &[usize]) -> Self {
        let n = sizes.iter().sum();
        let mut g = Graph::empty(n);
        let mut start = 0;
        for &k in sizes {
            for u in start..start + k {
                for v in u + 1..start + k {
                    g.add_edge(u, v);
                }
            }
            start += k;
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Panics on a self-loop or out-of-range vertex.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "invalid edge {u}-{v}");
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "invalid edge {u}-{v}");
        self.rows[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.rows[v * self.words + u / WORD] &= !(1 << (u % WORD));
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.remove_edge(u, v);
        } else {
            self.add_edge(u, v);
        }
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(u);
        (0..self.n).filter(move |&v| row[v / WORD] >> (v % WORD) & 1 == 1)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// Relabel so that new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.n);
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(order[i], order[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Subgraph induced by the first `k` vertices.
    pub fn truncated(&self, k: usize) -> Graph {
        let mut g = Graph::empty(k);
        for u in 0..k {
            for v in self.neighbors(u) {
                if u < v && v < k {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Copy with one extra vertex adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n + 1);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for &u in nbrs {
            g.add_edge(u, self.n);
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Partition of the vertex set into disjoint blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliquePartition {
    blocks: Vec<Vec<usize>>,
}

impl CliquePartition {
    /// Validates that `blocks` partition `0..n` exactly.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!("vertex {v} repeated")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} uncovered")));
        }
        blocks.sort();
        Ok(CliquePartition { blocks })
    }

    /// Consecutive blocks of the given sizes.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self> {
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut start = 0;
        for &k in sizes {
            blocks.push((start..start + k).collect());
            start += k;
        }
        CliquePartition::new(start, blocks)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn m(&self) -> usize {
        self.blocks.len()
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block index of every vertex.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v] = i;
            }
        }
        out
    }

    /// The graph consisting of exactly the intra-block edges.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n());
        for b in &self.blocks {
            for (i, &u) in b.iter().enumerate() {
                for &v in &b[i + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Vertex pairs `(u, v)`, `u < v`, lying in distinct blocks.
    pub fn inter_pairs(&self) -> Vec<(usize, usize)> {
        let block = self.block_of();
        let n = block.len();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if block[u] != block[v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True iff every block induces a clique in `g`.
    pub fn is_clique_cover_of(&self, g: &Graph) -> bool {
        self.n() == g.n() && self.blocks.iter().all(|b| g.is_clique(b))
    }
}

pub fn complement(g: &Graph) -> Graph {
    let mut out = Graph::empty(g.n);
    let tail = g.n % WORD;
    for u in 0..g.n {
        for w in 0..g.words {
            let mut word = !g.rows[u * g.words + w];
            if w == g.words - 1 && tail != 0 {
                word &= (1u64 << tail) - 1;
            }
            out.rows[u * g.words + w] = word;
        }
        out.rows[u * g.words + u / WORD] &= !(1 << (u % WORD));
    }
    out
}

/// The partition into connected components if every component is complete.
pub fn is_disjoint_clique_union(g: &Graph) -> Option<CliquePartition> {
    let comps = g.components();
    if comps.iter().all(|c| g.is_clique(c)) {
        Some(CliquePartition::new(g.n(), comps).expect("components partition V"))
    } else {
        None
    }
}

pub fn is_complete_multipartite(g: &Graph) -> bool {
    is_disjoint_clique_union(&complement(g)).is_some()
}

/// Disjoint union, with the vertices of `b` shifted past those of `a`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut g = Graph::empty(a.n() + b.n());
    for (u, v) in a.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in b.edges() {
        g.add_edge(u + a.n(), v + a.n());
    }
    g
}
