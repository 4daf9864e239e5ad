//! Generation of all graphs up to isomorphism and the exhaustive small-order
//! check of `theta + mu <= n`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm};
use crate::cover::{theta, DEFAULT_NODE_BUDGET};
use crate::graph::Graph;
use crate::io::encode_graph6;
use crate::par;
use crate::roots::mu_tau1;

/// Canonical representatives of all graphs on exactly `n` vertices, built by
/// extending every graph on `n - 1` vertices with each possible neighborhood
/// and deduplicating canonical forms.
pub fn graphs_of_order(n: usize) -> Vec<Graph> {
    let mut levels = graphs_up_to(n);
    levels.pop().unwrap_or_default()
}

/// `out[k]` holds the graphs on `k + 1` vertices, for `k < max_n`.
pub fn graphs_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    let mut out: Vec<Vec<Graph>> = Vec::with_capacity(max_n);
    if max_n == 0 {
        return out;
    }
    out.push(vec![Graph::empty(1)]);
    for k in 2..=max_n {
        let prev = out.last().expect("previous level");
        let forms: Vec<Vec<CanonicalForm>> = par::map(prev, |g| {
            (0u64..1 << (k - 1))
                .map(|mask| {
                    let nbrs: Vec<usize> = (0..k - 1).filter(|&v| mask >> v & 1 == 1).collect();
                    canonical_form(&g.with_vertex(&nbrs))
                })
                .collect()
        });
        let set: BTreeSet<CanonicalForm> = forms.into_iter().flatten().collect();
        out.push(set.iter().map(CanonicalForm::to_graph).collect());
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub n: usize,
    pub mu: usize,
    pub theta: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CertificationReport {
    pub max_n: usize,
    /// Number of graphs checked per order.
    pub per_order: Vec<(usize, usize)>,
    /// Counts per `(n, mu, theta, dim)` cell.
    pub cells: BTreeMap<(usize, usize, usize, usize), usize>,
    pub violations: Vec<Violation>,
    /// Graphs whose theta search hit the node budget.
    pub unresolved: Vec<String>,
    pub max_score: Option<i64>,
}

impl CertificationReport {
    pub fn total(&self) -> usize {
        self.per_order.iter().map(|&(_, c)| c).sum()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.unresolved.is_empty()
    }

    /// Tab-separated table of the cells followed by a summary line.
    pub fn to_table(&self) -> String {
        let mut s = String::from("n\tmu\ttheta\tdim\tcount\n");
        for (&(n, mu, th, dim), c) in &self.cells {
            s.push_str(&format!("{n}\t{mu}\t{th}\t{dim}\t{c}\n"));
        }
        for &(n, c) in &self.per_order {
            s.push_str(&format!("# n={n}: {c} graphs\n"));
        }
        s.push_str(&format!(
            "# total {} graphs, max score {}, {} violations, {} unresolved\n",
            self.total(),
            self.max_score.map_or("-".into(), |m| m.to_string()),
            self.violations.len(),
            self.unresolved.len()
        ));
        s
    }
}

struct Row {
    n: usize,
    mu: usize,
    theta: usize,
    exact: bool,
    graph6: String,
}

/// Check every graph up to isomorphism on at most `max_n` vertices.
pub fn enumerate_all(max_n: usize) -> CertificationReport {
    let mut report = CertificationReport {
        max_n,
        ..Default::default()
    };
    for level in graphs_up_to(max_n) {
        let Some(n) = level.first().map(Graph::n) else {
            continue;
        };
        let rows = par::map(&level, |g| {
            let (mu, _) = mu_tau1(g).expect("nonzero Cayley-Menger polynomial");
            let th = theta(g, DEFAULT_NODE_BUDGET);
            Row {
                n: g.n(),
                mu,
                theta: th.upper,
                exact: th.exact,
                graph6: encode_graph6(g),
            }
        });
        report.per_order.push((n, rows.len()));
        for r in rows {
            if !r.exact {
                report.unresolved.push(r.graph6);
                continue;
            }
            let dim = (r.n - r.mu).saturating_sub(1);
            *report.cells.entry((r.n, r.mu, r.theta, dim)).or_default() += 1;
            let score = r.theta as i64 + r.mu as i64 - r.n as i64;
            report.max_score = Some(report.max_score.map_or(score, |m| m.max(score)));
            if score > 0 {
                report.violations.push(Violation {
                    graph6: r.graph6,
                    n: r.n,
                    mu: r.mu,
                    theta: r.theta,
                });
            }
        }
    }
    report
}
