//! Local search for graphs with `m + mu(G) > n` over a fixed clique
//! partition `C0`: intra-block edges stay, inter-block edges are toggled.
//!
//! A positive score only uses the block count `m`, which bounds `theta(G)`
//! from above. Candidates are therefore re-checked with an exact clique
//! cover before anything is claimed.

use std::collections::{HashMap, VecDeque};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::Mutex;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::cover::{theta, DEFAULT_NODE_BUDGET};
use crate::embedding::{borsuk_check_with, EmbeddingReport};
use crate::error::{Error, Result};
use crate::graph::{CliquePartition, Graph};
use crate::io::{encode_graph6, parse_graph6};
use crate::par;
use crate::roots::mu_tau1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlateauPolicy {
    /// End the restart once the sideways budget is spent.
    Restart,
    /// Apply one random move and keep climbing until `max_iters`.
    Perturb,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    /// Iterations per restart.
    pub max_iters: u64,
    pub restarts: usize,
    pub tabu_length: usize,
    pub sideways_limit: usize,
    pub plateau_policy: PlateauPolicy,
    /// Node budget of the exact clique cover used to verify candidates.
    pub node_budget: u64,
    pub seed: u64,
    /// Only visit graphs whose clique cover number equals the block count,
    /// so that `C0` stays a minimum clique cover and the score is exact.
    #[serde(default)]
    pub keep_cover_minimal: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_iters: 200,
            restarts: 16,
            tabu_length: 8,
            sideways_limit: 10,
            plateau_policy: PlateauPolicy::Restart,
            node_budget: DEFAULT_NODE_BUDGET * 10,
            seed: 0,
            keep_cover_minimal: false,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_iters == 0 || self.restarts == 0 || self.node_budget == 0 {
            return Err(Error::Log(
                "max_iters, restarts and node_budget must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// `"BxK"` for `B` blocks of size `K`, or a comma list of block sizes.
pub fn parse_blocks(text: &str) -> Result<CliquePartition> {
    let bad = || Error::InvalidPartition(format!("bad block sizes `{text}`"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let sizes: Vec<usize> = if let Some((b, k)) = text.split_once(['x', 'X']) {
        vec![num(k)?; num(b)?]
    } else {
        text.split(',').map(num).collect::<Result<_>>()?
    };
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(bad());
    }
    CliquePartition::from_sizes(&sizes)
}

/// `m + mu(g) - n` for a graph covered by the blocks of `c0`.
pub fn score(g: &Graph, c0: &CliquePartition) -> Result<i64> {
    if !c0.is_clique_cover_of(g) {
        return Err(Error::NotCliqueCover);
    }
    let (mu, _) = mu_tau1(g)?;
    Ok(score_of(c0, mu))
}

fn score_of(c0: &CliquePartition, mu: usize) -> i64 {
    c0.m() as i64 + mu as i64 - c0.n() as i64
}

/// Best state seen so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snapshot {
    pub graph: Graph,
    pub mu: usize,
    pub score: i64,
    pub restart: usize,
    pub iteration: u64,
}

#[derive(Clone, Debug)]
pub struct SearchState {
    pub base: CliquePartition,
    pub graph: Graph,
    pub mu: usize,
    pub score: i64,
    pub best: Option<Snapshot>,
    pub rng_seed: u64,
    pub restart: usize,
    pub tabu: VecDeque<(usize, usize)>,
    pub iteration: u64,
    rng: ChaCha8Rng,
}

impl SearchState {
    /// State at `C0` itself.
    pub fn new(base: CliquePartition, seed: u64, restart: usize) -> Result<Self> {
        let graph = base.to_graph();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(restart as u64 + 1);
        let mut s = SearchState {
            mu: 0,
            score: 0,
            graph,
            base,
            best: None,
            rng_seed: seed,
            restart,
            tabu: VecDeque::new(),
            iteration: 0,
            rng,
        };
        s.reset_to(s.graph.clone())?;
        Ok(s)
    }

    fn reset_to(&mut self, g: Graph) -> Result<()> {
        self.mu = mu_tau1(&g)?.0;
        self.score = score_of(&self.base, self.mu);
        self.graph = g;
        self.tabu.clear();
        self.note_best();
        Ok(())
    }

    /// `C0` plus a random subset of inter-block edges of random density.
    fn random_graph(&mut self) -> Graph {
        let mut g = self.base.to_graph();
        let density: f64 = self.rng.random();
        for (u, v) in self.base.inter_pairs() {
            if self.rng.random_bool(density) {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn note_best(&mut self) {
        if self.best.as_ref().is_none_or(|b| self.score > b.score) {
            self.best = Some(Snapshot {
                graph: self.graph.clone(),
                mu: self.mu,
                score: self.score,
                restart: self.restart,
                iteration: self.iteration,
            });
        }
    }

    /// Inter-block edges currently present.
    pub fn inter_edges(&self) -> Vec<(usize, usize)> {
        self.base
            .inter_pairs()
            .into_iter()
            .filter(|&(u, v)| self.graph.has_edge(u, v))
            .collect()
    }

    fn apply(&mut self, mv: (usize, usize), mu: usize, tabu_length: usize) {
        self.graph.toggle_edge(mv.0, mv.1);
        debug_assert!(self.base.is_clique_cover_of(&self.graph));
        self.mu = mu;
        self.score = score_of(&self.base, mu);
        self.iteration += 1;
        if tabu_length > 0 {
            if self.tabu.len() == tabu_length {
                self.tabu.pop_front();
            }
            self.tabu.push_back(mv);
        }
        self.note_best();
    }
}

/// Candidate single-edge toggles: inter-block pairs not in the tabu list, in
/// an order drawn from the state's generator.
pub fn neighbors(s: &mut SearchState) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = s
        .base
        .inter_pairs()
        .into_iter()
        .filter(|mv| !s.tabu.contains(mv))
        .collect();
    out.shuffle(&mut s.rng);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Event {
    Start,
    Improve,
    Sideways,
    Perturb,
    End,
}

/// One log line. `End` records carry the best graph of their restart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub iter: u64,
    pub restart: usize,
    #[serde(rename = "move")]
    pub mv: Option<[usize; 2]>,
    pub mu: usize,
    pub score: i64,
    pub hash: String,
    pub event: Event,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
}

fn hash_hex(g: &Graph) -> String {
    format!("{:016x}", canonical_form(g).hash64())
}

/// `mu` per canonical form, `None` for graphs outside the walk.
type Memo = Mutex<HashMap<CanonicalForm, Option<usize>>>;

/// True iff `theta(g)` equals the block count, i.e. `C0` is a minimum cover.
pub fn cover_is_minimal(g: &Graph, c0: &CliquePartition, node_budget: u64) -> bool {
    theta(g, node_budget).lower >= c0.m()
}

fn evaluate(g: &Graph, c0: &CliquePartition, cfg: &SearchConfig, memo: &Memo) -> Result<Option<usize>> {
    let key = canonical_form(g);
    if let Some(&m) = memo.lock().expect("memo lock").get(&key) {
        return Ok(m);
    }
    let m = if cfg.keep_cover_minimal && !cover_is_minimal(g, c0, cfg.node_budget) {
        None
    } else {
        Some(mu_tau1(g)?.0)
    };
    memo.lock().expect("memo lock").insert(key, m);
    Ok(m)
}

fn record(s: &SearchState, mv: Option<(usize, usize)>, event: Event) -> TraceRecord {
    TraceRecord {
        iter: s.iteration,
        restart: s.restart,
        mv: mv.map(|(u, v)| [u, v]),
        mu: s.mu,
        score: s.score,
        hash: hash_hex(&s.graph),
        event,
        graph6: None,
    }
}

/// One restart of steepest ascent. Restart 0 starts at `C0`, later ones at
/// a random inter-edge set (falling back to `C0` when the cover constraint
/// rejects every draw).
fn climb(
    c0: &CliquePartition,
    cfg: &SearchConfig,
    restart: usize,
    memo: &Memo,
) -> Result<(Snapshot, Vec<TraceRecord>)> {
    let mut s = SearchState::new(c0.clone(), cfg.seed, restart)?;
    if restart > 0 {
        let start = (0..RANDOM_START_TRIES)
            .map(|_| s.random_graph())
            .find(|g| !cfg.keep_cover_minimal || cover_is_minimal(g, c0, cfg.node_budget));
        if let Some(g) = start {
            s.best = None;
            s.reset_to(g)?;
        }
    }
    let mut trace = vec![record(&s, None, Event::Start)];
    let mut sideways = 0;
    while s.iteration < cfg.max_iters {
        let moves = neighbors(&mut s);
        if moves.is_empty() {
            break;
        }
        let base = &s.graph;
        let mus = par::map(&moves, |&(u, v)| {
            let mut g = base.clone();
            g.toggle_edge(u, v);
            evaluate(&g, c0, cfg, memo)
        });
        let mus = mus.into_iter().collect::<Result<Vec<_>>>()?;
        let admissible: Vec<usize> = (0..moves.len()).filter(|&k| mus[k].is_some()).collect();
        let Some(&k) = admissible
            .iter()
            .max_by(|&&a, &&b| mus[a].cmp(&mus[b]).then(b.cmp(&a)))
        else {
            break;
        };
        let best_mu = mus[k].expect("admissible");
        let event = if best_mu > s.mu {
            sideways = 0;
            Event::Improve
        } else if best_mu == s.mu && sideways < cfg.sideways_limit {
            sideways += 1;
            Event::Sideways
        } else if cfg.plateau_policy == PlateauPolicy::Perturb {
            sideways = 0;
            let k = admissible[s.rng.random_range(0..admissible.len())];
            s.apply(moves[k], mus[k].expect("admissible"), cfg.tabu_length);
            trace.push(record(&s, Some(moves[k]), Event::Perturb));
            continue;
        } else {
            break;
        };
        s.apply(moves[k], best_mu, cfg.tabu_length);
        trace.push(record(&s, Some(moves[k]), event));
    }
    let best = s.best.clone().expect("best recorded at start");
    trace.push(TraceRecord {
        iter: s.iteration,
        restart,
        mv: None,
        mu: best.mu,
        score: best.score,
        hash: hash_hex(&best.graph),
        event: Event::End,
        graph6: Some(encode_graph6(&best.graph)),
    });
    Ok((best, trace))
}

const RANDOM_START_TRIES: usize = 16;

/// Shared best across restarts: a strictly higher score wins, equal scores
/// go to the lower restart index.
#[derive(Default)]
struct BestTracker(Mutex<Option<Snapshot>>);

impl BestTracker {
    fn publish(&self, cand: &Snapshot) {
        let mut cur = self.0.lock().expect("best lock");
        let better = cur.as_ref().is_none_or(|b| {
            cand.score > b.score || (cand.score == b.score && cand.restart < b.restart)
        });
        if better {
            *cur = Some(cand.clone());
        }
    }

    fn take(self) -> Option<Snapshot> {
        self.0.into_inner().expect("best lock")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CandidateStatus {
    /// Exact `theta + mu > n`.
    Counterexample,
    /// Exact `theta` shows the score was only an artifact of `m > theta`.
    Demoted,
    /// The clique cover search ran out of budget.
    Unresolved,
}

#[derive(Clone, Debug)]
pub struct Verification {
    pub status: CandidateStatus,
    pub report: EmbeddingReport,
}

/// Recheck a candidate with an exact clique cover number.
pub fn verify_candidate(g: &Graph, node_budget: u64) -> Result<Verification> {
    let report = borsuk_check_with(g, node_budget, false)?;
    let status = if !report.theta_exact {
        CandidateStatus::Unresolved
    } else if report.is_counterexample() {
        CandidateStatus::Counterexample
    } else {
        CandidateStatus::Demoted
    };
    Ok(Verification { status, report })
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub best: Snapshot,
    /// Records ordered by restart, then iteration.
    pub trace: Vec<TraceRecord>,
    /// Present when the best score is positive.
    pub verification: Option<Verification>,
}

/// Run restarts `range` in parallel chunks, handing each chunk's traces to
/// `sink` in restart order.
fn run_restarts(
    c0: &CliquePartition,
    cfg: &SearchConfig,
    range: std::ops::Range<usize>,
    tracker: &BestTracker,
    mut sink: impl FnMut(Vec<TraceRecord>) -> Result<()>,
) -> Result<()> {
    const CHUNK: usize = 16;
    let memo = Memo::default();
    let mut start = range.start;
    while start < range.end {
        let end = (start + CHUNK).min(range.end);
        let results = par::map_range(start..end, |r| climb(c0, cfg, r, &memo));
        for res in results {
            let (best, trace) = res?;
            tracker.publish(&best);
            sink(trace)?;
        }
        start = end;
    }
    Ok(())
}

fn finish(tracker: BestTracker, cfg: &SearchConfig, trace: Vec<TraceRecord>) -> Result<SearchOutcome> {
    let best = tracker
        .take()
        .ok_or_else(|| Error::Log("no restart completed".into()))?;
    let verification = if best.score > 0 {
        Some(verify_candidate(&best.graph, cfg.node_budget)?)
    } else {
        None
    };
    Ok(SearchOutcome {
        best,
        trace,
        verification,
    })
}

/// Steepest ascent on the score with tabu moves, sideways moves and random
/// restarts. Deterministic for a given `(c0, cfg)`.
pub fn hill_climb(c0: &CliquePartition, cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let tracker = BestTracker::default();
    let mut trace = Vec::new();
    run_restarts(c0, cfg, 0..cfg.restarts, &tracker, |t| {
        trace.extend(t);
        Ok(())
    })?;
    finish(tracker, cfg, trace)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct LogHeader {
    schema: u32,
    kind: String,
    blocks: Vec<Vec<usize>>,
    config: SearchConfig,
}

fn log_err(e: impl std::fmt::Display) -> Error {
    Error::Log(e.to_string())
}

/// Completed restarts in an existing log: their best snapshots, their
/// records, and the byte length of the prefix holding them.
fn read_log(path: &Path, header: &LogHeader) -> Result<(Vec<Snapshot>, Vec<TraceRecord>, u64)> {
    let file = File::open(path).map_err(log_err)?;
    let mut reader = BufReader::new(file);
    let mut line = String::new();
    let mut offset = reader.read_line(&mut line).map_err(log_err)? as u64;
    let found: LogHeader = serde_json::from_str(line.trim_end())
        .map_err(|e| Error::Log(format!("bad header: {e}")))?;
    if &found != header {
        return Err(Error::Log("log was written with a different configuration".into()));
    }
    let mut done = Vec::new();
    let mut records = Vec::new();
    let mut pending = Vec::new();
    let mut kept = offset;
    loop {
        line.clear();
        let read = reader.read_line(&mut line).map_err(log_err)?;
        if read == 0 || !line.ends_with('\n') {
            break;
        }
        offset += read as u64;
        let Ok(rec) = serde_json::from_str::<TraceRecord>(line.trim_end()) else {
            break;
        };
        if rec.restart != done.len() {
            break;
        }
        let end = rec.event == Event::End;
        pending.push(rec);
        if end {
            let last = pending.last().expect("end record");
            let g6 = last.graph6.as_deref().ok_or_else(|| Error::Log("end record lacks graph".into()))?;
            let graph = parse_graph6(g6.as_bytes())?;
            done.push(Snapshot {
                graph,
                mu: last.mu,
                score: last.score,
                restart: last.restart,
                iteration: last.iter,
            });
            records.append(&mut pending);
            kept = offset;
        }
    }
    Ok((done, records, kept))
}

/// `hill_climb` that appends every record to a JSONL log. An existing log
/// written with the same partition and configuration is resumed after its
/// last complete restart; the outcome equals that of an uninterrupted run.
pub fn hill_climb_logged(c0: &CliquePartition, cfg: &SearchConfig, log: &Path) -> Result<SearchOutcome> {
    cfg.validate()?;
    let header = LogHeader {
        schema: 1,
        kind: "header".into(),
        blocks: c0.blocks().to_vec(),
        config: cfg.clone(),
    };
    let tracker = BestTracker::default();
    let mut trace = Vec::new();
    let resumed = log.metadata().is_ok_and(|m| m.len() > 0);
    let mut file = if resumed {
        let (done, records, kept) = read_log(log, &header)?;
        for s in &done {
            tracker.publish(s);
        }
        trace = records;
        let f = OpenOptions::new().write(true).open(log).map_err(log_err)?;
        f.set_len(kept).map_err(log_err)?;
        let mut f = OpenOptions::new().append(true).open(log).map_err(log_err)?;
        f.flush().map_err(log_err)?;
        f
    } else {
        let mut f = File::create(log).map_err(log_err)?;
        writeln!(f, "{}", serde_json::to_string(&header).map_err(log_err)?).map_err(log_err)?;
        f
    };
    let first = trace.iter().filter(|r| r.event == Event::End).count();
    run_restarts(c0, cfg, first..cfg.restarts.max(first), &tracker, |t| {
        let mut buf = String::new();
        for r in &t {
            buf.push_str(&serde_json::to_string(r).map_err(log_err)?);
            buf.push('\n');
        }
        file.write_all(buf.as_bytes()).map_err(log_err)?;
        file.flush().map_err(log_err)?;
        trace.extend(t);
        Ok(())
    })?;
    finish(tracker, cfg, trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(restarts: usize) -> SearchConfig {
        SearchConfig {
            restarts,
            max_iters: 50,
            ..Default::default()
        }
    }

    #[test]
    fn block_specs() {
        assert_eq!(parse_blocks("3x2").unwrap(), CliquePartition::from_sizes(&[2, 2, 2]).unwrap());
        assert_eq!(parse_blocks("2,1").unwrap().n(), 3);
        assert!(parse_blocks("0x3").is_err());
        assert!(parse_blocks("a,b").is_err());
    }

    #[test]
    fn scores_of_named_graphs() {
        let c0 = CliquePartition::new(5, vec![vec![0, 1], vec![2, 3], vec![4]]).unwrap();
        assert_eq!(score(&Graph::cycle(5), &c0).unwrap(), 0);
        assert_eq!(score(&c0.to_graph(), &c0).unwrap(), 3 - 5);
        // T(5): vertices are pairs of {0..4}; cliques {01,02,03,04}, {12,13,14}, {23,24,34}
        let t5 = Graph::triangular(5);
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let idx = |p: (usize, usize)| pairs.iter().position(|&q| q == p).unwrap();
        let blocks = vec![
            vec![idx((0, 1)), idx((0, 2)), idx((0, 3)), idx((0, 4))],
            vec![idx((1, 2)), idx((1, 3)), idx((1, 4))],
            vec![idx((2, 3)), idx((2, 4)), idx((3, 4))],
        ];
        let c0 = CliquePartition::new(10, blocks).unwrap();
        assert_eq!(score(&t5, &c0).unwrap(), -2);
        assert_eq!(score(&Graph::empty(5), &CliquePartition::from_sizes(&[5]).unwrap()), Err(Error::NotCliqueCover));
    }

    #[test]
    fn neighbor_counts() {
        let count = |c0: CliquePartition| neighbors(&mut SearchState::new(c0, 1, 0).unwrap()).len();
        assert_eq!(count(CliquePartition::from_sizes(&[2, 1]).unwrap()), 2);
        assert_eq!(count(CliquePartition::from_sizes(&[2, 2]).unwrap()), 4);
        assert_eq!(count(CliquePartition::from_sizes(&[1; 6]).unwrap()), 15);
    }

    #[test]
    fn single_clique_has_empty_search_space() {
        let out = hill_climb(&CliquePartition::from_sizes(&[5]).unwrap(), &cfg(2)).unwrap();
        assert_eq!(out.best.score, 1 - 5);
        assert!(out.verification.is_none());
    }

    #[test]
    fn deterministic_traces() {
        let c0 = CliquePartition::from_sizes(&[2, 2, 1, 1]).unwrap();
        let a = hill_climb(&c0, &cfg(5)).unwrap();
        let b = hill_climb(&c0, &cfg(5)).unwrap();
        assert_eq!(a.trace, b.trace);
        assert_eq!(a.best, b.best);
        let restarts: Vec<usize> = a.trace.iter().map(|r| r.restart).collect();
        assert!(restarts.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(a.trace.iter().filter(|r| r.event == Event::End).count(), 5);
    }

    #[test]
    fn constrained_walk_keeps_the_cover_minimal() {
        let c0 = CliquePartition::from_sizes(&[1; 5]).unwrap();
        let free = hill_climb(&c0, &cfg(6)).unwrap();
        // with singleton blocks the score is mu itself, e.g. 2 for the pentagon
        assert!(free.best.score > 0);
        assert_eq!(free.verification.unwrap().status, CandidateStatus::Demoted);
        let strict = SearchConfig { keep_cover_minimal: true, ..cfg(6) };
        let out = hill_climb(&c0, &strict).unwrap();
        assert!(out.best.score <= 0);
        for r in &out.trace {
            assert!(r.score <= 0);
        }
        assert!(cover_is_minimal(&out.best.graph, &c0, DEFAULT_NODE_BUDGET));
    }

    #[test]
    fn verify_never_promotes_plain_graphs() {
        for g in [Graph::cycle(5), Graph::complete(4), Graph::triangular(5)] {
            let v = verify_candidate(&g, DEFAULT_NODE_BUDGET).unwrap();
            assert_eq!(v.status, CandidateStatus::Demoted);
            assert!(!v.report.is_counterexample());
        }
    }

    #[test]
    fn score_dominates_exact_score() {
        let c0 = CliquePartition::from_sizes(&[2, 2, 1]).unwrap();
        let inter = c0.inter_pairs();
        for mask in 0u32..1 << inter.len() {
            let mut g = c0.to_graph();
            for (i, &(u, v)) in inter.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            let th = theta(&g, DEFAULT_NODE_BUDGET).upper as i64;
            let mu = mu_tau1(&g).unwrap().0 as i64;
            assert!(score(&g, &c0).unwrap() >= th + mu - 5);
        }
    }

    #[test]
    fn resume_matches_uninterrupted_run() {
        let dir = std::env::temp_dir().join(format!("twodist-search-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("log.jsonl");
        let c0 = CliquePartition::from_sizes(&[2, 1, 1, 1]).unwrap();
        let full = hill_climb_logged(&c0, &cfg(6), &path).unwrap();
        let bytes = std::fs::read(&path).unwrap();

        // cut the log in the middle of the fourth restart
        let text = String::from_utf8(bytes.clone()).unwrap();
        let cut = text.find("\"restart\":3").unwrap() + 5;
        std::fs::write(&path, &bytes[..cut]).unwrap();
        let resumed = hill_climb_logged(&c0, &cfg(6), &path).unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), bytes);
        assert_eq!(resumed.trace, full.trace);
        assert_eq!(resumed.best, full.best);

        let other = SearchConfig { seed: 9, ..cfg(6) };
        assert!(matches!(hill_climb_logged(&c0, &other, &path), Err(Error::Log(_))));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
