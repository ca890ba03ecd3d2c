//! Exhaustive maximum-edge search over subsets of a hexagonal lattice patch.
//!
//! Candidates are the lattice points within `radius` rings of the origin,
//! numbered in spiral order. Subsets are enumerated as increasing index
//! sequences. A prefix is dropped when one of the eleven non-trivial
//! symmetries of the patch maps it to a lexicographically smaller prefix,
//! so every orbit is explored through its lexicographically least member.
//! With `prune` set, a branch is also dropped when an upper bound on its
//! completion cannot beat the best value found so far.

use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;
use thiserror::Error;

use crate::bounds::conjectured_max_edges;
use crate::construct::SpiralOrder;
use crate::exec::Exec;
use crate::geometry::{LatticePoint, LATTICE_DIRECTIONS};

/// Largest admissible `C(|patch|, n) / 12`.
pub const WORK_LIMIT: f64 = 1e8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("search too large: about {0:.3e} subsets after symmetry reduction")]
    TooLarge(f64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub n: u64,
    pub radius: u64,
    pub prune: bool,
}

impl SearchConfig {
    /// Default radius `⌈√n⌉`, pruning on.
    pub fn new(n: u64) -> Self {
        Self { n, radius: min_radius(n), prune: true }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.n == 0 {
            return Err(SearchError::InvalidConfig("n must be at least 1".into()));
        }
        if self.radius < min_radius(self.n) {
            return Err(SearchError::InvalidConfig(format!(
                "radius {} is below ceil(sqrt({})) = {}",
                self.radius,
                self.n,
                min_radius(self.n)
            )));
        }
        Ok(())
    }
}

fn min_radius(n: u64) -> u64 {
    let r = n.isqrt();
    if r * r == n {
        r
    } else {
        r + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub best: u64,
    /// Lexicographically least optimal subset, in candidate order.
    pub witness: Vec<LatticePoint>,
}

/// Points with ring at most `radius`, in spiral order.
pub fn patch(radius: u64) -> Vec<LatticePoint> {
    let count = 3 * radius * (radius + 1) + 1;
    SpiralOrder::new().take(count as usize).collect()
}

fn binomial(m: u64, k: u64) -> f64 {
    if k > m {
        return 0.0;
    }
    (0..k).fold(1.0, |acc, i| acc * (m - i) as f64 / (i + 1) as f64)
}

fn rotate(p: LatticePoint) -> LatticePoint {
    LatticePoint::new(-p.b, p.a + p.b)
}

fn reflect(p: LatticePoint) -> LatticePoint {
    LatticePoint::new(p.b, p.a)
}

struct Patch {
    points: Vec<LatticePoint>,
    neighbors: Vec<Vec<usize>>,
    /// Index permutation of each non-identity symmetry.
    symmetries: Vec<Vec<usize>>,
    /// `ceiling[k]`: admissible edge count for `k` points.
    ceiling: Vec<u64>,
}

impl Patch {
    fn new(radius: u64, n: u64) -> Self {
        let points = patch(radius);
        let index: std::collections::HashMap<LatticePoint, usize> =
            points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let neighbors = points
            .iter()
            .map(|p| LATTICE_DIRECTIONS.iter().filter_map(|&d| index.get(&p.offset(d)).copied()).collect())
            .collect();
        let mut symmetries = Vec::with_capacity(11);
        for mirror in [false, true] {
            for turns in 0..6 {
                if !mirror && turns == 0 {
                    continue;
                }
                let map = |p: LatticePoint| {
                    let mut q = if mirror { reflect(p) } else { p };
                    for _ in 0..turns {
                        q = rotate(q);
                    }
                    q
                };
                symmetries.push(points.iter().map(|&p| index[&map(p)]).collect());
            }
        }
        let ceiling = (0..=n).map(|k| if k == 0 { 0 } else { conjectured_max_edges(k).expect("k >= 1") }).collect();
        Self { points, neighbors, symmetries, ceiling }
    }

    /// Whether `prefix` is the lexicographically least image under the
    /// patch symmetries.
    fn is_canonical(&self, prefix: &[usize], scratch: &mut Vec<usize>) -> bool {
        self.symmetries.iter().all(|perm| {
            scratch.clear();
            scratch.extend(prefix.iter().map(|&i| perm[i]));
            scratch.sort_unstable();
            scratch.as_slice() >= prefix
        })
    }
}

struct Task<'a> {
    patch: &'a Patch,
    n: usize,
    prune: bool,
    shared_best: &'a AtomicU64,
    chosen: Vec<bool>,
    stack: Vec<usize>,
    scratch: Vec<usize>,
    gains: Vec<u64>,
    best: Option<(u64, Vec<usize>)>,
}

impl<'a> Task<'a> {
    fn gain(&self, t: usize) -> u64 {
        self.patch.neighbors[t].iter().filter(|&&w| self.chosen[w]).count() as u64
    }

    fn local_best(&self) -> Option<u64> {
        self.best.as_ref().map(|b| b.0)
    }

    /// Upper bound on the edge count of any completion of the current
    /// prefix: edges to the prefix from the best remaining candidates,
    /// plus the ceiling for the edges among the new points.
    fn completion_bound(&mut self, edges: u64) -> u64 {
        let k = self.stack.len();
        let need = self.n - k;
        let start = self.stack.last().map_or(0, |&i| i + 1);
        let mut gains = std::mem::take(&mut self.gains);
        gains.clear();
        gains.extend((start..self.patch.points.len()).map(|t| self.gain(t)));
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let bound = edges + gains.iter().take(need).sum::<u64>() + self.patch.ceiling[need];
        self.gains = gains;
        bound.min(self.patch.ceiling[self.n])
    }

    fn worth_exploring(&mut self, edges: u64) -> bool {
        if !self.prune {
            return true;
        }
        let bound = self.completion_bound(edges);
        // Ties with another task's best must still be explored so the
        // lexicographically least witness survives the merge.
        self.local_best().is_none_or(|b| bound > b) && bound >= self.shared_best.load(Ordering::Relaxed)
    }

    fn push(&mut self, i: usize, edges: u64) -> Option<u64> {
        let e = edges + self.gain(i);
        self.stack.push(i);
        self.chosen[i] = true;
        let mut scratch = std::mem::take(&mut self.scratch);
        let canonical = self.patch.is_canonical(&self.stack, &mut scratch);
        self.scratch = scratch;
        if canonical {
            Some(e)
        } else {
            self.pop();
            None
        }
    }

    fn pop(&mut self) {
        let i = self.stack.pop().expect("non-empty");
        self.chosen[i] = false;
    }

    fn dfs(&mut self, edges: u64) {
        let k = self.stack.len();
        if k == self.n {
            if self.local_best().is_none_or(|b| edges > b) {
                self.best = Some((edges, self.stack.clone()));
                self.shared_best.fetch_max(edges, Ordering::Relaxed);
            }
            return;
        }
        if !self.worth_exploring(edges) {
            return;
        }
        let start = self.stack.last().map_or(0, |&i| i + 1);
        let end = self.patch.points.len() - (self.n - k);
        for i in start..=end {
            if let Some(e) = self.push(i, edges) {
                self.dfs(e);
                self.pop();
            }
        }
    }
}

pub fn lattice_max_edges(cfg: SearchConfig) -> Result<SearchResult, SearchError> {
    lattice_max_edges_with(cfg, Exec::default())
}

/// The search, with the subsets split by their first two candidates across
/// `exec`. The result does not depend on how the work is scheduled.
pub fn lattice_max_edges_with(cfg: SearchConfig, exec: Exec) -> Result<SearchResult, SearchError> {
    cfg.validate()?;
    let size = 3 * cfg.radius * (cfg.radius + 1) + 1;
    if cfg.n > size {
        return Err(SearchError::InvalidConfig(format!("patch of radius {} has only {size} points", cfg.radius)));
    }
    let work = binomial(size, cfg.n) / 12.0;
    if work > WORK_LIMIT {
        return Err(SearchError::TooLarge(work));
    }

    let patch = Patch::new(cfg.radius, cfg.n);
    let n = cfg.n as usize;
    let m = patch.points.len();
    let depth = n.min(2);
    let prefixes: Vec<Vec<usize>> = match depth {
        1 => (0..m).map(|i| vec![i]).collect(),
        _ => (0..m).flat_map(|i| (i + 1..m).map(move |j| vec![i, j])).filter(|p| p[1] <= m - (n - 1)).collect(),
    };
    let shared_best = AtomicU64::new(0);
    let results = exec.map(prefixes, |prefix| {
        let mut task = Task {
            patch: &patch,
            n,
            prune: cfg.prune,
            shared_best: &shared_best,
            chosen: vec![false; m],
            stack: Vec::with_capacity(n),
            scratch: Vec::with_capacity(n),
            gains: Vec::with_capacity(m),
            best: None,
        };
        let mut edges = 0;
        for &i in &prefix {
            match task.push(i, edges) {
                Some(e) => edges = e,
                None => return None,
            }
        }
        task.dfs(edges);
        task.best
    });

    let (best, witness) = results
        .into_iter()
        .flatten()
        .min_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)))
        .expect("the first n candidates always form a canonical subset");
    Ok(SearchResult { best, witness: witness.into_iter().map(|i| patch.points[i]).collect() })
}
