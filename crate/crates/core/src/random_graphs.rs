//! Binomial random graphs and vertex-separating path systems built from a
//! separating set system plus one spanning path per block.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::separation::{Host, PathSystem, TargetSet};
use crate::tree::{Edge, VertexPath};

/// Simple undirected graph on `0..n`, possibly disconnected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn complete(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect(),
        }
    }

    /// Ignores loops and repeated pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({}, {}) out of range", u, v);
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        Graph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|a| a.binary_search(&v).is_ok())
    }
}

impl Host for Graph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        Graph::has_edge(self, u, v)
    }

    fn edge_list(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (u, a) in self.adj.iter().enumerate() {
            out.extend(a.iter().filter(|&&v| v > u).map(|&v| Edge::new(u, v)));
        }
        out
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }
}

/// `G(n, p)`: every pair joined independently with probability `p`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn isolated_count(g: &Graph) -> usize {
    (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).count()
}

/// `(2 ln n + 6 ln ln n) / n`, clamped to `[0, 1]`.
pub fn supercritical_p(n: usize) -> f64 {
    let x = n as f64;
    ((2.0 * x.ln() + 6.0 * x.ln().ln()) / x).clamp(0.0, 1.0)
}

/// `(ln n - 3 ln ln n) / n`, clamped to `[0, 1]`.
pub fn subcritical_p(n: usize) -> f64 {
    let x = n as f64;
    ((x.ln() - 3.0 * x.ln().ln()) / x).clamp(0.0, 1.0)
}

/// A family of vertex subsets of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    pub n: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl SetSystem {
    /// Indices of the blocks containing each vertex.
    pub fn signatures(&self) -> Vec<Vec<usize>> {
        let mut sig = vec![Vec::new(); self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                sig[v].push(i);
            }
        }
        sig
    }

    /// Every signature nonempty and no two equal.
    pub fn separates_and_covers(&self) -> bool {
        let mut sig = self.signatures();
        if sig.iter().any(Vec::is_empty) {
            return false;
        }
        sig.sort();
        sig.windows(2).all(|w| w[0] != w[1])
    }
}

pub fn log2_ceil(n: usize) -> usize {
    n.max(1).next_power_of_two().trailing_zeros() as usize
}

/// Separating and covering set system on `0..n` with at most
/// `⌈log₂ n⌉ + 1` blocks.
///
/// Vertices `0..k` form `A`, `k..2k` form `B` (with `a_j = j`, `b_j = k + j`)
/// and `2k` is `C` when `n` is odd. The `j`-th pair gets the code
/// `(j + 1) mod (2^bits - 1)`, so no `b_j` sees the all-ones code and stays
/// uncovered; `bits` grows by one when `k` is a power of two.
pub fn separating_set_system(n: usize) -> SetSystem {
    assert!(n >= 2, "separating_set_system needs n >= 2");
    let k = n / 2;
    let q = n % 2;
    let mut bits = log2_ceil(k);
    if k.is_power_of_two() {
        bits += 1;
    }
    let modulus = (1usize << bits) - 1;
    let code: Vec<usize> = (0..k).map(|j| (j + 1) % modulus).collect();
    let mut blocks = Vec::with_capacity(bits + 1 + q);
    for i in 0..bits {
        let mut s: Vec<usize> = (0..k).filter(|&j| code[j] >> i & 1 == 1).collect();
        s.extend((0..k).filter(|&j| code[j] >> i & 1 == 0).map(|j| k + j));
        blocks.push(s);
    }
    blocks.push((0..k).collect());
    if q == 1 {
        blocks.push(vec![2 * k]);
    }
    SetSystem { n, blocks }
}

/// Outcome of a spanning-path search in an induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamSearch {
    Found(VertexPath),
    /// The exact phase exhausted the search space: no spanning path exists.
    Absent,
    /// Neither phase succeeded within its budget.
    Unknown,
}

pub const ROTATION_RESTARTS: usize = 20;
pub const BACKTRACK_NODES: u64 = 10_000_000;

/// A spanning path of `g[block]`, if the bounded search finds one.
pub fn hamiltonian_path(g: &Graph, block: &[usize]) -> Option<VertexPath> {
    match hamiltonian_search(g, block, 0) {
        HamSearch::Found(p) => Some(p),
        _ => None,
    }
}

/// Rotation–extension with restarts, then exact backtracking under a node budget.
pub fn hamiltonian_search(g: &Graph, block: &[usize], seed: u64) -> HamSearch {
    let k = block.len();
    if k == 0 {
        return HamSearch::Absent;
    }
    if k == 1 {
        return HamSearch::Found(VertexPath::single(block[0]));
    }
    // Local indices.
    let mut local = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in block.iter().enumerate() {
        local[v] = i;
    }
    let adj: Vec<Vec<usize>> = block
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| local[w] != usize::MAX)
                .map(|&w| local[w])
                .collect()
        })
        .collect();
    if !connected(&adj) || adj.iter().filter(|a| a.len() <= 1).count() > 2 {
        return HamSearch::Absent;
    }
    let lift = |p: Vec<usize>| HamSearch::Found(VertexPath::new(p.into_iter().map(|i| block[i]).collect()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ROTATION_RESTARTS {
        if let Some(p) = rotate_extend(&adj, &mut rng) {
            return lift(p);
        }
    }
    match backtrack(&adj, BACKTRACK_NODES) {
        Some(Some(p)) => lift(p),
        Some(None) => HamSearch::Absent,
        None => HamSearch::Unknown,
    }
}

fn connected(adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == adj.len()
}

fn rotate_extend<R: Rng>(adj: &[Vec<usize>], rng: &mut R) -> Option<Vec<usize>> {
    let k = adj.len();
    let mut pos = vec![usize::MAX; k];
    let mut path = vec![rng.gen_range(0..k)];
    pos[path[0]] = 0;
    let limit = 20 * k * k + 100;
    for _ in 0..limit {
        if path.len() == k {
            return Some(path);
        }
        let end = *path.last().unwrap();
        let fresh: Vec<usize> = adj[end].iter().copied().filter(|&w| pos[w] == usize::MAX).collect();
        if let Some(&w) = fresh.choose(rng) {
            pos[w] = path.len();
            path.push(w);
            continue;
        }
        // Rotate: join the end to an earlier vertex and reverse the tail.
        let pivots: Vec<usize> = adj[end]
            .iter()
            .copied()
            .filter(|&w| pos[w] + 1 < path.len() - 1)
            .collect();
        let &w = pivots.choose(rng)?;
        let i = pos[w];
        path[i + 1..].reverse();
        for (j, &v) in path.iter().enumerate().skip(i + 1) {
            pos[v] = j;
        }
    }
    None
}

/// `Some(Some(path))`, `Some(None)` when provably absent, `None` past budget.
fn backtrack(adj: &[Vec<usize>], budget: u64) -> Option<Option<Vec<usize>>> {
    let k = adj.len();
    let mut nodes = 0u64;
    let mut on = vec![false; k];
    let mut path = Vec::with_capacity(k);
    // A vertex of degree one must be an end; start there when possible.
    let starts: Vec<usize> = match adj.iter().position(|a| a.len() == 1) {
        Some(v) => vec![v],
        None => (0..k).collect(),
    };
    for s in starts {
        path.push(s);
        on[s] = true;
        match dfs(adj, &mut path, &mut on, &mut nodes, budget) {
            Some(true) => return Some(Some(path)),
            Some(false) => {}
            None => return None,
        }
        on[s] = false;
        path.pop();
    }
    Some(None)
}

fn dfs(adj: &[Vec<usize>], path: &mut Vec<usize>, on: &mut [bool], nodes: &mut u64, budget: u64) -> Option<bool> {
    if path.len() == adj.len() {
        return Some(true);
    }
    *nodes += 1;
    if *nodes > budget {
        return None;
    }
    let end = *path.last().unwrap();
    for &w in &adj[end] {
        if on[w] {
            continue;
        }
        on[w] = true;
        path.push(w);
        if dfs(adj, path, on, nodes, budget)? {
            return Some(true);
        }
        path.pop();
        on[w] = false;
    }
    Some(false)
}

/// Spanning paths of the blocks of [`separating_set_system`] over a seeded
/// relabelling of `g`; `None` if some block has no path found.
pub fn random_vertex_system(g: &Graph, seed: u64) -> Option<PathSystem<'_, Graph>> {
    let n = g.vertex_count();
    assert!(n >= 2, "random_vertex_system needs n >= 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let sys = separating_set_system(n);
    let mut paths = Vec::with_capacity(sys.blocks.len());
    for block in &sys.blocks {
        let vs: Vec<usize> = block.iter().map(|&i| order[i]).collect();
        match hamiltonian_search(g, &vs, rng.gen()) {
            HamSearch::Found(p) => paths.push(p),
            _ => return None,
        }
    }
    let fs = PathSystem::new(g, paths).ok()?;
    fs.check(&TargetSet::vertices(g), true).ok()?;
    Some(fs)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentConfig {
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRecord {
    pub seed: u64,
    pub success: bool,
    pub system_size: Option<usize>,
    pub isolated: usize,
}

#[derive(Debug, Clone)]
pub struct ExperimentStats {
    pub config: ExperimentConfig,
    pub per_trial: Vec<TrialRecord>,
    pub elapsed: Duration,
}

impl ExperimentStats {
    pub fn successes(&self) -> usize {
        self.per_trial.iter().filter(|t| t.success).count()
    }

    pub fn failures(&self) -> usize {
        self.per_trial.len() - self.successes()
    }

    pub fn success_rate(&self) -> f64 {
        self.successes() as f64 / self.per_trial.len().max(1) as f64
    }

    pub fn mean_isolated(&self) -> f64 {
        let total: usize = self.per_trial.iter().map(|t| t.isolated).sum();
        total as f64 / self.per_trial.len().max(1) as f64
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.per_trial.iter().filter_map(|t| t.system_size).collect()
    }
}

/// Per-trial seeds, drawn in order from the master seed.
pub fn trial_seeds(master: u64, trials: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    (0..trials).map(|_| rng.gen()).collect()
}

/// Seed for the relabelling and path searches of the trial with graph seed `seed`.
pub fn system_seed(seed: u64) -> u64 {
    seed.rotate_left(32)
}

pub fn run_trial(n: usize, p: f64, seed: u64) -> TrialRecord {
    let g = gen_gnp(n, p, seed);
    let fs = random_vertex_system(&g, system_seed(seed));
    TrialRecord {
        seed,
        success: fs.is_some(),
        system_size: fs.map(|f| f.len()),
        isolated: isolated_count(&g),
    }
}

/// Runs the trials in parallel; results are in trial order and depend only
/// on the config.
pub fn run_experiment(cfg: &ExperimentConfig) -> ExperimentStats {
    assert!(cfg.trials >= 1, "an experiment needs at least one trial");
    let start = Instant::now();
    let per_trial = trial_seeds(cfg.seed, cfg.trials)
        .into_par_iter()
        .map(|s| run_trial(cfg.n, cfg.p, s))
        .collect();
    ExperimentStats {
        config: *cfg,
        per_trial,
        elapsed: start.elapsed(),
    }
}
