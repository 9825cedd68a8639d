//! Exact brute-force baselines for small instances.
//!
//! Maximum code sizes are computed as maximum independent sets in the
//! conflict graph on the word universe, with a branch-and-bound search that
//! uses a greedy-coloring upper bound for pruning.

use crate::code::{distance_unchecked, Code, Metric, Word};
use crate::error::{Error, Result};
use std::time::{Duration, Instant};

/// Node and wall-clock limits for a search.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_limit: 200_000_000,
            time_limit: Duration::from_secs(300),
        }
    }
}

/// Result of a maximum-code search.
#[derive(Debug, Clone)]
pub struct MaxCodeResult {
    pub size: usize,
    pub witness: Code,
    /// False when the budget ran out; `size` is then only a lower bound.
    pub exact: bool,
}

/// Simple bitset over graph vertices.
#[derive(Clone, PartialEq, Eq)]
struct VSet {
    bits: Vec<u64>,
}

impl VSet {
    fn empty(n: usize) -> Self {
        VSet { bits: vec![0; (n + 63) / 64] }
    }
    fn full(n: usize) -> Self {
        let mut s = VSet::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }
    fn insert(&mut self, v: usize) {
        self.bits[v / 64] |= 1 << (v % 64);
    }
    fn remove(&mut self, v: usize) {
        self.bits[v / 64] &= !(1 << (v % 64));
    }
    #[allow(dead_code)]
    fn contains(&self, v: usize) -> bool {
        self.bits[v / 64] >> (v % 64) & 1 == 1
    }
    fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }
    fn minus(&self, other: &VSet) -> VSet {
        VSet {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & !b).collect(),
        }
    }
    fn intersect(&self, other: &VSet) -> VSet {
        VSet {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect(),
        }
    }
    fn first(&self) -> Option<usize> {
        self.bits
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }
}

/// Adjacency-list graph with bitset rows, for the independent-set search.
pub struct ConflictGraph {
    n: usize,
    adj: Vec<VSet>,
}

impl ConflictGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![VSet::empty(n); n];
        for (u, v) in edges {
            if u != v {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        ConflictGraph { n, adj }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(VSet::count).sum::<usize>() / 2
    }
}

struct Search<'g> {
    graph: &'g ConflictGraph,
    best: Vec<usize>,
    nodes: u64,
    budget: SearchBudget,
    start: Instant,
    exhausted: bool,
}

impl<'g> Search<'g> {
    /// Greedy clique-cover bound: the candidates are covered by this many
    /// cliques, and an independent set meets each clique at most once.
    fn clique_cover_bound(&self, cand: &VSet) -> usize {
        let mut remaining = cand.clone();
        let mut cliques = 0;
        while !remaining.is_empty() {
            cliques += 1;
            let mut class = remaining.clone();
            while let Some(v) = class.first() {
                remaining.remove(v);
                class.remove(v);
                class = class.intersect(&self.graph.adj[v]);
            }
        }
        cliques
    }

    fn run(&mut self, current: &mut Vec<usize>, cand: VSet) {
        self.nodes += 1;
        if self.nodes % 4096 == 0
            && (self.nodes > self.budget.node_limit || self.start.elapsed() > self.budget.time_limit)
        {
            self.exhausted = true;
        }
        if self.exhausted {
            return;
        }
        if current.len() > self.best.len() {
            self.best = current.clone();
        }
        if cand.is_empty() {
            return;
        }
        if current.len() + self.clique_cover_bound(&cand) <= self.best.len() {
            return;
        }
        let mut cand = cand;
        // Deterministic order: always branch on the smallest candidate.
        while let Some(v) = cand.first() {
            if current.len() + cand.count() <= self.best.len() {
                return;
            }
            cand.remove(v);
            current.push(v);
            self.run(current, cand.minus(&self.graph.adj[v]));
            current.pop();
            if self.exhausted {
                return;
            }
        }
    }
}

/// Maximum independent set in `graph`, requiring that the listed vertices
/// are part of the solution.
pub fn max_independent_set(
    graph: &ConflictGraph,
    forced: &[usize],
    budget: SearchBudget,
) -> Result<(Vec<usize>, bool)> {
    let mut cand = VSet::full(graph.n);
    for &v in forced {
        cand.remove(v);
        cand = cand.minus(&graph.adj[v]);
    }
    let mut search = Search {
        graph,
        best: forced.to_vec(),
        nodes: 0,
        budget,
        start: Instant::now(),
        exhausted: false,
    };
    let mut current = forced.to_vec();
    search.run(&mut current, cand);
    let mut best = search.best;
    best.sort_unstable();
    Ok((best, !search.exhausted))
}

fn enumerate_universe(q: u32, n: usize, w: Option<usize>) -> Result<Vec<Word>> {
    let size = (q as u64).checked_pow(n as u32).filter(|&s| s <= 20_000_000);
    if size.is_none() {
        return Err(Error::Budget(format!("universe {q}^{n} too large")));
    }
    let mut words = Vec::new();
    let mut cur = vec![0u16; n];
    loop {
        if w.map_or(true, |w| cur.iter().filter(|&&s| s != 0).count() == w) {
            words.push(Word::new(q, cur.clone())?);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(words);
            }
            i -= 1;
            cur[i] += 1;
            if (cur[i] as u32) < q {
                break;
            }
            cur[i] = 0;
        }
    }
}

fn conflict_graph(universe: &[Word], q: u32, metric: Metric, d: u32) -> ConflictGraph {
    let edges = (0..universe.len()).flat_map(|i| {
        let universe = &universe;
        (i + 1..universe.len()).filter_map(move |j| {
            let dist =
                distance_unchecked(metric, q, universe[i].symbols(), universe[j].symbols());
            (dist < d).then_some((i, j))
        })
    });
    ConflictGraph::new(universe.len(), edges)
}

/// Exact maximum code size for the given metric, with witness.
///
/// The search space is reduced by fixing the lexicographically smallest
/// word of the universe into the solution; this is sound because the
/// isometry group is transitive on the universe for all supported metrics
/// (including the constant-weight universe under coordinate permutations).
pub fn max_code(
    q: u32,
    n: usize,
    d: u32,
    metric: Metric,
    w: Option<usize>,
    budget: SearchBudget,
) -> Result<MaxCodeResult> {
    if metric != Metric::Hamming && w.is_some() {
        return Err(Error::Domain("constant weight only supported with Hamming".into()));
    }
    let universe = enumerate_universe(q, n, w)?;
    if universe.is_empty() {
        return Err(Error::Domain("empty word universe".into()));
    }
    if d == 0 {
        let code = Code::from_set(q, n, universe.iter().cloned())?;
        return Ok(MaxCodeResult { size: code.len(), witness: code, exact: true });
    }
    let graph = conflict_graph(&universe, q, metric, d);
    let (best, exact) = max_independent_set(&graph, &[0], budget)?;
    let witness = Code::from_set(q, n, best.iter().map(|&i| universe[i].clone()))?;
    Ok(MaxCodeResult { size: witness.len(), witness, exact })
}

/// Independent-set number of the strong power `C_{d,q}^{boxtimes n}`.
pub fn alpha_circular(d: u32, q: u32, n: usize, budget: SearchBudget) -> Result<MaxCodeResult> {
    if q < 2 * d {
        return Err(Error::Domain(format!("circular graph needs q >= 2d, got q={q}, d={d}")));
    }
    max_code(q, n, d, Metric::LeeInf, None, budget)
}

/// Extends `code` by a maximum independent set among the words compatible
/// with every member of `code`. Exact for residual graphs of moderate size.
pub fn max_independent_extension(
    code: &Code,
    metric: Metric,
    d: u32,
    budget: SearchBudget,
) -> Result<Code> {
    let universe = enumerate_universe(code.q(), code.n(), None)?;
    let residual: Vec<Word> = universe
        .into_iter()
        .filter(|x| {
            !code.contains(x)
                && code.words().iter().all(|u| {
                    distance_unchecked(metric, code.q(), u.symbols(), x.symbols()) >= d
                })
        })
        .collect();
    if residual.len() > 2000 {
        return Err(Error::Budget(format!(
            "residual graph with {} vertices too large",
            residual.len()
        )));
    }
    let graph = conflict_graph(&residual, code.q(), metric, d);
    let (ext, exact) = max_independent_set(&graph, &[], budget)?;
    if !exact {
        return Err(Error::Budget("extension search ran out of budget".into()));
    }
    let mut words: Vec<Word> = code.words().to_vec();
    words.extend(ext.into_iter().map(|i| residual[i].clone()));
    Code::new(code.q(), code.n(), words)
}

/// The residual graph used by [`max_independent_extension`]; exposed so that
/// callers can report its size.
pub fn residual_graph(code: &Code, metric: Metric, d: u32) -> Result<(usize, usize)> {
    let universe = enumerate_universe(code.q(), code.n(), None)?;
    let residual: Vec<Word> = universe
        .into_iter()
        .filter(|x| {
            !code.contains(x)
                && code.words().iter().all(|u| {
                    distance_unchecked(metric, code.q(), u.symbols(), x.symbols()) >= d
                })
        })
        .collect();
    let graph = conflict_graph(&residual, code.q(), metric, d);
    Ok((graph.num_vertices(), graph.num_edges()))
}
