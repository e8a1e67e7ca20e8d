//! Seeded random hosts for tests, experiments and the CLI.

use std::collections::{BTreeSet, HashSet};
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::certify::cycle::{CycleWalker, DynGraph};
use crate::error::{Error, Result};
use crate::hypercore::{pair_key, Edge, Hypergraph, LinearHypergraph, Vertex};
use crate::lemma::LeveledQuasiTree;
use crate::rng;

fn random_set<R: rand::Rng>(rng: &mut R, n: usize, k: usize) -> Edge {
    let mut e: Edge = rand::seq::index::sample(rng, n, k).into_iter().map(|v| v as Vertex).collect();
    e.sort_unstable();
    e
}

fn binomial_at_least(n: usize, k: usize, m: usize) -> bool {
    if k > n {
        return m == 0;
    }
    let mut c: u128 = 1;
    for i in 0..k.min(n - k) {
        c = c.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    c >= m as u128
}

/// `m` distinct uniformly random `r`-sets.
pub fn random_hypergraph(n: usize, r: usize, m: usize, seed: u64) -> Result<Hypergraph> {
    if r == 0 || r > n || !binomial_at_least(n, r, m) {
        return Err(Error::arg(format!("cannot place {m} distinct {r}-sets on {n} vertices")));
    }
    let mut rng = rng::stream(seed, "gen.uniform");
    let mut seen = BTreeSet::new();
    while seen.len() < m {
        seen.insert(random_set(&mut rng, n, r));
    }
    let mut edges: Vec<Edge> = seen.into_iter().collect();
    edges.shuffle(&mut rng);
    Hypergraph::uniform(n, r, edges)
}

/// `m` distinct random edges with sizes drawn uniformly from `ranks`.
pub fn random_mixed(n: usize, ranks: RangeInclusive<usize>, m: usize, seed: u64) -> Result<Hypergraph> {
    let (lo, hi) = (*ranks.start(), *ranks.end());
    if lo == 0 || lo > hi || hi > n {
        return Err(Error::arg(format!("bad rank range {lo}..={hi} for n = {n}")));
    }
    let mut rng = rng::stream(seed, "gen.mixed");
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    let mut misses = 0;
    while edges.len() < m && misses < 100 * (m + n) {
        let k = rng.gen_range(lo..=hi);
        let e = random_set(&mut rng, n, k);
        if seen.insert(e.clone()) {
            edges.push(e);
        } else {
            misses += 1;
        }
    }
    Hypergraph::new(n, edges)
}

/// Random greedy linear `r`-graph: random `r`-sets are kept when they reuse no pair, until
/// `m` edges or `50 n` consecutive rejections.
pub fn random_linear(n: usize, r: usize, m: usize, seed: u64) -> Result<LinearHypergraph> {
    random_cycle_free(n, r, None, m, seed)
}

/// As [`random_linear`], also rejecting edges that close a linear `ℓ`-cycle.
pub fn random_cycle_free_linear(n: usize, r: usize, ell: usize, m: usize, seed: u64) -> Result<LinearHypergraph> {
    if ell < 3 {
        return Err(Error::arg("cycle length must be at least 3"));
    }
    random_cycle_free(n, r, Some(ell), m, seed)
}

fn random_cycle_free(n: usize, r: usize, ell: Option<usize>, m: usize, seed: u64) -> Result<LinearHypergraph> {
    if r < 2 || r > n {
        return Err(Error::arg(format!("need 2 <= r <= n, got r = {r}, n = {n}")));
    }
    let label = match ell {
        Some(l) => format!("gen.cycle_free.{l}"),
        None => "gen.linear".to_string(),
    };
    let mut rng = rng::stream(seed, &label);
    let mut pairs = HashSet::new();
    let mut g = DynGraph::new(n);
    let mut misses = 0;
    while g.edges.len() < m && misses < 50 * n {
        let e = random_set(&mut rng, n, r);
        let keys: Vec<u64> = e.iter().enumerate().flat_map(|(i, &a)| e[i + 1..].iter().map(move |&b| pair_key(a, b))).collect();
        if keys.iter().any(|k| pairs.contains(k)) {
            misses += 1;
            continue;
        }
        let id = g.push(e);
        if let Some(l) = ell {
            let closes = CycleWalker::new(&g, u64::MAX).through(id, l, &mut |_| true)?;
            if closes {
                g.pop();
                misses += 1;
                continue;
            }
        }
        pairs.extend(keys);
        misses = 0;
    }
    LinearHypergraph::new(Hypergraph::uniform(n, r, g.edges)?)
}

/// Random leveled linear quasi-tree of height `h` in a host made of its segment edges: each
/// vertex of a main level gets between 1 and `max_branch` edges of size `r`, and a new edge
/// reuses an earlier companion of its segment with probability `share` when linearity allows.
pub fn random_quasi_tree(
    h: usize,
    max_branch: usize,
    r: usize,
    share: f64,
    seed: u64,
) -> Result<(LinearHypergraph, LeveledQuasiTree)> {
    if r < 3 || max_branch == 0 || !(0.0..=1.0).contains(&share) {
        return Err(Error::arg("need r >= 3, max_branch >= 1 and share in [0, 1]"));
    }
    let mut rng = rng::stream(seed, "gen.quasi_tree");
    let mut next: Vertex = 1;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let mut edges: Vec<Edge> = Vec::new();
    let mut segments: Vec<Vec<(usize, Vertex, Vertex)>> = Vec::new();
    let mut level = vec![0 as Vertex];
    for _ in 0..h {
        let mut seg = Vec::new();
        let mut comps: Vec<Vertex> = Vec::new();
        let mut children = Vec::new();
        for &x in &level {
            let mut mine: Vec<Vertex> = Vec::new();
            for _ in 0..rng.gen_range(1..=max_branch) {
                let shared: Vec<Vertex> = comps.iter().copied().filter(|c| !mine.contains(c)).collect();
                let c = if !shared.is_empty() && rng.gen_bool(share) {
                    shared[rng.gen_range(0..shared.len())]
                } else {
                    let c = fresh();
                    comps.push(c);
                    c
                };
                mine.push(c);
                let child = fresh();
                let mut e = vec![x, c, child];
                e.extend((3..r).map(|_| fresh()));
                e.sort_unstable();
                seg.push((edges.len(), c, child));
                edges.push(e);
                children.push(child);
            }
        }
        segments.push(seg);
        level = children;
    }
    let g = LinearHypergraph::new(Hypergraph::uniform(next as usize, r, edges)?)?;
    let mut q = LeveledQuasiTree::new(0);
    for seg in &segments {
        q.extend(&g, seg)?;
    }
    Ok((g, q))
}

/// Uniformly random ordering of `0..n`.
pub fn random_order(n: usize, seed: u64) -> Vec<Vertex> {
    let mut order: Vec<Vertex> = (0..n as Vertex).collect();
    order.shuffle(&mut rng::stream(seed, "gen.order"));
    order
}
