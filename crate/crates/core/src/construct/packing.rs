//! Random greedy linear packing followed by random sparsification and deletion.

use rand::seq::index::sample;
use rand::Rng as _;
use serde::Serialize;

use super::{ConstructionReport, SamplingInfo};
use crate::certify::{count_linear_cycles, find_cycle_through_indexed, find_linear_cycle, PairTable};
use crate::error::{Error, Result};
use crate::hypercore::{Edge, Hypergraph, LinearHypergraph, Vertex};
use crate::rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CycleCountMethod {
    Direct,
    FirstMoment,
}

#[derive(Clone, Copy, Debug)]
pub struct PackingOptions {
    /// The packing stops after `rejection_factor * n` consecutive rejected samples.
    pub rejection_factor: usize,
    /// Node budget for counting cycles directly; above it the first-moment estimate is used.
    pub count_budget: u64,
    /// Node budget for each cycle-through-edge query during deletion.
    pub query_budget: u64,
}

impl Default for PackingOptions {
    fn default() -> Self {
        PackingOptions { rejection_factor: 50, count_budget: 400_000_000, query_budget: 10_000_000 }
    }
}

/// Linear `r`-graph on `n` vertices without linear `ℓ`-cycles:
///
/// 1. random greedy linear packing;
/// 2. keep each edge with probability `p = min(1, (|G| / 2C)^{1/(ℓ-1)})`, where `C` is the
///    number of `ℓ`-cycles of the packing, so that expected kept cycles `p^ℓ C` are at most
///    half the expected kept edges `p|G|`;
/// 3. one pass over the kept edges deleting every edge that still lies on an `ℓ`-cycle.
pub fn random_packing_deletion(
    n: usize,
    r: usize,
    l: usize,
    seed: u64,
    opts: &PackingOptions,
) -> Result<ConstructionReport> {
    if r < 2 || n < r {
        return Err(Error::arg(format!("need n >= r >= 2, got n = {n}, r = {r}")));
    }
    if l < 3 {
        return Err(Error::arg("cycle length must be >= 3"));
    }
    let packing = greedy_packing(n, r, seed, opts.rejection_factor);
    let g = Hypergraph::uniform(n, r, packing)?;

    let (cycles, method) = match count_linear_cycles(&g, l, opts.count_budget) {
        Ok(c) => (c as f64, CycleCountMethod::Direct),
        Err(Error::BudgetExceeded { .. }) => (first_moment(n, r, l, g.num_edges()), CycleCountMethod::FirstMoment),
        Err(e) => return Err(e),
    };
    let p = if cycles <= 0.0 {
        1.0
    } else {
        (g.num_edges() as f64 / (2.0 * cycles)).powf(1.0 / (l as f64 - 1.0)).min(1.0)
    };

    let mut keep_rng = rng::stream(seed, "keep");
    let mut active: Vec<bool> = (0..g.num_edges()).map(|_| keep_rng.gen_bool(p)).collect();
    let kept: Vec<usize> = (0..g.num_edges()).filter(|&i| active[i]).collect();
    let table = PairTable::new(&g, g.num_edges());
    let mut deleted = 0;
    for &e in &kept {
        if find_cycle_through_indexed(&g, table.as_ref(), &active, e, l, opts.query_budget)?.is_some() {
            active[e] = false;
            deleted += 1;
        }
    }
    let survivors: Vec<usize> = (0..g.num_edges()).filter(|&i| active[i]).collect();
    let out = LinearHypergraph::new(g.sub_edges(&survivors))?;
    if let Some(c) = find_linear_cycle(&out, l)? {
        return Err(Error::Invariant(format!("deletion left the {l}-cycle {:?}", c.edges)));
    }
    Ok(ConstructionReport {
        edges: out.num_edges(),
        graph: out,
        girth_checked: l,
        exponent_estimate: None,
        seed: Some(seed),
        sampling: Some(SamplingInfo {
            packing_edges: g.num_edges(),
            packing_cycles: cycles,
            count_method: method,
            keep_probability: p,
            kept_edges: kept.len(),
            deleted_edges: deleted,
        }),
    })
}

fn greedy_packing(n: usize, r: usize, seed: u64, rejection_factor: usize) -> Vec<Edge> {
    let mut rng = rng::stream(seed, "packing");
    let mut covered = vec![false; n * n];
    let mut edges = Vec::new();
    let cap = rejection_factor * n;
    let mut misses = 0;
    while misses < cap {
        let mut e: Edge = sample(&mut rng, n, r).into_iter().map(|v| v as Vertex).collect();
        e.sort_unstable();
        let free = (0..r).all(|i| (i + 1..r).all(|j| !covered[e[i] as usize * n + e[j] as usize]));
        if !free {
            misses += 1;
            continue;
        }
        misses = 0;
        for i in 0..r {
            for j in i + 1..r {
                covered[e[i] as usize * n + e[j] as usize] = true;
            }
        }
        edges.push(e);
    }
    edges
}

/// Expected number of linear `ℓ`-cycles when each vertex pair is covered independently with
/// the packing's pair density: cyclic sequences of `ℓ` junctions times `π^ℓ`.
fn first_moment(n: usize, r: usize, l: usize, edges: usize) -> f64 {
    let pairs = (n * (n - 1) / 2) as f64;
    let pi = (edges * r * (r - 1) / 2) as f64 / pairs;
    let mut seqs = 1.0;
    for i in 0..l {
        seqs *= (n - i) as f64;
    }
    seqs / (2.0 * l as f64) * pi.powi(l as i32)
}
