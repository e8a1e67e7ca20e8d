//! From a cycle-free `r`-graph to a large independent set, stage by stage.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use super::ordered::{bfs_levels, level_set};
use super::reduce::{contract_sunflowers, linear_extract, pair_load_bound, two_q_linearity};
use crate::certify::{find_linear_cycle_with_budget, greedy_independent};
use crate::error::{Error, Result, Violation};
use crate::hypercore::{io, Hypergraph, Vertex};
use crate::rng::label_hash;
use crate::DEFAULT_BUDGET;

/// Inputs with at most this many vertices are checked for the forbidden cycle first.
pub const VERIFY_MAX_N: usize = 30;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Stage {
    pub name: String,
    /// FNV-1a of the stage graph in text format, hex.
    pub digest: String,
    pub vertices: usize,
    pub edges: usize,
    pub stats: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PipelineTrace {
    pub r: usize,
    pub ell: usize,
    pub n: usize,
    pub stages: Vec<Stage>,
    /// Independent in the input graph.
    pub independent_set: Vec<Vertex>,
    /// Edge count of each stage graph, in stage order.
    pub sizes_per_stage: Vec<usize>,
}

impl PipelineTrace {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

fn digest(g: &Hypergraph) -> String {
    format!("{:016x}", label_hash(&io::to_text(g)))
}

fn stage(name: &str, g: &Hypergraph, vertices: usize, stats: Vec<(&str, Value)>) -> Stage {
    Stage {
        name: name.into(),
        digest: digest(g),
        vertices,
        edges: g.num_edges(),
        stats: stats.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
    }
}

/// `⌈n/(Δ+1)⌉` for the maximum degree `Δ` of the 2-shadow.
pub fn shadow_baseline(g: &Hypergraph) -> usize {
    let d = g.shadow2().max_degree();
    g.n().div_ceil(d + 1)
}

/// Adds vertices to the independent set `base` in min-degree order while it stays independent.
fn complete(g: &Hypergraph, base: &[Vertex]) -> Vec<Vertex> {
    let mut inside = vec![false; g.n()];
    for &v in base {
        inside[v as usize] = true;
    }
    let mut order: Vec<Vertex> = (0..g.n() as Vertex).filter(|&v| !inside[v as usize]).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    for v in order {
        if !g.incident(v).iter().any(|&id| g.edge(id).iter().all(|&u| u == v || inside[u as usize])) {
            inside[v as usize] = true;
        }
    }
    (0..g.n() as Vertex).filter(|&v| inside[v as usize]).collect()
}

/// Sunflower contraction, pair-load check, low-degree restriction, then a shadow-greedy
/// independent set (`ℓ` even) or BFS-level extraction with deletions (`ℓ` odd). The set is
/// checked in every intermediate graph and in `g`, then greedily completed in `g`.
pub fn independent_set_pipeline(g: &Hypergraph, ell: usize) -> Result<PipelineTrace> {
    let r = match g.uniformity() {
        Some(r) if r >= 2 => r,
        None if g.is_empty() => 2,
        _ => return Err(Error::arg("the pipeline needs a uniform input")),
    };
    if ell < 3 {
        return Err(Error::arg("cycle length must be >= 3"));
    }
    let n = g.n();
    let m = ell / 2;
    let mut stages = Vec::new();

    let check = if n <= VERIFY_MAX_N {
        match find_linear_cycle_with_budget(g, ell, DEFAULT_BUDGET) {
            Ok(Some(c)) => {
                return Err(Error::precondition(Violation::new(format!(
                    "input has no linear {ell}-cycle; found edges {:?}",
                    c.edges
                ))))
            }
            Ok(None) => "verified",
            Err(Error::BudgetExceeded { .. }) => "trusted",
            Err(e) => return Err(e),
        }
    } else {
        "trusted"
    };
    stages.push(stage("input", g, n, vec![("r", json!(r)), ("cycle_free", json!(check))]));

    let g1 = contract_sunflowers(g, ell)?;
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for e in g1.edges() {
        *hist.entry(e.len()).or_default() += 1;
    }
    stages.push(stage("contract_sunflowers", &g1, n, vec![("edge_sizes", json!(hist))]));

    let q = pair_load_bound(r, r * ell)
        .and_then(|q| usize::try_from(q).ok())
        .ok_or_else(|| Error::arg("pair-load bound r!(rl-1)^r overflows"))?;
    let load = two_q_linearity(&g1, q);
    if !load.holds {
        return Err(Error::Invariant(format!("contracted graph is not (2,{q})-linear: {:?}", load.violation)));
    }
    let big: Vec<_> = g1.edges().iter().filter(|e| ell.is_multiple_of(2) || e.len() >= 3).cloned().collect();
    let g2 = Hypergraph::new(n, big)?;
    let lin = linear_extract(&g2, q)?;
    stages.push(stage(
        "pair_load",
        lin.graph(),
        n,
        vec![("q", json!(q)), ("max_load", json!(load.max_load)), ("linear_edges", json!(lin.num_edges()))],
    ));

    let total: usize = (0..n as Vertex).map(|v| g2.degree(v)).sum();
    let threshold = (2 * total).checked_div(n).unwrap_or(0);
    let keep: Vec<bool> = (0..n as Vertex).map(|v| g2.degree(v) <= threshold).collect();
    let u: Vec<Vertex> = (0..n as Vertex).filter(|&v| keep[v as usize]).collect();
    if 2 * u.len() < n {
        return Err(Error::Invariant(format!("only {} of {n} vertices have degree <= {threshold}", u.len())));
    }
    let h = g1.induced(&keep);
    stages.push(stage("low_degree", &h, u.len(), vec![("degree_threshold", json!(threshold))]));

    let w = if ell.is_multiple_of(2) { shadow_stage(&h, &u, &mut stages) } else { bfs_stage(&h, &u, m, &mut stages)? };

    for (name, graph) in [("restricted", &h), ("contracted", &g1), ("input", g)] {
        if !graph.is_independent(&w) {
            return Err(Error::Invariant(format!("extracted set is not independent in the {name} graph")));
        }
    }
    let full = complete(g, &w);
    let baseline = shadow_baseline(g);
    if !g.is_independent(&full) || full.len() < baseline {
        return Err(Error::Invariant(format!("completed set of size {} fails the baseline {baseline}", full.len())));
    }
    stages.push(stage(
        "complete",
        g,
        n,
        vec![("extracted", json!(w.len())), ("final", json!(full.len())), ("baseline", json!(baseline))],
    ));
    let sizes_per_stage = stages.iter().map(|s| s.edges).collect();
    Ok(PipelineTrace { r, ell, n, stages, independent_set: full, sizes_per_stage })
}

/// Greedy independent set in the shadow of `h` over `u`, after measuring how sparse every
/// neighbourhood is (min-degree greedy inside `D[N(v)]`).
fn shadow_stage(h: &Hypergraph, u: &[Vertex], stages: &mut Vec<Stage>) -> Vec<Vertex> {
    let d = h.shadow2();
    let mut worst = 0.0f64;
    let mut inside_max = 0usize;
    for &v in u {
        let nb = d.neighbors(v);
        if nb.is_empty() {
            continue;
        }
        let mut keep = vec![false; d.n()];
        nb.iter().for_each(|&x| keep[x as usize] = true);
        let local = d.induced(&keep);
        inside_max = inside_max.max(local.num_edges());
        let a = greedy_independent(&local, &nb).len();
        worst = worst.max(nb.len() as f64 / a as f64);
    }
    let w = greedy_independent(&d, u);
    stages.push(stage(
        "shadow_independent",
        &d,
        u.len(),
        vec![
            ("max_neighbourhood_edges", json!(inside_max)),
            ("neighbourhood_ratio", json!(format!("{worst:.6}"))),
            ("independent", json!(w.len())),
        ],
    ));
    w
}

/// Repeatedly: BFS levels in the 2-edges from the least live vertex, the first level `k < m`
/// with `|S_(k+1)| ≤ n^(1/m)|S_k|`, an independent `S' ⊆ S_k`; keep `S'` and delete
/// `S_(k-1) ∪ S_k ∪ S_(k+1)` plus one outside vertex of each larger edge through `S'`.
fn bfs_stage(h: &Hypergraph, u: &[Vertex], m: usize, stages: &mut Vec<Stage>) -> Result<Vec<Vertex>> {
    let n = h.n();
    let root = (u.len() as f64).powf(1.0 / m as f64);
    let mut alive = vec![false; n];
    u.iter().for_each(|&v| alive[v as usize] = true);
    let mut w = Vec::new();
    let mut rounds = 0usize;
    let mut deleted_extra = 0usize;
    while let Some(v) = (0..n).find(|&v| alive[v]) {
        rounds += 1;
        let cur = h.induced(&alive);
        let levels = bfs_levels(&cur, v as Vertex, m);
        let size = |i: usize| levels.get(i).map_or(0, |l| l.len());
        let k = (0..m)
            .find(|&k| size(k + 1) as f64 <= root * size(k) as f64)
            .ok_or_else(|| Error::Invariant("BFS levels grow faster than n^(1/m) up to level m".into()))?;
        let chosen = level_set(&cur, k, levels[k].clone(), m)?.independent;
        let mut gone = vec![false; n];
        for i in k.saturating_sub(1)..=k + 1 {
            for &x in levels.get(i).map_or(&[][..], |l| l.as_slice()) {
                gone[x as usize] = true;
            }
        }
        let tilde = gone.clone();
        for &x in &chosen {
            for &id in cur.incident(x) {
                let e = cur.edge(id);
                if e.len() >= 3 {
                    if let Some(&z) = e.iter().find(|&&z| !tilde[z as usize]) {
                        deleted_extra += usize::from(!gone[z as usize]);
                        gone[z as usize] = true;
                    }
                }
            }
        }
        for x in 0..n {
            if gone[x] {
                alive[x] = false;
            }
        }
        w.extend(chosen);
    }
    w.sort_unstable();
    stages.push(stage(
        "bfs_extraction",
        h,
        u.len(),
        vec![("rounds", json!(rounds)), ("extra_deletions", json!(deleted_extra)), ("independent", json!(w.len()))],
    ));
    Ok(w)
}
