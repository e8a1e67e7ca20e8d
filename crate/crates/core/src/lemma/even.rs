//! Growing a leveled linear tree by one level while no linear `2m`-cycle appears.

use std::collections::{BTreeMap, BTreeSet};

use super::basic::{cross_cut, maximal_matching, rainbow_path_avoiding, vertex_cover};
use super::constants::{even_base, even_supply_base};
use super::expand::{ancestor_at, big, matching_step, require, supply_anchors, violated, ExpansionOutcome};
use super::quasi::LeveledQuasiTree;
use crate::certify::CycleCertificate;
use crate::error::{Error, Result};
use crate::hypercore::{default_coloring, min_degree_peel, EdgeId, Hypergraph, LinearHypergraph, Vertex};
use crate::rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenParams {
    pub m: usize,
    pub seed: u64,
    /// Retry cap for the random cross-cut.
    pub max_tries: u32,
}

impl EvenParams {
    pub fn new(m: usize, seed: u64) -> Self {
        EvenParams { m, seed, max_tries: 200 }
    }
}

/// Either a linear `2m`-cycle of `g` or `E* ⊆ e` with `|E*| ≥ c_h|e|` and `E* \ L_h` a
/// matching. `tree` must be a leveled linear tree of height `h ≤ m-1` and every edge of `e`
/// must meet it in exactly one vertex of `L_h`.
pub fn expand_level_even(
    g: &LinearHypergraph,
    tree: &LeveledQuasiTree,
    e: &[EdgeId],
    params: &EvenParams,
) -> Result<ExpansionOutcome> {
    let r = g.uniformity().unwrap_or(0);
    let m = params.m;
    if r < 3 || m < 2 {
        return Err(Error::arg("need a linear r-graph with r >= 3 and m >= 2"));
    }
    if tree.height() > m - 1 {
        return Err(Error::arg(format!("tree height {} exceeds m - 1 = {}", tree.height(), m - 1)));
    }
    tree.validate(g).map_err(Error::arg)?;
    if !tree.is_tree() {
        return Err(Error::arg("expand_level_even needs a leveled linear tree"));
    }
    let mut trace = Vec::new();
    let h = tree.height();
    let need = even_supply_base(r, m).pow(h as u32) * big(tree.last_level().len());
    supply_anchors(g, tree, e)?;
    require("|E| >= (m2^(r+3))^h |L_h|", &big(e.len()), &need, &mut trace)?;
    let out = expand(g, tree, e, m, r, params, &mut trace)?;
    if let ExpansionOutcome::Step(step) = &out {
        step.validate(g, tree.last_level(), 0).map_err(Error::Invariant)?;
        let lhs = big(step.edges.len()) * even_base(r, m).pow(h as u32);
        require("|E*| >= c_h |E|", &lhs, &big(e.len()), &mut trace)?;
    }
    Ok(match out {
        ExpansionOutcome::Step(mut s) => {
            s.trace = trace;
            ExpansionOutcome::Step(s)
        }
        c => c,
    })
}

fn expand(
    g: &LinearHypergraph,
    tree: &LeveledQuasiTree,
    e: &[EdgeId],
    m: usize,
    r: usize,
    params: &EvenParams,
    trace: &mut Vec<String>,
) -> Result<ExpansionOutcome> {
    let h = tree.height();
    let anchors = supply_anchors(g, tree, e)?;
    if h == 0 {
        trace.push(format!("basis: E* = E with {} edges", e.len()));
        return Ok(ExpansionOutcome::Step(matching_step(g, e, &anchors, |_| false)));
    }
    let n = g.n();
    let f_edges: Vec<Vec<Vertex>> =
        e.iter().zip(&anchors).map(|(&id, &a)| g.edge(id).iter().copied().filter(|&v| v != a).collect()).collect();
    let f = Hypergraph::uniform(n, r - 1, f_edges)?;
    let cover = vertex_cover(&f);
    trace.push(format!("h = {h}: |F| = {}, |Q| = {} (exact: {})", f.num_edges(), cover.vertices.len(), cover.exact));
    let seed = rng::derive_seed(params.seed, &format!("even/{h}/{}", tree.root()));
    let cc = cross_cut(&f, &cover.vertices, seed, params.max_tries)?;
    let cut: BTreeSet<Vertex> = cc.cut.iter().copied().collect();
    // B as (L_h vertex, Q' vertex, supply index)
    let b: Vec<(Vertex, Vertex, usize)> = cc
        .edges
        .iter()
        .map(|&i| (anchors[i], *f.edge(i).iter().find(|v| cut.contains(v)).expect("cross-cut"), i))
        .collect();
    let group: BTreeMap<Vertex, Vertex> = tree
        .last_level()
        .iter()
        .map(|&v| (v, ancestor_at(tree, g, v, 1).expect("ancestor")))
        .collect();
    let mut groups_of: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
    for &(x, y, _) in &b {
        groups_of.entry(y).or_default().insert(group[&x]);
    }
    let spread = 2 * r * m;
    let q_plus: BTreeSet<Vertex> = groups_of.iter().filter(|(_, s)| s.len() >= spread).map(|(&y, _)| y).collect();
    let b_plus: Vec<(Vertex, Vertex, usize)> = b.iter().copied().filter(|t| q_plus.contains(&t.1)).collect();
    trace.push(format!("|B| = {}, |Q'| = {}, |Q+| = {}, |B+| = {}", b.len(), cut.len(), q_plus.len(), b_plus.len()));
    let c_prev = even_base(r, m).pow(h as u32 - 1);
    if 2 * b_plus.len() >= b.len() {
        trace.push("case 1: |B+| >= |B|/2".into());
        if q_plus.len() * 4 * r * m < b_plus.len() {
            trace.push("|Q+| < |B+|/(4rm): closing a 2m-cycle".into());
            return close_case1(g, tree, &b_plus, &group, m, r, e, trace).map(ExpansionOutcome::Cycle);
        }
    } else {
        trace.push("case 2: |B-| >= |B|/2".into());
        let b_minus: Vec<(Vertex, Vertex, usize)> = b.iter().copied().filter(|t| !q_plus.contains(&t.1)).collect();
        let mut per: BTreeMap<Vertex, BTreeMap<Vertex, usize>> = BTreeMap::new();
        for &(x, y, _) in &b_minus {
            *per.entry(y).or_default().entry(group[&x]).or_default() += 1;
        }
        let target: BTreeMap<Vertex, Vertex> = per
            .iter()
            .map(|(&y, counts)| {
                let best = counts.iter().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0))).expect("nonempty");
                (y, *best.0)
            })
            .collect();
        let b1: Vec<(Vertex, Vertex, usize)> = b_minus.iter().copied().filter(|t| target[&t.1] == group[&t.0]).collect();
        let supply = even_supply_base(r, m).pow(h as u32 - 1);
        require(
            "|B-_1| >= 2(m2^(r+3))^(h-1)|L_h|",
            &big(b1.len()),
            &(big(2) * &supply * big(tree.last_level().len())),
            trace,
        )?;
        let mut by_group: BTreeMap<Vertex, Vec<(Vertex, Vertex, usize)>> = BTreeMap::new();
        for &t in &b1 {
            by_group.entry(group[&t.0]).or_default().push(t);
        }
        let mut heavy_total = 0usize;
        let mut q_total = 0usize;
        for (&xi, edges) in &by_group {
            let a_i = group.values().filter(|&&gv| gv == xi).count();
            if big(edges.len()) < &supply * big(a_i) {
                continue;
            }
            heavy_total += edges.len();
            let sub = tree.down_graph(g, xi)?;
            let ei: Vec<EdgeId> = edges.iter().map(|t| e[t.2]).collect();
            trace.push(format!("heavy group at {xi}: {} edges, recursing at height {}", ei.len(), sub.height()));
            match expand(g, &sub, &ei, m, r, params, trace)? {
                ExpansionOutcome::Cycle(c) => return Ok(ExpansionOutcome::Cycle(c)),
                ExpansionOutcome::Step(s) => {
                    require("|E'_i| >= c_(h-1)|E_i|", &(big(s.edges.len()) * &c_prev), &big(ei.len()), trace)?;
                    let qs: BTreeSet<Vertex> = edges.iter().map(|t| t.1).collect();
                    q_total += qs.len();
                }
            }
        }
        require("heavy groups carry half of B-_1", &big(2 * heavy_total), &big(b1.len()), trace)?;
        trace.push(format!("sum |Q_i| = {q_total}"));
    }
    require("|Q'| >= c_(h-1)|B|/(8rm)", &(big(cut.len() * 8 * r * m) * &c_prev), &big(b.len()), trace)?;
    let fstar = maximal_matching(&f);
    let in_q: BTreeSet<Vertex> = cover.vertices.iter().copied().collect();
    let ids: Vec<EdgeId> = fstar.iter().map(|&i| e[i]).collect();
    let anc: Vec<Vertex> = fstar.iter().map(|&i| anchors[i]).collect();
    trace.push(format!("maximal matching of F: {} edges", ids.len()));
    Ok(ExpansionOutcome::Step(matching_step(g, &ids, &anc, |v| in_q.contains(&v))))
}

#[allow(clippy::too_many_arguments)]
fn close_case1(
    g: &LinearHypergraph,
    tree: &LeveledQuasiTree,
    b_plus: &[(Vertex, Vertex, usize)],
    group: &BTreeMap<Vertex, Vertex>,
    m: usize,
    r: usize,
    e: &[EdgeId],
    trace: &mut Vec<String>,
) -> Result<CycleCertificate> {
    let h = tree.height();
    let n = g.n();
    let pairs: Vec<Vec<Vertex>> = b_plus.iter().map(|t| { let mut p = vec![t.0, t.1]; p.sort_unstable(); p }).collect();
    let bg = Hypergraph::uniform(n, 2, pairs)?;
    let core = min_degree_peel(&bg, &((2 * r * m - 1) as f64)).graph;
    if core.is_empty() {
        return Err(violated("B+ contains a subgraph of min degree >= 2rm".into(), trace));
    }
    let q_side: BTreeSet<Vertex> = b_plus.iter().map(|t| t.1).collect();
    let x0 = *core.support().iter().find(|v| q_side.contains(v)).expect("core meets Q+");
    let len = 2 * m - 2 * h - 2;
    let host_of = |a: Vertex, b: Vertex| g.edge_containing(a, b).expect("pair in shadow");
    let (pplus, y) = if len == 0 {
        (Vec::new(), x0)
    } else {
        let pairs: Vec<(Vertex, Vertex)> = core.edges().iter().map(|p| (p[0], p[1])).collect();
        let phi = default_coloring(g, &pairs)?;
        let path = rainbow_path_avoiding(&core, &phi, x0, len, &BTreeSet::new(), &BTreeSet::new())?;
        let spine = path.spine(&core);
        (spine.windows(2).map(|w| host_of(w[0], w[1])).collect::<Vec<_>>(), path.end)
    };
    let mut used: BTreeSet<Vertex> = pplus.iter().flat_map(|&id| g.edge(id).iter().copied()).collect();
    used.insert(x0);
    used.insert(y);
    let supply: BTreeSet<EdgeId> = e.iter().copied().collect();
    let nbrs = |z: Vertex| -> Vec<(Vertex, EdgeId)> {
        b_plus.iter().filter(|t| t.1 == z).map(|t| (t.0, host_of(t.0, t.1))).filter(|(_, id)| supply.contains(id)).collect()
    };
    for (u, e1) in nbrs(x0) {
        if g.edge(e1).iter().any(|&v| v != x0 && used.contains(&v)) {
            continue;
        }
        for (v, f1) in nbrs(y) {
            if group[&v] == group[&u] || f1 == e1 {
                continue;
            }
            if g.edge(f1).iter().any(|&w| w != y && (used.contains(&w) || g.edge(e1).contains(&w))) {
                continue;
            }
            let (Some(p1), Some(p2)) =
                (tree.monotone_path(g, tree.root(), u), tree.monotone_path(g, tree.root(), v))
            else {
                continue;
            };
            let mut edges = p1.edges.clone();
            edges.push(e1);
            edges.extend_from_slice(&pplus);
            edges.push(f1);
            edges.extend(p2.edges.iter().rev());
            let cyc = CycleCertificate { edges };
            if cyc.len() == 2 * m && cyc.validate(g).is_ok() {
                trace.push(format!("closed a {}-cycle through {x0}", 2 * m));
                return Ok(cyc);
            }
        }
    }
    Err(violated(format!("case 1 closes a linear {}-cycle", 2 * m), trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lemma::expand::Regime;

    fn host(edges: Vec<Vec<Vertex>>) -> LinearHypergraph {
        let n = edges.iter().flatten().max().map_or(0, |&v| v as usize + 1);
        LinearHypergraph::new(Hypergraph::uniform(n, 3, edges).unwrap()).unwrap()
    }

    type Segment = Vec<(EdgeId, Vertex, Vertex)>;

    /// Root 0 with `k` children `2j+2` through companions `2j+1`; edge ids `0..k`.
    fn star_tree(k: usize) -> (Vec<Vec<Vertex>>, Segment) {
        let edges = (0..k as Vertex).map(|j| vec![0, 2 * j + 1, 2 * j + 2]).collect();
        let seg = (0..k).map(|j| (j, 2 * j as Vertex + 1, 2 * j as Vertex + 2)).collect();
        (edges, seg)
    }

    #[test]
    fn basis_keeps_every_edge() {
        let g = host(vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]]);
        let q = LeveledQuasiTree::new(0);
        let ExpansionOutcome::Step(s) = expand_level_even(&g, &q, &[0, 1, 2], &EvenParams::new(2, 1)).unwrap() else {
            panic!("expected a step")
        };
        assert_eq!(s.edges, vec![0, 1, 2]);
        assert_eq!(s.regime, Regime::CrosscutDegree1);
        assert!(s.validate(&g, &[0], 0).is_ok());
    }

    #[test]
    fn dense_common_neighbours_close_a_four_cycle() {
        let k = 30;
        let (mut edges, seg) = star_tree(k);
        let mut next = 2 * k as Vertex + 1;
        let mut supply = Vec::new();
        for _ in 0..128 {
            let qv = next;
            next += 1;
            for j in 0..k as Vertex {
                supply.push(edges.len());
                edges.push(vec![2 * j + 2, qv, next]);
                next += 1;
            }
        }
        let g = host(edges);
        let mut q = LeveledQuasiTree::new(0);
        q.extend(&g, &seg).unwrap();
        match expand_level_even(&g, &q, &supply, &EvenParams::new(2, 7)).unwrap() {
            ExpansionOutcome::Cycle(c) => {
                assert_eq!(c.len(), 4);
                assert!(c.validate(&g).is_ok());
            }
            ExpansionOutcome::Step(_) => panic!("expected a 4-cycle"),
        }
    }

    #[test]
    fn stacked_steps_grow_a_tree() {
        let mut edges = vec![vec![0, 1, 2], vec![0, 3, 4]];
        let mut next = 5;
        let mut supply = Vec::new();
        for a in [2, 4] {
            for _ in 0..128 {
                supply.push(edges.len());
                edges.push(vec![a, next, next + 1]);
                next += 2;
            }
        }
        let g = host(edges);
        let params = EvenParams::new(2, 3);
        let mut q = LeveledQuasiTree::new(0);
        let ExpansionOutcome::Step(s0) = expand_level_even(&g, &q, &[0, 1], &params).unwrap() else { panic!() };
        s0.apply(&mut q, &g).unwrap();
        assert_eq!(q.last_level(), &[2, 4]);
        let ExpansionOutcome::Step(s1) = expand_level_even(&g, &q, &supply, &params).unwrap() else { panic!() };
        assert!(s1.validate(&g, &[2, 4], 0).is_ok());
        assert!(s1.edges.len() * 192 >= supply.len());
        s1.apply(&mut q, &g).unwrap();
        assert_eq!(q.height(), 2);
        assert!(q.validate(&g).is_ok() && q.is_tree());
    }

    #[test]
    fn short_supply_is_a_violation() {
        let (mut edges, seg) = star_tree(2);
        edges.push(vec![2, 10, 11]);
        let g = host(edges);
        let mut q = LeveledQuasiTree::new(0);
        q.extend(&g, &seg).unwrap();
        let err = expand_level_even(&g, &q, &[2], &EvenParams::new(2, 0)).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated(_)));
        assert!(expand_level_even(&g, &q, &[0], &EvenParams::new(2, 0)).is_err());
    }
}
