//! Growing a leveled linear quasi-tree by one level while no linear `(2m+1)`-cycle appears.
//! Dominators (spider centres over a vertex's neighbourhood in `L_h`) act as local roots.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;

use super::basic::{cross_cut, maximal_matching, rainbow_path_avoiding, vertex_cover};
use super::constants::{odd_c, odd_heavy_degree, odd_p};
use super::expand::{big, matching_step, require, supply_anchors, violated, ExpansionOutcome, ExpansionStep, Regime};
use super::quasi::{joining_path, LevelKind, LeveledQuasiTree};
use super::spider::{find_spider, DominatorIndex, Spider};
use crate::certify::CycleCertificate;
use crate::error::{Error, Result};
use crate::hypercore::{default_coloring, min_degree_peel, EdgeId, Hypergraph, LinearHypergraph, Vertex};
use crate::rng;

/// Parameters of the odd expansion. [`OddParams::new`] uses `p = 2mr`,
/// `c = 2^(r+2)(mpr)^m` and splitting degree `(mpr)^m`; the constants may be replaced to
/// drive individual branches on small hosts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddParams {
    pub m: usize,
    pub seed: u64,
    pub max_tries: u32,
    pub p: usize,
    pub c: BigUint,
    pub heavy_degree: BigUint,
}

impl OddParams {
    pub fn new(r: usize, m: usize, seed: u64) -> Self {
        let p = odd_p(r, m);
        OddParams { m, seed, max_tries: 200, p, c: odd_c(r, m), heavy_degree: odd_heavy_degree(r, m, p) }
    }

    pub fn with_constants(mut self, p: usize, c: BigUint, heavy_degree: BigUint) -> Self {
        self.p = p;
        self.c = c;
        self.heavy_degree = heavy_degree;
        self
    }
}

/// Either a linear `(2m+1)`-cycle of `g`, or `E* ⊆ e` with `|E*| ≥ |e|/c^h`, a cross-cut `S`
/// and `Γ` such that `E*` is the expansion of `Γ` and either `δ(Γ) ≥ p` or all cut vertices
/// have degree 1.
pub fn expand_level_odd(
    g: &LinearHypergraph,
    q: &LeveledQuasiTree,
    e: &[EdgeId],
    params: &OddParams,
) -> Result<ExpansionOutcome> {
    let r = g.uniformity().unwrap_or(0);
    let m = params.m;
    if r < 3 || m < 2 || params.p == 0 {
        return Err(Error::arg("need a linear r-graph with r >= 3, m >= 2 and p >= 1"));
    }
    if q.height() > m - 1 {
        return Err(Error::arg(format!("quasi-tree height {} exceeds m - 1 = {}", q.height(), m - 1)));
    }
    q.validate(g).map_err(Error::arg)?;
    supply_anchors(g, q, e)?;
    let h = q.height();
    let mut trace = Vec::new();
    require("|E| >= c^h |L_h|", &big(e.len()), &(params.c.pow(h as u32) * big(q.last_level().len())), &mut trace)?;
    let mut ctx = Ctx { g, m, r, params };
    let out = ctx.expand(q, e, &mut trace)?;
    Ok(match out {
        ExpansionOutcome::Step(mut s) => {
            s.validate(g, q.last_level(), params.p).map_err(Error::Invariant)?;
            require("|E*| >= |E|/c^h", &(big(s.edges.len()) * params.c.pow(h as u32)), &big(e.len()), &mut trace)?;
            s.trace = trace;
            ExpansionOutcome::Step(s)
        }
        c => c,
    })
}

struct Ctx<'a> {
    g: &'a LinearHypergraph,
    m: usize,
    r: usize,
    params: &'a OddParams,
}

/// A `B`-pair: `L_h` vertex, cut vertex, host edge.
type Pair = (Vertex, Vertex, EdgeId);

/// First failing link of a chain whose conclusion contradicts the current branch.
fn chain(links: &[(&str, BigUint, BigUint)], trace: &[String]) -> Error {
    for (name, lhs, rhs) in links {
        if lhs < rhs {
            return violated(format!("{name}: {lhs} >= {rhs}"), trace);
        }
    }
    Error::Invariant(format!("contradiction reached with every inequality holding [trace: {}]", trace.join(" -> ")))
}

impl Ctx<'_> {
    fn host(&self, a: Vertex, b: Vertex) -> EdgeId {
        self.g.edge_containing(a, b).expect("pair in shadow")
    }

    fn verts(&self, ids: &[EdgeId]) -> BTreeSet<Vertex> {
        ids.iter().flat_map(|&id| self.g.edge(id).iter().copied()).collect()
    }

    fn expand(&mut self, q: &LeveledQuasiTree, e: &[EdgeId], trace: &mut Vec<String>) -> Result<ExpansionOutcome> {
        let (g, r) = (self.g, self.r);
        let p = self.params.p;
        let c = &self.params.c;
        let h = q.height();
        let anchors = supply_anchors(g, q, e)?;
        if h == 0 {
            trace.push(format!("basis: E* = E with {} edges", e.len()));
            return Ok(ExpansionOutcome::Step(matching_step(g, e, &anchors, |_| false)));
        }
        let f_edges: Vec<Vec<Vertex>> =
            e.iter().zip(&anchors).map(|(&id, &a)| g.edge(id).iter().copied().filter(|&v| v != a).collect()).collect();
        let f = Hypergraph::uniform(g.n(), r - 1, f_edges)?;
        let cover = vertex_cover(&f);
        let ch = c.pow(h as u32);
        trace.push(format!("h = {h}: |F| = {}, |Q| = {} (exact: {})", f.num_edges(), cover.vertices.len(), cover.exact));
        if big(cover.vertices.len()) * &ch >= big((r - 1) * e.len()) {
            trace.push("|Q| >= (r-1)|E|/c^h: maximal matching of F".into());
            let in_q: BTreeSet<Vertex> = cover.vertices.iter().copied().collect();
            let fstar = maximal_matching(&f);
            let ids: Vec<EdgeId> = fstar.iter().map(|&i| e[i]).collect();
            let anc: Vec<Vertex> = fstar.iter().map(|&i| anchors[i]).collect();
            return Ok(ExpansionOutcome::Step(matching_step(g, &ids, &anc, |v| in_q.contains(&v))));
        }
        let seed = rng::derive_seed(self.params.seed, &format!("odd/{h}/{}", q.root()));
        let cc = cross_cut(&f, &cover.vertices, seed, self.params.max_tries)?;
        let cut: BTreeSet<Vertex> = cc.cut.iter().copied().collect();
        let b: Vec<Pair> = cc
            .edges
            .iter()
            .map(|&i| (anchors[i], *f.edge(i).iter().find(|v| cut.contains(v)).expect("cross-cut"), e[i]))
            .collect();
        let mut nb: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for &(x, y, _) in &b {
            nb.entry(y).or_default().push(x);
        }
        let heavy = &self.params.heavy_degree;
        let q_plus: BTreeSet<Vertex> = nb.iter().filter(|(_, xs)| big(xs.len()) >= *heavy).map(|(&y, _)| y).collect();
        let b_plus: Vec<Pair> = b.iter().copied().filter(|t| q_plus.contains(&t.1)).collect();
        let b_minus = b.len() - b_plus.len();
        trace.push(format!("|B| = {}, |Q'| = {}, |Q+| = {}, |B+| = {}", b.len(), cut.len(), q_plus.len(), b_plus.len()));
        if 2 * b_minus >= b.len() {
            trace.push("case 1: |B-| >= |B|/2".into());
            let q_minus = cut.len() - q_plus.len();
            return Err(chain(
                &[
                    ("|Q-| (mpr)^m > |B-|", big(q_minus) * heavy, big(b_minus + 1)),
                    ("2^(r-1)|B| >= (r-1)|E|", big(b.len()) << (r - 1), big((r - 1) * e.len())),
                    ("c^h > 2^r (mpr)^m", ch.clone(), (big(1) << r) * heavy + big(1)),
                ],
                trace,
            ));
        }
        trace.push("case 2: |B+| >= |B|/2".into());
        let index = DominatorIndex::new(q, g)?;
        let mut alpha: BTreeMap<Vertex, (Vertex, Spider)> = BTreeMap::new();
        let hpr = big(h * p * r).pow(h as u32);
        for &y in &q_plus {
            let targets = &nb[&y];
            require("|N_B(y)| >= (hpr)^h", &big(targets.len()), &hpr, trace)?;
            let dom = match index.dominator(g, targets, p) {
                Some(d) => d,
                None => {
                    let res = find_spider(q, g, targets, p)?;
                    (res.spider.center, res.spider)
                }
            };
            alpha.insert(y, dom);
        }
        let mut parts: BTreeMap<(usize, LevelKind), Vec<Pair>> = BTreeMap::new();
        for &t in &b_plus {
            let (x, _) = &alpha[&t.1];
            let (kind, i) = q.level_of(*x).expect("levelled dominator");
            parts.entry((i, kind)).or_default().push(t);
        }
        let (&(i, kind), part) =
            parts.iter().max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.0.cmp(a.0))).expect("B+ is nonempty");
        require("largest dominator class has |B+|/(2h) pairs", &big(part.len() * 2 * h), &big(b_plus.len()), trace)?;
        trace.push(format!("dominators at {kind:?} level {i}: {} pairs", part.len()));
        if (i, kind) == (0, LevelKind::Main) {
            return self.root_dominated(q, part, trace);
        }
        if i == 0 {
            return Err(violated(format!("dominators in L'_0 need p <= 1, got p = {p}"), trace));
        }
        self.level_dominated(q, e.len(), cover.vertices.len(), &index, part, &alpha, (i, kind), trace)
    }

    /// All dominators at the root: peel to minimum degree `p` and check the default colouring
    /// is strongly rainbow, closing a cycle on any clash.
    fn root_dominated(
        &self,
        q: &LeveledQuasiTree,
        part: &[Pair],
        trace: &mut Vec<String>,
    ) -> Result<ExpansionOutcome> {
        let g = self.g;
        let p = self.params.p;
        let core = peel_pairs(g.n(), part, p)?;
        if core.is_empty() {
            return Err(violated(format!("B_0 contains a subgraph of min degree >= p = {p}"), trace));
        }
        trace.push(format!("B'_0 has {} pairs", core.len()));
        let clashes = clashes(g, &core, |v| v as usize);
        if !clashes.is_empty() {
            trace.push(format!("{} colour clashes in B'_0", clashes.len()));
            let gamma = pair_graph(g.n(), &core)?;
            for &(e1, e2) in &clashes {
                for (a, b) in [(e1, e2), (e2, e1)] {
                    if let Some(c) = self.close_pair(q, &gamma, q.root(), q.root(), a, b, 0) {
                        trace.push("closed a cycle through a root dominator".into());
                        return Ok(ExpansionOutcome::Cycle(c));
                    }
                }
            }
            return Err(violated("a colour clash in B'_0 closes a linear (2m+1)-cycle".into(), trace));
        }
        Ok(ExpansionOutcome::Step(step_from_pairs(&core, Regime::MinDegreeP)))
    }

    /// Appends to `path` the host edges of a rainbow path of length `len` in `gamma` from
    /// `start` avoiding the vertices of `blocked`; returns its end.
    fn extend_rainbow(
        &self,
        gamma: &Hypergraph,
        start: Vertex,
        len: usize,
        blocked: &[EdgeId],
        path: &mut Vec<EdgeId>,
    ) -> Option<Vertex> {
        if len == 0 {
            return Some(start);
        }
        let g = self.g;
        let bv = self.verts(blocked);
        let avoid: BTreeSet<Vertex> = bv.iter().copied().filter(|&v| v != start).collect();
        let pairs: Vec<(Vertex, Vertex)> = gamma.edges().iter().map(|p| (p[0], p[1])).collect();
        let phi = default_coloring(g, &pairs).ok()?;
        let pc = rainbow_path_avoiding(gamma, &phi, start, len, &bv, &avoid).ok()?;
        let spine = pc.spine(gamma);
        path.extend(spine.windows(2).map(|w| self.host(w[0], w[1])));
        Some(pc.end)
    }

    #[allow(clippy::too_many_arguments)]
    fn level_dominated(
        &mut self,
        q: &LeveledQuasiTree,
        e_len: usize,
        q_len: usize,
        index: &DominatorIndex,
        part: &[Pair],
        alpha: &BTreeMap<Vertex, (Vertex, Spider)>,
        (i, kind): (usize, LevelKind),
        trace: &mut Vec<String>,
    ) -> Result<ExpansionOutcome> {
        let (g, r, m) = (self.g, self.r, self.m);
        let p = self.params.p;
        let c = self.params.c.clone();
        let h = q.height();
        let d: Vec<Pair> = part
            .iter()
            .copied()
            .filter(|t| index.last_below(alpha[&t.1].0).is_some_and(|a| a.contains(&t.0)))
            .collect();
        let hpr = big(h * p * r).pow(h as u32 - 1);
        require("|D| >= |B_i|/(hpr)^(h-1)", &(big(d.len()) * &hpr), &big(part.len()), trace)?;
        let level: Vec<Vertex> =
            if kind == LevelKind::Main { q.main_level(i).to_vec() } else { q.companion_level(i).to_vec() };
        let c_prev = c.pow(h as u32 - 1);
        let mut heavy_total = 0usize;
        let mut type1: Vec<(Vertex, ExpansionStep)> = Vec::new();
        let mut type2_supply = 0usize;
        let mut type2_cut = 0usize;
        for &x in &level {
            let dx: Vec<Pair> = d.iter().copied().filter(|t| alpha[&t.1].0 == x).collect();
            let ax = index.last_below(x).map_or(0, |a| a.len());
            if dx.is_empty() || big(dx.len()) <= &c_prev * big(ax) {
                continue;
            }
            heavy_total += dx.len();
            let sub = index.tree_of(x).expect("indexed").clone();
            let ex: Vec<EdgeId> = dx.iter().map(|t| t.2).collect();
            trace.push(format!("heavy {x}: {} edges, recursing at height {}", ex.len(), sub.height()));
            match self.expand(&sub, &ex, trace)? {
                ExpansionOutcome::Cycle(cyc) => return Ok(ExpansionOutcome::Cycle(cyc)),
                ExpansionOutcome::Step(s) => {
                    require("|E*_x| >= |E_x|/c^(h-1)", &(big(s.edges.len()) * &c_prev), &big(ex.len()), trace)?;
                    match s.regime {
                        Regime::MinDegreeP => type1.push((x, s)),
                        Regime::CrosscutDegree1 => {
                            type2_supply += ex.len();
                            type2_cut += s.edges.len();
                        }
                    }
                }
            }
        }
        require("heavy vertices carry half of D", &big(2 * heavy_total), &big(d.len()), trace)?;
        if 4 * type2_supply >= d.len() {
            trace.push("type-2 vertices carry a quarter of D".into());
            let base = big(m * p * r).pow(m as u32 - 1);
            return Err(chain(
                &[
                    ("|Q| >= sum |E*_x| over type 2", big(q_len), big(type2_cut)),
                    ("2^(r+1)m(mpr)^(m-1)|D| >= (r-1)|E|", big(d.len()) * big(2 * m) * (big(1) << r) * &base, big((r - 1) * e_len)),
                    ("c >= 2^(r+3)m(mpr)^(m-1)", c.clone(), (big(1) << (r + 3)) * big(m) * &base),
                ],
                trace,
            ));
        }
        let mut owner: BTreeMap<Vertex, usize> = BTreeMap::new();
        let mut all: Vec<Pair> = Vec::new();
        for (k, (_, s)) in type1.iter().enumerate() {
            for (&id, &(a, b)) in s.edges.iter().zip(&s.gamma) {
                owner.insert(a, k);
                owner.insert(b, k);
                all.push((a, b, id));
            }
        }
        let clash = clashes(g, &all, |v| owner[&v]);
        if !clash.is_empty() {
            trace.push(format!("{} colour clashes between type-1 vertices", clash.len()));
            for &(e1, e2) in &clash {
                for (a, b) in [(e1, e2), (e2, e1)] {
                    let (xa, xb) = (type1[owner[&a.0]].0, type1[owner[&b.0]].0);
                    let gb = pair_graph(g.n(), &pairs_of(&type1[owner[&b.0]].1))?;
                    if let Some(cyc) = self.close_pair(q, &gb, xa, xb, a, b, i) {
                        trace.push("closed a cycle across two dominator subtrees".into());
                        return Ok(ExpansionOutcome::Cycle(cyc));
                    }
                }
            }
            return Err(violated("a colour clash between type-1 vertices closes a linear (2m+1)-cycle".into(), trace));
        }
        let cut: BTreeSet<Vertex> = all.iter().map(|t| t.1).collect();
        let clean: Vec<Pair> =
            all.iter().copied().filter(|t| g.edge(t.2).iter().all(|v| *v == t.1 || !cut.contains(v))).collect();
        let core = peel_pairs(g.n(), &clean, p)?;
        if core.is_empty() {
            return Err(violated(format!("the union of type-1 expansions keeps min degree >= p = {p}"), trace));
        }
        trace.push(format!("union of {} type-1 expansions: {} of {} pairs kept", type1.len(), core.len(), all.len()));
        Ok(ExpansionOutcome::Step(step_from_pairs(&core, Regime::MinDegreeP)))
    }

    /// Closes a `(2m+1)`-cycle from two pairs whose host edges share a colour vertex:
    /// `x ⇝ a`, `e`, `f`, a rainbow path in `gamma_y` from the cut vertex of `f` to some `z`,
    /// a host edge `{w, z}`, `y ⇝ w`, and a joining path between the tops of the two descents.
    #[allow(clippy::too_many_arguments)]
    fn close_pair(
        &self,
        q: &LeveledQuasiTree,
        gamma_y: &Hypergraph,
        x: Vertex,
        y: Vertex,
        e: Pair,
        f: Pair,
        i: usize,
    ) -> Option<CycleCertificate> {
        let g = self.g;
        let h = q.height();
        let want = 2 * self.m + 1;
        let (a, _, ee) = e;
        let (_, b2, ff) = f;
        let xside = descent(q, g, x, a)?;
        let xtop = q.segment_edge(g, *xside.first()?)?.main;
        for t in 0..=i {
            let Some(len) = (want + 2 * i).checked_sub(3 + 2 * t + 2 * h) else { continue };
            let mut pplus = vec![ee, ff];
            let Some(z) = self.extend_rainbow(gamma_y, b2, len, &[ee, ff], &mut pplus) else { continue };
            for &id in gamma_y.incident(z) {
                let pe = gamma_y.edge(id);
                let w = if pe[0] == z { pe[1] } else { pe[0] };
                let Some(yside) = descent(q, g, y, w) else { continue };
                let Some(ytop) = yside.first().and_then(|&id| q.segment_edge(g, id)).map(|s| s.main) else { continue };
                let r0 = if xtop == ytop {
                    Vec::new()
                } else {
                    match joining_path(q, g, xtop, ytop) {
                        Ok(p) => p.edges,
                        Err(_) => continue,
                    }
                };
                if r0.len() != 2 * t {
                    continue;
                }
                let Some(fz) = g.edge_containing(w, z) else { continue };
                let mut edges = r0;
                edges.extend_from_slice(&yside);
                edges.push(fz);
                edges.extend(pplus.iter().rev());
                edges.extend(xside.iter().rev());
                let cyc = CycleCertificate { edges };
                if cyc.len() == want && cyc.validate(g).is_ok() {
                    return Some(cyc);
                }
            }
        }
        None
    }
}

/// Edges of the monotone path from `x` down to `a ∈ L_h`.
fn descent(q: &LeveledQuasiTree, g: &Hypergraph, x: Vertex, a: Vertex) -> Option<Vec<EdgeId>> {
    q.monotone_path(g, x, a).map(|p| p.edges).filter(|e| !e.is_empty())
}

fn pairs_of(s: &ExpansionStep) -> Vec<Pair> {
    s.edges.iter().zip(&s.gamma).map(|(&id, &(a, b))| (a, b, id)).collect()
}

fn pair_graph(n: usize, pairs: &[Pair]) -> Result<Hypergraph> {
    Hypergraph::uniform(n, 2, pairs.iter().map(|t| { let mut v = vec![t.0, t.1]; v.sort_unstable(); v }).collect())
}

/// Pairs surviving the min-degree-`p` peel, in input order.
fn peel_pairs(n: usize, pairs: &[Pair], p: usize) -> Result<Vec<Pair>> {
    let bg = pair_graph(n, pairs)?;
    let kept = min_degree_peel(&bg, &(p as f64 - 0.5)).kept;
    let keep: BTreeSet<Vertex> = kept.into_iter().collect();
    Ok(pairs.iter().copied().filter(|t| keep.contains(&t.0) && keep.contains(&t.1)).collect())
}

/// Non-incident pairs in different classes (by `class` of the `L_h` vertex) whose host edges
/// share a colour vertex.
fn clashes(g: &Hypergraph, pairs: &[Pair], class: impl Fn(Vertex) -> usize) -> Vec<(Pair, Pair)> {
    let mut by_colour: BTreeMap<Vertex, Vec<Pair>> = BTreeMap::new();
    for &t in pairs {
        for &v in g.edge(t.2) {
            if v != t.0 && v != t.1 {
                by_colour.entry(v).or_default().push(t);
            }
        }
    }
    let mut out = Vec::new();
    for list in by_colour.values() {
        for (k, &s) in list.iter().enumerate() {
            for &t in &list[k + 1..] {
                let incident = s.0 == t.0 || s.1 == t.1;
                if !incident && class(s.0) != class(t.0) {
                    out.push((s, t));
                }
            }
        }
    }
    out
}

fn step_from_pairs(pairs: &[Pair], regime: Regime) -> ExpansionStep {
    let mut cut: Vec<Vertex> = pairs.iter().map(|t| t.1).collect();
    cut.sort_unstable();
    cut.dedup();
    ExpansionStep {
        edges: pairs.iter().map(|t| t.2).collect(),
        cut,
        gamma: pairs.iter().map(|t| (t.0, t.1)).collect(),
        regime,
        trace: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn host(edges: Vec<Vec<Vertex>>) -> LinearHypergraph {
        let n = edges.iter().flatten().max().map_or(0, |&v| v as usize + 1);
        LinearHypergraph::new(Hypergraph::uniform(n, 3, edges).unwrap()).unwrap()
    }

    /// Root 0, children `x_j = 2j+2` through companions `2j+1` for `j < k`, and `ys` vertices
    /// joined to every child. With `shared` the third vertices follow a Latin square, so edges
    /// at different children share colours; otherwise every colour is private.
    fn bipartite_host(k: usize, ys: usize, shared: bool) -> (LinearHypergraph, LeveledQuasiTree, Vec<EdgeId>) {
        let mut edges: Vec<Vec<Vertex>> = (0..k as Vertex).map(|j| vec![0, 2 * j + 1, 2 * j + 2]).collect();
        let y0 = 2 * k as Vertex + 1;
        let mut next = y0 + ys as Vertex;
        let side = k.max(ys) as Vertex;
        let mut supply = Vec::new();
        for a in 0..ys as Vertex {
            for j in 0..k as Vertex {
                let colour = if shared {
                    next + (a + j) % side
                } else {
                    next += 1;
                    next - 1 + side
                };
                supply.push(edges.len());
                edges.push(vec![2 * j + 2, y0 + a, colour]);
            }
        }
        let g = host(edges);
        let mut q = LeveledQuasiTree::new(0);
        let seg: Vec<_> = (0..k).map(|j| (j, 2 * j as Vertex + 1, 2 * j as Vertex + 2)).collect();
        q.extend(&g, &seg).unwrap();
        (g, q, supply)
    }

    fn small(m: usize, seed: u64) -> OddParams {
        OddParams::new(3, m, seed).with_constants(3, big(4), big(3))
    }

    #[test]
    fn default_constants_follow_the_formulas() {
        let p = OddParams::new(3, 2, 0);
        assert_eq!((p.p, p.c.clone(), p.heavy_degree.clone()), (12, big(165888), big(5184)));
    }

    #[test]
    fn basis_keeps_every_edge() {
        let g = host(vec![vec![0, 1, 2], vec![0, 3, 4]]);
        let q = LeveledQuasiTree::new(0);
        let ExpansionOutcome::Step(s) = expand_level_odd(&g, &q, &[0, 1], &OddParams::new(3, 2, 0)).unwrap() else {
            panic!("expected a step")
        };
        assert_eq!(s.edges, vec![0, 1]);
    }

    #[test]
    fn shared_colours_close_a_five_cycle() {
        let (g, q, supply) = bipartite_host(10, 12, true);
        for seed in 0..5 {
            match expand_level_odd(&g, &q, &supply, &small(2, seed)).unwrap() {
                ExpansionOutcome::Cycle(c) => {
                    assert_eq!(c.len(), 5);
                    assert!(c.validate(&g).is_ok());
                }
                ExpansionOutcome::Step(_) => panic!("expected a 5-cycle"),
            }
        }
    }

    #[test]
    fn private_colours_expand_with_min_degree() {
        let (g, q, supply) = bipartite_host(10, 12, false);
        let ExpansionOutcome::Step(s) = expand_level_odd(&g, &q, &supply, &small(2, 5)).unwrap() else {
            panic!("expected a step")
        };
        assert_eq!(s.regime, Regime::MinDegreeP);
        assert!(s.validate(&g, q.last_level(), 3).is_ok());
        assert!(s.edges.len() * 4 >= supply.len());
        let mut q2 = q.clone();
        s.apply(&mut q2, &g).unwrap();
        assert_eq!(q2.height(), 2);
        assert!(!q2.is_tree());
    }

    #[test]
    fn bad_arguments() {
        let (g, q, supply) = bipartite_host(10, 12, false);
        assert!(expand_level_odd(&g, &q, &supply, &small(1, 0)).is_err());
        let err = expand_level_odd(&g, &q, &supply[..20], &small(2, 0)).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated(_)));
    }
}
