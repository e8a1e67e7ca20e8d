use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::Serialize;

use super::quasi::LeveledQuasiTree;
use crate::certify::CycleCertificate;
use crate::error::{Error, Result, Violation};
use crate::hypercore::{EdgeId, Hypergraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Regime {
    /// `δ(Γ) ≥ p`.
    MinDegreeP,
    /// Every cut vertex has degree 1 in `Γ`.
    CrosscutDegree1,
}

/// Selected edges `E*`, a cross-cut `S` of them and `Γ = {e ∩ (L_h ∪ S)}` listed in the
/// order of `edges`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionStep {
    pub edges: Vec<EdgeId>,
    pub cut: Vec<Vertex>,
    pub gamma: Vec<(Vertex, Vertex)>,
    pub regime: Regime,
    pub trace: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpansionOutcome {
    Step(ExpansionStep),
    Cycle(CycleCertificate),
}

impl ExpansionStep {
    /// Cross-cut, expansion and regime properties relative to the level `level`.
    pub fn validate(&self, g: &Hypergraph, level: &[Vertex], p: usize) -> std::result::Result<(), String> {
        if self.gamma.len() != self.edges.len() {
            return Err("gamma and edges differ in length".into());
        }
        let level: BTreeSet<Vertex> = level.iter().copied().collect();
        let cut: BTreeSet<Vertex> = self.cut.iter().copied().collect();
        if cut.len() != self.cut.len() {
            return Err("cut has repeated vertices".into());
        }
        let mut ids = BTreeSet::new();
        let mut colours: BTreeSet<Vertex> = BTreeSet::new();
        let mut deg: BTreeMap<Vertex, usize> = BTreeMap::new();
        for (&id, &(a, s)) in self.edges.iter().zip(&self.gamma) {
            if id >= g.num_edges() || !ids.insert(id) {
                return Err(format!("bad or repeated edge id {id}"));
            }
            let e = g.edge(id);
            let on_level: Vec<Vertex> = e.iter().copied().filter(|v| level.contains(v)).collect();
            let on_cut: Vec<Vertex> = e.iter().copied().filter(|v| cut.contains(v)).collect();
            if on_level != [a] {
                return Err(format!("edge {id} does not meet the level exactly in {a}"));
            }
            if on_cut != [s] {
                return Err(format!("cut is not a cross-cut at edge {id}"));
            }
            for &v in e {
                if v != a && v != s && !colours.insert(v) {
                    return Err(format!("expansion vertex {v} is shared, so E* is not the expansion of gamma"));
                }
            }
            *deg.entry(a).or_default() += 1;
            *deg.entry(s).or_default() += 1;
        }
        if let Some(v) = deg.keys().find(|v| colours.contains(v)) {
            return Err(format!("vertex {v} is both a gamma vertex and an expansion vertex"));
        }
        if cut.iter().any(|v| !deg.contains_key(v)) {
            return Err("cut vertex outside gamma".into());
        }
        match self.regime {
            Regime::MinDegreeP => {
                if let Some((v, d)) = deg.iter().find(|(_, &d)| d < p) {
                    return Err(format!("regime MIN_DEGREE_P but vertex {v} has gamma-degree {d} < {p}"));
                }
            }
            Regime::CrosscutDegree1 => {
                if let Some(v) = cut.iter().find(|v| deg[v] != 1) {
                    return Err(format!("regime CROSSCUT_DEGREE_1 but cut vertex {v} has degree {}", deg[v]));
                }
            }
        }
        Ok(())
    }

    /// Grows `q` by one segment: `L'_h = S` and each edge contributes its least vertex
    /// outside `L_h ∪ S` to `L_(h+1)`.
    pub fn apply(&self, q: &mut LeveledQuasiTree, g: &Hypergraph) -> Result<()> {
        let seg: Vec<(EdgeId, Vertex, Vertex)> = self
            .edges
            .iter()
            .zip(&self.gamma)
            .map(|(&id, &(a, s))| {
                let child = *g.edge(id).iter().find(|&&v| v != a && v != s).expect("r >= 3");
                (id, s, child)
            })
            .collect();
        q.extend(g, &seg)
    }
}

pub(crate) fn big(v: usize) -> BigUint {
    BigUint::from(v)
}

/// For each supply edge its unique vertex in `L_h`; every other vertex must avoid the tree.
pub(crate) fn supply_anchors(g: &Hypergraph, q: &LeveledQuasiTree, e: &[EdgeId]) -> Result<Vec<Vertex>> {
    let verts = q.vertices(g);
    let last: BTreeSet<Vertex> = q.last_level().iter().copied().collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(e.len());
    for &id in e {
        if id >= g.num_edges() || !seen.insert(id) {
            return Err(Error::arg(format!("bad or repeated supply edge {id}")));
        }
        let inside: Vec<Vertex> = g.edge(id).iter().copied().filter(|v| verts.contains(v)).collect();
        match inside.as_slice() {
            [a] if last.contains(a) => out.push(*a),
            _ => return Err(Error::arg(format!("supply edge {id} must meet the tree in exactly one vertex of L_h"))),
        }
    }
    Ok(out)
}

pub(crate) fn violated(inequality: String, trace: &[String]) -> Error {
    Error::precondition(Violation::with_trace(inequality, trace.to_vec()))
}

/// Checks `lhs ≥ rhs` and records it; failure becomes a precondition violation.
pub(crate) fn require(name: &str, lhs: &BigUint, rhs: &BigUint, trace: &mut Vec<String>) -> Result<()> {
    if lhs >= rhs {
        trace.push(format!("{name}: {lhs} >= {rhs}"));
        Ok(())
    } else {
        Err(violated(format!("{name}: {lhs} >= {rhs}"), trace))
    }
}

/// Map each vertex of `L_h` to its ancestor in `L_i` (main levels only).
pub(crate) fn ancestor_at(q: &LeveledQuasiTree, g: &Hypergraph, v: Vertex, i: usize) -> Option<Vertex> {
    let (_, mut j) = q.level_of(v)?;
    let mut cur = v;
    while j > i {
        let id = q.parent_edge(cur)?;
        cur = q.segment_edge(g, id)?.main;
        j -= 1;
    }
    Some(cur)
}

/// Step whose edges minus their anchors are pairwise disjoint; the cut vertex of each edge is
/// its least vertex accepted by `prefer`, else its least non-anchor vertex.
pub(crate) fn matching_step(g: &Hypergraph, ids: &[EdgeId], anchors: &[Vertex], prefer: impl Fn(Vertex) -> bool) -> ExpansionStep {
    let mut gamma = Vec::with_capacity(ids.len());
    for (&id, &a) in ids.iter().zip(anchors) {
        let rest = g.edge(id).iter().copied().filter(|&v| v != a);
        let s = rest.clone().find(|&v| prefer(v)).or_else(|| rest.clone().next()).expect("r >= 2");
        gamma.push((a, s));
    }
    let mut cut: Vec<Vertex> = gamma.iter().map(|p| p.1).collect();
    cut.sort_unstable();
    ExpansionStep { edges: ids.to_vec(), cut, gamma, regime: Regime::CrosscutDegree1, trace: Vec::new() }
}

