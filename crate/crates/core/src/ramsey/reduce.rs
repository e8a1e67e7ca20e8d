//! Sunflower contraction, pair-load checks and linear sub-hypergraph extraction.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::certify::{find_linear_cycle_with_budget, find_sunflower_with, greedy_independent, sunflower_threshold, CycleCertificate};
use crate::error::{Error, Result, Violation};
use crate::hypercore::{pair_key, unpack_pair, Edge, Hypergraph, LinearHypergraph, Vertex};
use crate::DEFAULT_BUDGET;

/// Drops every edge that strictly contains another edge.
pub fn remove_supersets(g: &Hypergraph) -> Hypergraph {
    let keep: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|e| !g.edges().iter().any(|f| f.len() < e.len() && f.iter().all(|v| e.binary_search(v).is_ok())))
        .cloned()
        .collect();
    Hypergraph::new(g.n(), keep).expect("subset of a valid edge set")
}

/// Repeatedly replaces one member of an `(a, rℓ)`-sunflower with `a ≥ 2` by its core, then
/// removes superset edges. `r` is the largest edge size of `g`.
pub fn contract_sunflowers(g: &Hypergraph, ell: usize) -> Result<Hypergraph> {
    if ell < 3 {
        return Err(Error::arg("cycle length must be >= 3"));
    }
    let r = g.rank().max(2);
    let p = r * ell;
    let mut cur = g.clone();
    while let Some(sf) = find_sunflower_with(&cur, p, 2, DEFAULT_BUDGET)? {
        let victim = *sf.members.iter().find(|&&id| cur.edge(id).len() > sf.core.len()).expect("distinct members");
        let mut edges: BTreeSet<Edge> = cur.edges().iter().cloned().collect();
        edges.remove(cur.edge(victim));
        edges.insert(sf.core.clone());
        cur = Hypergraph::new(g.n(), edges.into_iter().collect())?;
    }
    Ok(remove_supersets(&cur))
}

/// Result of a `(2,q)`-linearity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairLoad {
    /// No pair lies in `q` or more edges.
    pub holds: bool,
    /// A most loaded pair and its edge count, reported when `holds` is false.
    pub violation: Option<(Vertex, Vertex, usize)>,
    pub max_load: usize,
}

/// `r!(p-1)^r`.
pub fn pair_load_bound(r: usize, p: usize) -> Option<u128> {
    sunflower_threshold(r, p)
}

pub fn two_q_linearity(g: &Hypergraph, q: usize) -> PairLoad {
    let mut load: BTreeMap<u64, usize> = BTreeMap::new();
    for e in g.edges() {
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                *load.entry(pair_key(e[i], e[j])).or_default() += 1;
            }
        }
    }
    let worst = load.iter().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)));
    let max_load = worst.map_or(0, |(_, &c)| c);
    let holds = max_load < q;
    let violation = (!holds).then(|| {
        let (&k, &c) = worst.expect("a loaded pair");
        let (a, b) = unpack_pair(k);
        (a, b, c)
    });
    PairLoad { holds, violation, max_load }
}

/// A linear sub-hypergraph with at least `2|g|/(qr²)` edges: a min-degree greedy independent
/// set of the graph on `E(g)` joining edges that share two or more vertices.
pub fn linear_extract(g: &Hypergraph, q: usize) -> Result<LinearHypergraph> {
    let load = two_q_linearity(g, q);
    if let Some((a, b, c)) = load.violation {
        return Err(Error::precondition(Violation::new(format!(
            "(2,{q})-linear: pair {{{a},{b}}} lies in {c} edges"
        ))));
    }
    let m = g.num_edges();
    let mut by_pair: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (id, e) in g.edges().iter().enumerate() {
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                by_pair.entry(pair_key(e[i], e[j])).or_default().push(id);
            }
        }
    }
    let mut conflicts: BTreeSet<(u32, u32)> = BTreeSet::new();
    for ids in by_pair.values() {
        for (k, &a) in ids.iter().enumerate() {
            for &b in &ids[k + 1..] {
                conflicts.insert((a as u32, b as u32));
            }
        }
    }
    let conflict = Hypergraph::uniform(m, 2, conflicts.into_iter().map(|(a, b)| vec![a, b]).collect())?;
    let kept = greedy_independent(&conflict, &(0..m as Vertex).collect::<Vec<_>>());
    let r = g.rank().max(2);
    if kept.len() * q * r * r < 2 * m {
        return Err(Error::Invariant(format!("kept {} of {m} edges, below 2|G|/(qr^2)", kept.len())));
    }
    let edges = kept.iter().map(|&i| g.edge(i as usize).to_vec()).collect();
    LinearHypergraph::new(Hypergraph::new(g.n(), edges)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparsityRow {
    pub vertex: Vertex,
    pub neighbourhood: usize,
    /// Shadow pairs with both ends in the neighbourhood.
    pub inside: usize,
    /// `r^(r+4) ℓ |N(v)|`, saturating.
    pub bound: u128,
    pub flagged: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsityAudit {
    pub rows: Vec<SparsityRow>,
    /// A linear `ℓ`-cycle located after a flag, when the search finished.
    pub cycle: Option<CycleCertificate>,
}

/// Shadow edges inside each neighbourhood against `r^(r+4) ℓ |N(v)|`. A flag means the host
/// has a linear `ℓ`-cycle; one is then searched for.
pub fn local_sparsity_audit(h: &LinearHypergraph, ell: usize) -> Result<SparsityAudit> {
    let r = h.rank().max(2) as u128;
    let per = r.checked_pow(r as u32 + 4).and_then(|x| x.checked_mul(ell as u128)).unwrap_or(u128::MAX);
    let d = h.shadow2();
    let mut rows = Vec::with_capacity(h.n());
    for v in 0..h.n() as Vertex {
        let nb = h.neighbors(v);
        let inside_set: BTreeSet<Vertex> = nb.iter().copied().collect();
        let inside = nb
            .iter()
            .map(|&a| d.neighbors(a).iter().filter(|&&b| b > a && inside_set.contains(&b)).count())
            .sum::<usize>();
        let bound = per.saturating_mul(nb.len() as u128);
        rows.push(SparsityRow { vertex: v, neighbourhood: nb.len(), inside, bound, flagged: inside as u128 > bound });
    }
    let cycle = if rows.iter().any(|r| r.flagged) {
        match find_linear_cycle_with_budget(h, ell, DEFAULT_BUDGET) {
            Ok(c) => c,
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    Ok(SparsityAudit { rows, cycle })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{independence_number, IndependenceMode};

    #[test]
    fn contraction_replaces_a_member_by_its_core() {
        // nine triples through {0,1}: a (2,9)-sunflower when r = 3, l = 3
        let edges: Vec<Edge> = (0..9).map(|i| vec![0, 1, 2 + i]).collect();
        let g = Hypergraph::uniform(11, 3, edges).unwrap();
        let c = contract_sunflowers(&g, 3).unwrap();
        assert_eq!(c.edges(), &[vec![0, 1]]);
        assert!(independence_number(&c, IndependenceMode::Exact).unwrap().size <= independence_number(&g, IndependenceMode::Exact).unwrap().size);
    }

    #[test]
    fn contraction_without_sunflowers_only_drops_supersets() {
        let g = Hypergraph::new(5, vec![vec![0, 1], vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let c = contract_sunflowers(&g, 3).unwrap();
        assert_eq!(c.edges(), &[vec![0, 1], vec![2, 3, 4]]);
    }

    #[test]
    fn pair_loads() {
        let lin = Hypergraph::uniform(7, 3, vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5]]).unwrap();
        assert!(two_q_linearity(&lin, 2).holds);
        let g = Hypergraph::uniform(6, 3, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]).unwrap();
        let l = two_q_linearity(&g, 3);
        assert!(!l.holds);
        assert_eq!(l.violation, Some((0, 1, 3)));
        assert!(two_q_linearity(&g, 4).holds);
        assert_eq!(pair_load_bound(3, 9), Some(3072));
    }

    #[test]
    fn extraction() {
        let lin = Hypergraph::uniform(7, 3, vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5]]).unwrap();
        assert_eq!(linear_extract(&lin, 2).unwrap().graph(), &lin);
        let g = Hypergraph::uniform(6, 3, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]).unwrap();
        let out = linear_extract(&g, 4).unwrap();
        assert_eq!(out.num_edges(), 1);
        assert!(matches!(linear_extract(&g, 3), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn audit_on_a_matching() {
        let g = LinearHypergraph::new(Hypergraph::uniform(6, 3, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap()).unwrap();
        let a = local_sparsity_audit(&g, 3).unwrap();
        assert!(a.rows.iter().all(|r| r.inside == 1 && !r.flagged));
        assert!(a.cycle.is_none());
    }
}
