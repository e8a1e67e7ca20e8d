//! Independence number: exact bitmask branch-and-bound, or min-degree greedy.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercore::{Hypergraph, Vertex};
use crate::DEFAULT_BUDGET;

/// Largest vertex count accepted by the exact solver.
pub const EXACT_MAX_N: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndependenceMode {
    Exact,
    Greedy,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    pub size: usize,
    pub witness: Vec<Vertex>,
    pub exact: bool,
}

pub fn independence_number(g: &Hypergraph, mode: IndependenceMode) -> Result<IndependentSet> {
    independence_number_with_budget(g, mode, DEFAULT_BUDGET)
}

pub fn independence_number_with_budget(g: &Hypergraph, mode: IndependenceMode, budget: u64) -> Result<IndependentSet> {
    match mode {
        IndependenceMode::Greedy => {
            let w = greedy_independent(g, &(0..g.n() as Vertex).collect::<Vec<_>>());
            Ok(IndependentSet { size: w.len(), witness: w, exact: false })
        }
        IndependenceMode::Exact => {
            if g.n() > EXACT_MAX_N {
                return Err(Error::BudgetExceeded { budget });
            }
            exact(g, budget)
        }
    }
}

/// Min-degree-first greedy over `candidates`: add a vertex unless it completes an edge.
/// The result is maximal among `candidates`.
pub fn greedy_independent(g: &Hypergraph, candidates: &[Vertex]) -> Vec<Vertex> {
    let mut order = candidates.to_vec();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut inside = vec![false; g.n()];
    let mut out = Vec::new();
    for v in order {
        let completes = g.incident(v).iter().any(|&id| g.edge(id).iter().all(|&u| u == v || inside[u as usize]));
        if !completes {
            inside[v as usize] = true;
            out.push(v);
        }
    }
    out.sort_unstable();
    out
}

struct Exact {
    edges: Vec<u64>,
    by_vertex: Vec<Vec<usize>>,
    order: Vec<u32>,
    best: u64,
    best_size: u32,
    nodes: u64,
    budget: u64,
}

fn exact(g: &Hypergraph, budget: u64) -> Result<IndependentSet> {
    let n = g.n();
    let edges: Vec<u64> = g.edges().iter().map(|e| e.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
    let mut by_vertex = vec![Vec::new(); n];
    for (i, e) in g.edges().iter().enumerate() {
        for &v in e {
            by_vertex[v as usize].push(i);
        }
    }
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let greedy = greedy_independent(g, &(0..n as Vertex).collect::<Vec<_>>());
    let mut s = Exact {
        best: greedy.iter().fold(0u64, |m, &v| m | 1 << v),
        best_size: greedy.len() as u32,
        edges,
        by_vertex,
        order,
        nodes: 0,
        budget,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    s.search(0, all)?;
    let witness: Vec<Vertex> = (0..n as Vertex).filter(|&v| s.best >> v & 1 == 1).collect();
    Ok(IndependentSet { size: witness.len(), witness, exact: true })
}

impl Exact {
    fn bound(&self, chosen: u64, open: u64) -> u32 {
        let mut taken = 0u64;
        let mut penalty = 0u32;
        for &e in &self.edges {
            if e & !(chosen | open) != 0 {
                continue;
            }
            let rest = e & open;
            if rest & taken == 0 {
                taken |= rest;
                penalty += 1;
            }
        }
        chosen.count_ones() + open.count_ones() - penalty
    }

    fn search(&mut self, chosen: u64, open: u64) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        if open == 0 {
            if chosen.count_ones() > self.best_size {
                self.best_size = chosen.count_ones();
                self.best = chosen;
            }
            return Ok(());
        }
        if self.bound(chosen, open) <= self.best_size {
            return Ok(());
        }
        let v = *self.order.iter().find(|&&v| open >> v & 1 == 1).expect("open is nonempty");
        let bit = 1u64 << v;
        let with = chosen | bit;
        let mut rest_open = open & !bit;
        let mut ok = true;
        for &i in &self.by_vertex[v as usize] {
            let e = self.edges[i];
            let rest = e & !with;
            if rest == 0 {
                ok = false;
                break;
            }
            if rest & !rest_open == 0 && rest.count_ones() == 1 {
                rest_open &= !rest;
            }
        }
        if ok {
            self.search(with, rest_open)?;
        }
        self.search(chosen, open & !bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgeless_and_complete() {
        let e = Hypergraph::empty(6);
        assert_eq!(independence_number(&e, IndependenceMode::Exact).unwrap().size, 6);
        let k4 = Hypergraph::uniform(4, 3, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap();
        let a = independence_number(&k4, IndependenceMode::Exact).unwrap();
        assert_eq!(a.size, 2);
        assert!(k4.is_independent(&a.witness));
    }

    #[test]
    fn too_large_for_exact() {
        assert!(matches!(
            independence_number(&Hypergraph::empty(41), IndependenceMode::Exact),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(independence_number(&Hypergraph::empty(41), IndependenceMode::Greedy).unwrap().size, 41);
    }
}
