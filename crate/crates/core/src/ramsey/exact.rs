//! Exhaustive small Ramsey numbers `R(C^r_ℓ, K^r_t)`.
//!
//! `R > n` exactly when some `C^r_ℓ`-free `r`-graph on `n` vertices (the red edges) meets
//! every `t`-set. The search takes the least uncovered `t`-set and branches on which of its
//! `r`-subsets turns red; earlier siblings stay forbidden in later branches.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::certify::cycle::{CycleWalker, DynGraph};
use crate::certify::{find_linear_cycle, independence_number, IndependenceMode};
use crate::error::{Error, Result};
use crate::extremal::ex_linear_with_budget;
use crate::hypercore::{Edge, Hypergraph};

pub const RAMSEY_CSV_HEADER: &str = "r,ell,t,lo,hi,exact";

/// Largest vertex count the search will try.
pub const MAX_N: usize = 24;

/// Extremal witnesses are tried as red graphs up to this many vertices.
const SEED_MAX_N: usize = 9;
const SEED_BUDGET: u64 = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyReport {
    pub r: usize,
    pub ell: usize,
    pub t: usize,
    /// `R ≥ lo`, certified by `witness` on `lo - 1` vertices.
    pub lo: usize,
    /// `R ≤ hi` when known.
    pub hi: Option<usize>,
    pub exact: bool,
    /// Red edges of a colouring of `K^r_(lo-1)` with no red `C^r_ℓ` and no blue `K^r_t`.
    pub witness: Hypergraph,
    pub nodes: u64,
}

impl RamseyReport {
    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.lo)
    }

    pub fn csv_row(&self) -> String {
        let hi = self.hi.map_or(String::new(), |h| h.to_string());
        format!("{},{},{},{},{},{}", self.r, self.ell, self.t, self.lo, hi, self.exact)
    }
}

pub fn ramsey_csv(rows: &[RamseyReport]) -> String {
    let mut s = String::from(RAMSEY_CSV_HEADER);
    s.push('\n');
    for row in rows {
        let _ = writeln!(s, "{}", row.csv_row());
    }
    s
}

/// Checks that `red` has no linear `ℓ`-cycle and independence number below `t`.
pub fn validate_witness(red: &Hypergraph, ell: usize, t: usize) -> std::result::Result<(), String> {
    if find_linear_cycle(red, ell).map_err(|e| e.to_string())?.is_some() {
        return Err(format!("red graph has a linear {ell}-cycle"));
    }
    let a = independence_number(red, IndependenceMode::Exact).map_err(|e| e.to_string())?;
    if a.size >= t {
        return Err(format!("red graph has an independent {}-set, a blue K_t", a.size));
    }
    Ok(())
}

fn combinations(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    fn go(start: usize, n: usize, k: usize, acc: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for v in start..n {
            if n - v < k {
                break;
            }
            go(v + 1, n, k - 1, acc | 1 << v, out);
        }
    }
    go(0, n, k, 0, &mut out);
    out
}

fn bits(mask: u32) -> Edge {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

struct Tables {
    n: usize,
    tsets: Vec<u32>,
    rsets: Vec<u32>,
    /// For each `r`-set, the `t`-sets containing it.
    up: Vec<Vec<usize>>,
    /// For each `t`-set, its `r`-subsets.
    down: Vec<Vec<usize>>,
}

impl Tables {
    fn new(n: usize, r: usize, t: usize) -> Self {
        let tsets = combinations(n, t);
        let rsets = combinations(n, r);
        let index: std::collections::HashMap<u32, usize> = rsets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut up = vec![Vec::new(); rsets.len()];
        let mut down = Vec::with_capacity(tsets.len());
        for (ti, &tm) in tsets.iter().enumerate() {
            let subs: Vec<usize> = combinations(t, r)
                .into_iter()
                .map(|sel| {
                    let tb = bits(tm);
                    let m = bits(sel).iter().fold(0u32, |acc, &i| acc | 1 << tb[i as usize]);
                    index[&m]
                })
                .collect();
            for &ri in &subs {
                up[ri].push(ti);
            }
            down.push(subs);
        }
        Tables { n, tsets, rsets, up, down }
    }
}

struct Search<'a> {
    tab: &'a Tables,
    ell: usize,
    g: DynGraph,
    red: Vec<usize>,
    cover: Vec<u32>,
    forbidden: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(tab: &'a Tables, ell: usize, budget: u64) -> Self {
        Search {
            tab,
            ell,
            g: DynGraph::new(tab.n),
            red: Vec::new(),
            cover: vec![0; tab.tsets.len()],
            forbidden: vec![false; tab.rsets.len()],
            nodes: 0,
            budget,
        }
    }

    /// Adds `ri` unless it closes a linear `ℓ`-cycle.
    fn push(&mut self, ri: usize) -> bool {
        let id = self.g.push(bits(self.tab.rsets[ri]));
        let mut w = CycleWalker::new(&self.g, u64::MAX);
        let closes = w.through(id, self.ell, &mut |_| true).expect("unbounded walk");
        if closes {
            self.g.pop();
            return false;
        }
        self.red.push(ri);
        for &ti in &self.tab.up[ri] {
            self.cover[ti] += 1;
        }
        true
    }

    fn pop(&mut self) {
        let ri = self.red.pop().expect("edge to pop");
        self.g.pop();
        for &ti in &self.tab.up[ri] {
            self.cover[ti] -= 1;
        }
    }

    fn first_open(&self, from: usize) -> Option<usize> {
        (from..self.tab.tsets.len()).find(|&i| self.cover[i] == 0)
    }

    fn dfs(&mut self, from: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let Some(ti) = self.first_open(from) else { return Ok(true) };
        let choices: Vec<usize> = self.tab.down[ti].iter().copied().filter(|&ri| !self.forbidden[ri]).collect();
        let mut marked = Vec::new();
        let mut found = false;
        for ri in choices {
            if self.push(ri) {
                if self.dfs(ti + 1)? {
                    found = true;
                    break;
                }
                self.pop();
            }
            self.forbidden[ri] = true;
            marked.push(ri);
        }
        for ri in marked {
            self.forbidden[ri] = false;
        }
        Ok(found)
    }

    fn witness(&self) -> Hypergraph {
        let mut edges: Vec<Edge> = self.red.iter().map(|&ri| bits(self.tab.rsets[ri])).collect();
        edges.sort();
        Hypergraph::with_uniformity(self.tab.n, None, edges).expect("distinct r-sets")
    }
}

/// A red graph on `n` vertices certifying `R > n`, or `None` after exhausting the search.
/// The first red edge is fixed to `{0..r-1}`; second-level branches run in parallel and
/// are reduced in branch order.
fn witness_on(n: usize, r: usize, ell: usize, t: usize, budget: u64) -> Result<(Option<Hypergraph>, u64)> {
    if n < t {
        return Ok((Some(Hypergraph::empty(n)), 0));
    }
    if t < r {
        return Ok((None, 0));
    }
    if n <= SEED_MAX_N && n >= r {
        let rep = ex_linear_with_budget(n, r, ell, SEED_BUDGET)?;
        let red = rep.witness.into_graph();
        if independence_number(&red, IndependenceMode::Exact)?.size < t {
            return Ok((Some(red), rep.nodes));
        }
    }
    let tab = Tables::new(n, r, t);
    let mut root = Search::new(&tab, ell, budget);
    let first = tab.down[0][0];
    if !root.push(first) {
        return Ok((None, 1));
    }
    let Some(ti) = root.first_open(1) else { return Ok((Some(root.witness()), 1)) };
    let choices: Vec<usize> = tab.down[ti].clone();
    let results: Vec<Result<(Option<Hypergraph>, u64)>> = (0..choices.len())
        .into_par_iter()
        .map(|j| {
            let mut s = Search::new(&tab, ell, budget);
            s.push(first);
            for &ri in &choices[..j] {
                s.forbidden[ri] = true;
            }
            if !s.push(choices[j]) {
                return Ok((None, 1));
            }
            let found = s.dfs(ti + 1)?;
            Ok((found.then(|| s.witness()), s.nodes))
        })
        .collect();
    let mut nodes = 1;
    for res in results {
        let (w, k) = res?;
        nodes += k;
        if w.is_some() {
            return Ok((w, nodes));
        }
    }
    Ok((None, nodes))
}

/// `R(C^r_ℓ, K^r_t)` by increasing `n`. Each `n` gets `budget` nodes per second-level branch;
/// running out leaves `hi` unknown.
pub fn ramsey_exact_small(r: usize, ell: usize, t: usize, budget: u64) -> Result<RamseyReport> {
    if r < 2 || ell < 3 || t == 0 {
        return Err(Error::arg("need r >= 2, l >= 3 and t >= 1"));
    }
    let mut best = Hypergraph::empty(0);
    let mut nodes = 0u64;
    for n in 0..=MAX_N {
        match witness_on(n, r, ell, t, budget) {
            Ok((Some(w), k)) => {
                nodes += k;
                best = w;
            }
            Ok((None, k)) => {
                nodes += k;
                return Ok(RamseyReport { r, ell, t, lo: n, hi: Some(n), exact: true, witness: best, nodes });
            }
            Err(Error::BudgetExceeded { .. }) => {
                return Ok(RamseyReport { r, ell, t, lo: n, hi: None, exact: false, witness: best, nodes });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(RamseyReport { r, ell, t, lo: MAX_N + 1, hi: None, exact: false, witness: best, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let two = ramsey_exact_small(3, 3, 2, 1_000_000).unwrap();
        assert_eq!(two.value(), Some(2));
        let three = ramsey_exact_small(3, 3, 3, 1_000_000).unwrap();
        assert_eq!(three.value(), Some(6));
        assert_eq!(three.witness.num_edges(), 10);
        assert!(validate_witness(&three.witness, 3, 3).is_ok());
        assert_eq!(ramsey_exact_small(3, 3, 1, 10).unwrap().value(), Some(1));
    }

    #[test]
    fn csv_rows() {
        let rep = ramsey_exact_small(3, 3, 3, 1_000_000).unwrap();
        assert_eq!(ramsey_csv(&[rep]), "r,ell,t,lo,hi,exact\n3,3,3,6,6,true\n");
    }

    #[test]
    fn witness_validation_rejects_bad_colourings() {
        let tri = Hypergraph::uniform(6, 3, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0]]).unwrap();
        assert!(validate_witness(&tri, 3, 6).is_err());
        assert!(validate_witness(&Hypergraph::empty(4), 3, 4).is_err());
        assert!(validate_witness(&Hypergraph::empty(4), 3, 5).is_ok());
    }
}
