//! Pair-branching search: take the least undecided vertex pair and either cover it by a new
//! edge or mark it permanently uncovered.
//!
//! Sibling edges are pruned when a transposition of two vertices (outside the branching pair)
//! preserves the whole search state; such vertices form classes and only the lexicographically
//! least representative per class-count profile is expanded. Cycle creation is tested only
//! through the newly added edge.

use std::time::Instant;

use super::ExtremalReport;
use crate::certify::cycle::{CycleWalker, DynGraph};
use crate::error::{Error, Result};
use crate::hypercore::{Edge, EdgeId, Hypergraph, LinearHypergraph, Vertex};
use crate::DEFAULT_BUDGET;

const FREE: u8 = 0;
const COVERED: u8 = 1;
const BLOCKED: u8 = 2;

/// `⌊(n/r)⌊(n-1)/(r-1)⌋⌋`.
pub fn packing_bound(n: usize, r: usize) -> usize {
    if r < 2 || n < r {
        return 0;
    }
    n * ((n - 1) / (r - 1)) / r
}

pub fn ex_linear(n: usize, r: usize, ell: usize) -> Result<ExtremalReport> {
    ex_linear_with_budget(n, r, ell, DEFAULT_BUDGET)
}

/// `ex_L(n, C^r_ℓ)`. On budget exhaustion returns sound bounds with `exact = false`.
pub fn ex_linear_with_budget(n: usize, r: usize, ell: usize, budget: u64) -> Result<ExtremalReport> {
    if r < 3 || n < r {
        return Err(Error::arg(format!("need n >= r >= 3, got n = {n}, r = {r}")));
    }
    if ell < 3 {
        return Err(Error::arg("cycle length must be >= 3"));
    }
    run(n, r, Some(ell), &SearchOptions { budget, ..Default::default() })
}

/// Pruning switches for [`ex_linear_with`]. Both are on by default; turning them off gives a
/// plain exhaustive search for cross-checking.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: u64,
    /// Expand one representative per class of interchangeable vertices.
    pub symmetry: bool,
    /// Cut branches whose counting upper bound cannot beat the incumbent.
    pub bound: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, symmetry: true, bound: true }
    }
}

pub fn ex_linear_with(n: usize, r: usize, ell: usize, opts: &SearchOptions) -> Result<ExtremalReport> {
    if r < 3 || n < r {
        return Err(Error::arg(format!("need n >= r >= 3, got n = {n}, r = {r}")));
    }
    if ell < 3 {
        return Err(Error::arg("cycle length must be >= 3"));
    }
    run(n, r, Some(ell), opts)
}

pub fn max_linear_packing(n: usize, r: usize) -> Result<ExtremalReport> {
    max_linear_packing_with_budget(n, r, DEFAULT_BUDGET)
}

/// Maximum number of edges of a linear `r`-graph on `n` vertices.
pub fn max_linear_packing_with_budget(n: usize, r: usize, budget: u64) -> Result<ExtremalReport> {
    if r < 2 || n < r {
        return Err(Error::arg(format!("need n >= r >= 2, got n = {n}, r = {r}")));
    }
    run(n, r, None, &SearchOptions { budget, ..Default::default() })
}

fn run(n: usize, r: usize, ell: Option<usize>, opts: &SearchOptions) -> Result<ExtremalReport> {
    let start = Instant::now();
    let mut s = Search::new(n, r, ell, opts.budget);
    s.symmetry = opts.symmetry;
    s.bound = opts.bound;
    let root_ub = s.upper_bound().min(packing_bound(n, r));
    let outcome = s.dfs();
    let exact = match outcome {
        Ok(()) => true,
        Err(Error::BudgetExceeded { .. }) => false,
        Err(e) => return Err(e),
    };
    let witness = LinearHypergraph::new(Hypergraph::uniform(n, r, s.best_edges.clone())?)?;
    let lo = witness.num_edges();
    Ok(ExtremalReport {
        n,
        r,
        ell,
        lo,
        hi: if exact { lo } else { root_ub.max(lo) },
        witness,
        nodes: s.nodes,
        exact,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Edge set that can grow and shrink at the end.
struct Search {
    n: usize,
    r: usize,
    ell: Option<usize>,
    g: DynGraph,
    state: Vec<u8>,
    owner: Vec<EdgeId>,
    free_deg: Vec<usize>,
    free_pairs: usize,
    best_edges: Vec<Edge>,
    nodes: u64,
    budget: u64,
    symmetry: bool,
    bound: bool,
}

impl Search {
    fn new(n: usize, r: usize, ell: Option<usize>, budget: u64) -> Self {
        Search {
            n,
            r,
            ell,
            g: DynGraph::new(n),
            state: vec![FREE; n * n],
            owner: vec![usize::MAX; n * n],
            free_deg: vec![n - 1; n],
            free_pairs: n * (n - 1) / 2,
            best_edges: Vec::new(),
            nodes: 0,
            budget,
            symmetry: true,
            bound: true,
        }
    }

    #[inline]
    fn st(&self, a: Vertex, b: Vertex) -> u8 {
        self.state[a as usize * self.n + b as usize]
    }

    fn set_pair(&mut self, a: Vertex, b: Vertex, to: u8, owner: EdgeId) {
        let (i, j) = (a as usize * self.n + b as usize, b as usize * self.n + a as usize);
        let from = self.state[i];
        if from == FREE && to != FREE {
            self.free_pairs -= 1;
            self.free_deg[a as usize] -= 1;
            self.free_deg[b as usize] -= 1;
        } else if from != FREE && to == FREE {
            self.free_pairs += 1;
            self.free_deg[a as usize] += 1;
            self.free_deg[b as usize] += 1;
        }
        self.state[i] = to;
        self.state[j] = to;
        self.owner[i] = owner;
        self.owner[j] = owner;
    }

    fn upper_bound(&self) -> usize {
        let per_edge = self.r * (self.r - 1) / 2;
        let by_pairs = self.free_pairs / per_edge;
        let by_vertices: usize = self.free_deg.iter().map(|&d| d / (self.r - 1)).sum::<usize>() / self.r;
        self.g.edges.len() + by_pairs.min(by_vertices)
    }

    fn push_edge(&mut self, e: Edge) {
        let id = self.g.edges.len();
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                self.set_pair(e[i], e[j], COVERED, id);
            }
        }
        for &v in &e {
            self.g.incidence[v as usize].push(id);
        }
        self.g.edges.push(e);
    }

    fn pop_edge(&mut self) {
        let e = self.g.edges.pop().expect("edge to pop");
        for &v in &e {
            self.g.incidence[v as usize].pop();
        }
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                self.set_pair(e[i], e[j], FREE, usize::MAX);
            }
        }
    }

    fn first_free_pair(&self) -> Option<(Vertex, Vertex)> {
        for a in 0..self.n as Vertex {
            if self.free_deg[a as usize] == 0 {
                continue;
            }
            for b in a + 1..self.n as Vertex {
                if self.st(a, b) == FREE {
                    return Some((a, b));
                }
            }
        }
        None
    }

    fn dfs(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        if self.g.edges.len() > self.best_edges.len() {
            self.best_edges = self.g.edges.clone();
        }
        if self.bound && self.upper_bound() <= self.best_edges.len() {
            return Ok(());
        }
        let Some((a, b)) = self.first_free_pair() else {
            return Ok(());
        };
        let pool: Vec<Vertex> = (0..self.n as Vertex)
            .filter(|&c| c != a && c != b && self.st(a, c) == FREE && self.st(b, c) == FREE)
            .collect();
        if pool.len() + 2 >= self.r {
            let class = if self.symmetry { self.twin_classes(a, b) } else { (0..self.n).collect() };
            let mut t = Vec::with_capacity(self.r - 2);
            self.cover(a, b, &pool, 0, &mut t, &class)?;
        }
        self.set_pair(a, b, BLOCKED, usize::MAX);
        let res = self.dfs();
        self.set_pair(a, b, FREE, usize::MAX);
        res
    }

    /// Enumerates completions `T` of `{a, b}` from `pool` with all pairs free.
    fn cover(
        &mut self,
        a: Vertex,
        b: Vertex,
        pool: &[Vertex],
        from: usize,
        t: &mut Vec<Vertex>,
        class: &[usize],
    ) -> Result<()> {
        if t.len() == self.r - 2 {
            if !canonical(t, class) {
                return Ok(());
            }
            let mut e: Edge = t.clone();
            e.push(a);
            e.push(b);
            e.sort_unstable();
            self.push_edge(e);
            let id = self.g.edges.len() - 1;
            let blocked = match self.ell {
                Some(l) => self.cycle_through(id, l)?,
                None => false,
            };
            let res = if blocked { Ok(()) } else { self.dfs() };
            self.pop_edge();
            return res;
        }
        for i in from..pool.len() {
            let c = pool[i];
            if t.iter().any(|&x| self.st(x, c) != FREE) {
                continue;
            }
            t.push(c);
            self.cover(a, b, pool, i + 1, t, class)?;
            t.pop();
        }
        Ok(())
    }

    fn cycle_through(&mut self, id: EdgeId, l: usize) -> Result<bool> {
        let mut w = CycleWalker::new(&self.g, u64::MAX);
        w.through(id, l, &mut |_| true)
    }

    /// Class index per vertex: `u ~ v` iff swapping them preserves every pair state and the
    /// edge set. `a` and `b` get singleton classes.
    fn twin_classes(&self, a: Vertex, b: Vertex) -> Vec<usize> {
        let n = self.n;
        let mut class: Vec<usize> = (0..n).collect();
        let sig: Vec<(usize, usize)> = (0..n as Vertex)
            .map(|v| (self.free_deg[v as usize], self.g.incidence[v as usize].len()))
            .collect();
        for v in 0..n as Vertex {
            if v == a || v == b || class[v as usize] != v as usize {
                continue;
            }
            for u in v + 1..n as Vertex {
                if u == a || u == b || class[u as usize] != u as usize || sig[u as usize] != sig[v as usize] {
                    continue;
                }
                if self.swap_preserves(v, u) {
                    class[u as usize] = v as usize;
                }
            }
        }
        class
    }

    fn swap_preserves(&self, u: Vertex, v: Vertex) -> bool {
        let sw = |x: Vertex| if x == u { v } else if x == v { u } else { x };
        for w in 0..self.n as Vertex {
            if w != u && w != v && self.st(u, w) != self.st(v, w) {
                return false;
            }
        }
        for &id in &self.g.incidence[u as usize] {
            let e = &self.g.edges[id];
            if e.binary_search(&v).is_ok() {
                continue;
            }
            let mut img: Edge = e.iter().map(|&x| sw(x)).collect();
            img.sort_unstable();
            let other = img.iter().copied().find(|&x| x != v).expect("edge has >= 2 vertices");
            let owner = self.owner[v as usize * self.n + other as usize];
            if owner == usize::MAX || self.g.edges[owner] != img {
                return false;
            }
        }
        true
    }
}

/// Within each twin class, `t` must use the least class members.
fn canonical(t: &[Vertex], class: &[usize]) -> bool {
    for &x in t {
        let c = class[x as usize];
        let below = (c..x as usize).filter(|&y| class[y] == c).count();
        let used_below = t.iter().filter(|&&y| (y as usize) < x as usize && class[y as usize] == c).count();
        if used_below < below {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(ex_linear(3, 3, 3).unwrap().value(), Some(1));
        assert_eq!(max_linear_packing(4, 3).unwrap().value(), Some(1));
        assert_eq!(max_linear_packing(6, 3).unwrap().value(), Some(4));
        let fano = max_linear_packing(7, 3).unwrap();
        assert_eq!(fano.value(), Some(7));
        assert_eq!(packing_bound(7, 3), 7);
        assert!(fano.witness.is_linear());
    }

    #[test]
    fn pruning_does_not_change_values() {
        for n in 3..=7 {
            let pruned = ex_linear(n, 3, 4).unwrap();
            let plain = ex_linear_with(n, 3, 4, &SearchOptions { symmetry: false, bound: false, ..Default::default() }).unwrap();
            assert_eq!(pruned.value(), plain.value());
            assert!(plain.nodes >= pruned.nodes);
        }
    }

    #[test]
    fn budget_gives_bounds() {
        let r = ex_linear_with_budget(9, 3, 3, 5).unwrap();
        assert!(!r.exact);
        assert!(r.lo <= r.hi);
        assert!(r.hi <= packing_bound(9, 3));
    }
}
