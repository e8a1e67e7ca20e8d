//! Linear cycle search by backtracking over edge sequences.

use super::CycleCertificate;
use crate::error::{Error, Result};
use crate::hypercore::{Edge, EdgeId, Hypergraph, Vertex};
use crate::DEFAULT_BUDGET;

/// Read access to a (possibly changing) edge set.
pub trait EdgeSource {
    fn vertex_count(&self) -> usize;
    fn edge_vertices(&self, id: EdgeId) -> &[Vertex];
    fn incident_edges(&self, v: Vertex) -> &[EdgeId];
}

impl EdgeSource for Hypergraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }
    fn edge_vertices(&self, id: EdgeId) -> &[Vertex] {
        self.edge(id)
    }
    fn incident_edges(&self, v: Vertex) -> &[EdgeId] {
        self.incident(v)
    }
}

/// Growable edge list with incidence, for searches that add and remove edges in stack order.
pub(crate) struct DynGraph {
    pub(crate) edges: Vec<Edge>,
    pub(crate) incidence: Vec<Vec<EdgeId>>,
}

impl DynGraph {
    pub(crate) fn new(n: usize) -> Self {
        DynGraph { edges: Vec::new(), incidence: vec![Vec::new(); n] }
    }

    pub(crate) fn push(&mut self, e: Edge) -> EdgeId {
        let id = self.edges.len();
        for &v in &e {
            self.incidence[v as usize].push(id);
        }
        self.edges.push(e);
        id
    }

    pub(crate) fn pop(&mut self) {
        let e = self.edges.pop().expect("edge to pop");
        for &v in &e {
            self.incidence[v as usize].pop();
        }
    }
}

impl EdgeSource for DynGraph {
    fn vertex_count(&self) -> usize {
        self.incidence.len()
    }
    fn edge_vertices(&self, id: EdgeId) -> &[Vertex] {
        &self.edges[id]
    }
    fn incident_edges(&self, v: Vertex) -> &[EdgeId] {
        &self.incidence[v as usize]
    }
}

/// Dense pair -> edge table for linear hosts, used to close cycles in O(1).
pub struct PairTable {
    n: usize,
    slots: Vec<u32>,
}

impl PairTable {
    /// Largest vertex count for which a table is built.
    pub const MAX_N: usize = 2048;

    /// `None` unless every pair lies in at most one edge and `n <= MAX_N`.
    pub fn new<G: EdgeSource>(g: &G, edges: usize) -> Option<PairTable> {
        let n = g.vertex_count();
        if n > Self::MAX_N {
            return None;
        }
        let mut slots = vec![0u32; n * n];
        for id in 0..edges {
            let e = g.edge_vertices(id);
            for i in 0..e.len() {
                for j in i + 1..e.len() {
                    let k = e[i] as usize * n + e[j] as usize;
                    if slots[k] != 0 {
                        return None;
                    }
                    slots[k] = id as u32 + 1;
                }
            }
        }
        Some(PairTable { n, slots })
    }

    #[inline]
    pub fn get(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        match self.slots[a as usize * self.n + b as usize] {
            0 => None,
            s => Some(s as usize - 1),
        }
    }
}

/// Backtracking walker. The first edge is fixed; each extension meets the vertices
/// used so far only in the current junction, and the closing edge meets them only
/// in the current junction and the start vertex.
pub(crate) struct CycleWalker<'a, G: EdgeSource> {
    g: &'a G,
    active: Option<&'a [bool]>,
    pos: Option<&'a [usize]>,
    pairs: Option<&'a PairTable>,
    min_pos: usize,
    used: Vec<bool>,
    path: Vec<EdgeId>,
    pub nodes: u64,
    budget: u64,
}

impl<'a, G: EdgeSource> CycleWalker<'a, G> {
    pub fn new(g: &'a G, budget: u64) -> Self {
        CycleWalker {
            g,
            active: None,
            pos: None,
            pairs: None,
            min_pos: 0,
            used: vec![false; g.vertex_count()],
            path: Vec::new(),
            nodes: 0,
            budget,
        }
    }

    pub fn with_active(mut self, active: &'a [bool]) -> Self {
        self.active = Some(active);
        self
    }

    fn with_positions(mut self, pos: &'a [usize]) -> Self {
        self.pos = Some(pos);
        self
    }

    pub fn with_pairs(mut self, pairs: Option<&'a PairTable>) -> Self {
        self.pairs = pairs;
        self
    }

    fn close<F: FnMut(&[EdgeId]) -> bool>(&mut self, id: EdgeId, y: Vertex, s: Vertex, found: &mut F) -> bool {
        if !self.allowed(id) {
            return false;
        }
        if let Some(p) = self.pos {
            if p[id] <= p[self.path[1]] {
                return false;
            }
        }
        let ed = self.g.edge_vertices(id);
        if ed.binary_search(&s).is_err() || ed.binary_search(&y).is_err() {
            return false;
        }
        if !ed.iter().all(|&v| v == y || v == s || !self.used[v as usize]) {
            return false;
        }
        self.path.push(id);
        let stop = found(&self.path);
        self.path.pop();
        stop
    }

    #[inline]
    fn allowed(&self, id: EdgeId) -> bool {
        if let Some(a) = self.active {
            if !a[id] {
                return false;
            }
        }
        match self.pos {
            Some(p) => p[id] > self.min_pos,
            None => true,
        }
    }

    /// Calls `found` on every linear `l`-cycle whose first edge is `e0` until it returns true.
    /// With positions set, cycles are reported once (later edges rank above `e0`, and the
    /// second edge ranks below the last).
    pub fn through<F: FnMut(&[EdgeId]) -> bool>(&mut self, e0: EdgeId, l: usize, found: &mut F) -> Result<bool> {
        let g = self.g;
        if let Some(p) = self.pos {
            self.min_pos = p[e0];
        }
        let e = g.edge_vertices(e0);
        for &v in e {
            self.used[v as usize] = true;
        }
        self.path.push(e0);
        let mut hit = false;
        'outer: for &s in e {
            for &x in e {
                if x != s && self.dfs(x, s, l, found)? {
                    hit = true;
                    break 'outer;
                }
            }
        }
        self.path.pop();
        for &v in e {
            self.used[v as usize] = false;
        }
        Ok(hit)
    }

    fn dfs<F: FnMut(&[EdgeId]) -> bool>(&mut self, y: Vertex, s: Vertex, l: usize, found: &mut F) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let g = self.g;
        if self.path.len() + 1 == l {
            if let Some(t) = self.pairs {
                return Ok(match t.get(y, s) {
                    Some(id) => self.close(id, y, s, found),
                    None => false,
                });
            }
            for &id in g.incident_edges(y) {
                if self.close(id, y, s, found) {
                    return Ok(true);
                }
            }
            return Ok(false);
        }
        for &id in g.incident_edges(y) {
            if !self.allowed(id) {
                continue;
            }
            let ed = g.edge_vertices(id);
            if ed.iter().any(|&v| v != y && self.used[v as usize]) {
                continue;
            }
            for &v in ed {
                self.used[v as usize] = true;
            }
            self.path.push(id);
            let mut hit = false;
            for &z in ed {
                if z != y && self.dfs(z, s, l, found)? {
                    hit = true;
                    break;
                }
            }
            self.path.pop();
            for &v in ed {
                if v != y {
                    self.used[v as usize] = false;
                }
            }
            if hit {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Edge order used to pick the first edge: by minimum vertex degree, then id.
fn rank_positions(g: &Hypergraph) -> (Vec<EdgeId>, Vec<usize>) {
    let mut order: Vec<EdgeId> = (0..g.num_edges()).collect();
    order.sort_by_key(|&id| (g.edge(id).iter().map(|&v| g.degree(v)).min().unwrap_or(0), id));
    let mut pos = vec![0; g.num_edges()];
    for (i, &id) in order.iter().enumerate() {
        pos[id] = i;
    }
    (order, pos)
}

/// A linear cycle with exactly `l` edges, if one exists (default node budget).
pub fn find_linear_cycle(g: &Hypergraph, l: usize) -> Result<Option<CycleCertificate>> {
    find_linear_cycle_with_budget(g, l, DEFAULT_BUDGET)
}

pub fn find_linear_cycle_with_budget(g: &Hypergraph, l: usize, budget: u64) -> Result<Option<CycleCertificate>> {
    if l < 3 {
        return Err(Error::arg(format!("cycle length {l} < 3")));
    }
    if g.num_edges() < l {
        return Ok(None);
    }
    let (order, pos) = rank_positions(g);
    let table = PairTable::new(g, g.num_edges());
    let mut w = CycleWalker::new(g, budget).with_positions(&pos).with_pairs(table.as_ref());
    let mut out = None;
    for &e0 in &order {
        let mut take = |p: &[EdgeId]| {
            out = Some(p.to_vec());
            true
        };
        if w.through(e0, l, &mut take)? {
            break;
        }
    }
    Ok(out.map(|edges| CycleCertificate { edges }))
}

/// Number of distinct linear `l`-cycles (as edge sets).
pub fn count_linear_cycles(g: &Hypergraph, l: usize, budget: u64) -> Result<u64> {
    if l < 3 {
        return Err(Error::arg(format!("cycle length {l} < 3")));
    }
    let (order, pos) = rank_positions(g);
    let table = PairTable::new(g, g.num_edges());
    let mut w = CycleWalker::new(g, budget).with_positions(&pos).with_pairs(table.as_ref());
    let mut count = 0u64;
    for &e0 in &order {
        let mut tally = |_: &[EdgeId]| {
            count += 1;
            false
        };
        w.through(e0, l, &mut tally)?;
    }
    Ok(count)
}

/// A linear `l`-cycle through `e0` using only edges marked in `active` (plus `e0`).
pub fn find_cycle_through(
    g: &Hypergraph,
    active: &[bool],
    e0: EdgeId,
    l: usize,
    budget: u64,
) -> Result<Option<CycleCertificate>> {
    find_cycle_through_indexed(g, None, active, e0, l, budget)
}

/// As [`find_cycle_through`], closing cycles through a prebuilt pair table.
pub fn find_cycle_through_indexed(
    g: &Hypergraph,
    pairs: Option<&PairTable>,
    active: &[bool],
    e0: EdgeId,
    l: usize,
    budget: u64,
) -> Result<Option<CycleCertificate>> {
    if l < 3 {
        return Err(Error::arg(format!("cycle length {l} < 3")));
    }
    let mut w = CycleWalker::new(g, budget).with_active(active).with_pairs(pairs);
    let mut out = None;
    w.through(e0, l, &mut |p: &[EdgeId]| {
        out = Some(p.to_vec());
        true
    })?;
    Ok(out.map(|edges| CycleCertificate { edges }))
}

/// Smallest `ℓ ∈ [3, max_len]` admitting a linear cycle, or `None` for "infinite".
pub fn linear_girth(g: &Hypergraph, max_len: usize) -> Result<Option<usize>> {
    if max_len < 3 {
        return Err(Error::arg("linear_girth needs max length >= 3"));
    }
    for l in 3..=max_len {
        if find_linear_cycle(g, l)?.is_some() {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::{cycle2, graph2, path2};

    #[test]
    fn expanded_cycles_are_found() {
        for l in 3..=8 {
            for r in 3..=6 {
                let g = cycle2(l).expand(r).unwrap();
                let c = find_linear_cycle(&g, l).unwrap().expect("cycle");
                assert_eq!(c.len(), l);
                c.validate(&g).unwrap();
                for other in 3..=8 {
                    if other != l {
                        assert!(find_linear_cycle(&g, other).unwrap().is_none());
                    }
                }
            }
        }
    }

    #[test]
    fn matchings_have_no_cycles() {
        let g = Hypergraph::uniform(9, 3, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]).unwrap();
        for l in 3..6 {
            assert!(find_linear_cycle(&g, l).unwrap().is_none());
        }
    }

    #[test]
    fn girth_examples() {
        assert_eq!(linear_girth(&cycle2(4).expand(3).unwrap(), 8).unwrap(), Some(4));
        assert_eq!(linear_girth(&path2(6).expand(3).unwrap(), 8).unwrap(), None);
    }

    #[test]
    fn counts_each_cycle_once() {
        // K4 has three 4-cycles and four triangles.
        let k4 = graph2(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(count_linear_cycles(&k4, 3, DEFAULT_BUDGET).unwrap(), 4);
        assert_eq!(count_linear_cycles(&k4, 4, DEFAULT_BUDGET).unwrap(), 3);
    }

    #[test]
    fn budget_is_a_distinct_error() {
        let g = cycle2(8).expand(3).unwrap();
        assert!(matches!(find_linear_cycle_with_budget(&g, 8, 3), Err(Error::BudgetExceeded { .. })));
    }
}
