//! Hypergraph representation and structural queries.

mod coloring;
pub mod io;
mod peel;
mod split;

use std::collections::HashMap;

pub use coloring::{default_coloring, PairColoring};
pub use peel::{average_degree, half_edge_peel, min_degree_peel, Peeled};
pub use split::{degree_split, link_counts};

use crate::error::{Error, Result};

pub type Vertex = u32;
pub type EdgeId = usize;
pub type Edge = Vec<Vertex>;

/// Key for an unordered vertex pair.
#[inline]
pub fn pair_key(a: Vertex, b: Vertex) -> u64 {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    ((lo as u64) << 32) | hi as u64
}

#[inline]
pub fn unpack_pair(k: u64) -> (Vertex, Vertex) {
    ((k >> 32) as Vertex, k as Vertex)
}

/// Size of the intersection of two sorted vertex lists.
pub fn intersection_size(a: &[Vertex], b: &[Vertex]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Intersection of two sorted vertex lists.
pub fn intersection(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// A finite hypergraph on vertices `0..n` with canonical (sorted, distinct) edges.
///
/// Immutable after construction. Edges keep the ids they were given at construction.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Edge>,
    uniformity: Option<usize>,
    incidence: Vec<Vec<EdgeId>>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges && self.uniformity == other.uniformity
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    /// Builds a hypergraph, sorting each edge. Uniformity is inferred when all
    /// edges share a size.
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let first = edges.first().map(|e| e.len());
        let uniform = first.filter(|&k| edges.iter().all(|e| e.len() == k));
        Self::build(n, edges, uniform)
    }

    /// Builds an `r`-uniform hypergraph; every edge must have exactly `r` vertices.
    pub fn uniform(n: usize, r: usize, edges: Vec<Edge>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidGraph(format!("uniformity {r} < 2")));
        }
        if let Some(e) = edges.iter().find(|e| e.len() != r) {
            return Err(Error::InvalidGraph(format!("edge {e:?} has size {} != {r}", e.len())));
        }
        Self::build(n, edges, Some(r))
    }

    /// Builds a hypergraph with an explicitly declared uniformity (`None` for mixed sizes).
    pub fn with_uniformity(n: usize, uniformity: Option<usize>, edges: Vec<Edge>) -> Result<Self> {
        match uniformity {
            Some(r) => Self::uniform(n, r, edges),
            None => Self::build(n, edges, None),
        }
    }

    pub fn empty(n: usize) -> Self {
        Hypergraph { n, edges: Vec::new(), uniformity: None, incidence: vec![Vec::new(); n] }
    }

    fn build(n: usize, mut edges: Vec<Edge>, uniformity: Option<usize>) -> Result<Self> {
        if n > u32::MAX as usize {
            return Err(Error::InvalidGraph("too many vertices".into()));
        }
        let mut incidence = vec![Vec::new(); n];
        let mut seen: HashMap<&[Vertex], EdgeId> = HashMap::new();
        for e in edges.iter_mut() {
            e.sort_unstable();
        }
        for (id, e) in edges.iter().enumerate() {
            if e.len() < 2 {
                return Err(Error::InvalidGraph(format!("edge {id} has fewer than 2 vertices")));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("edge {id} repeats a vertex")));
            }
            if let Some(&v) = e.last() {
                if v as usize >= n {
                    return Err(Error::InvalidGraph(format!("edge {id} uses vertex {v} >= n = {n}")));
                }
            }
            if let Some(prev) = seen.insert(e.as_slice(), id) {
                return Err(Error::InvalidGraph(format!("edge {id} duplicates edge {prev}")));
            }
            for &v in e {
                incidence[v as usize].push(id);
            }
        }
        Ok(Hypergraph { n, edges, uniformity, incidence })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &[Vertex] {
        &self.edges[id]
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn uniformity(&self) -> Option<usize> {
        self.uniformity
    }

    /// Largest edge size (0 for an edgeless graph).
    pub fn rank(&self) -> usize {
        self.edges.iter().map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incidence[v as usize].len()
    }

    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.incidence[v as usize]
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(|i| i.len()).max().unwrap_or(0)
    }

    /// Minimum degree over the given vertices.
    pub fn min_degree_over(&self, vs: &[Vertex]) -> usize {
        vs.iter().map(|&v| self.degree(v)).min().unwrap_or(0)
    }

    /// Sum of degrees, i.e. the sum of edge sizes.
    pub fn degree_sum(&self) -> usize {
        self.edges.iter().map(|e| e.len()).sum()
    }

    /// Vertices touched by at least one edge, ascending.
    pub fn support(&self) -> Vec<Vertex> {
        (0..self.n as Vertex).filter(|&v| self.degree(v) > 0).collect()
    }

    /// Id of an edge equal to `e` (sorted), if present.
    pub fn find_edge(&self, e: &[Vertex]) -> Option<EdgeId> {
        let v = *e.first()?;
        if v as usize >= self.n {
            return None;
        }
        self.incidence[v as usize].iter().copied().find(|&id| self.edges[id] == e)
    }

    /// True iff all distinct edge pairs share at most one vertex.
    pub fn is_linear(&self) -> bool {
        self.linearity_violation().is_none()
    }

    /// First pair of edges (by edge id of the later edge) sharing two or more vertices.
    pub fn linearity_violation(&self) -> Option<(EdgeId, EdgeId)> {
        let mut occ: HashMap<u64, EdgeId> = HashMap::new();
        for (id, e) in self.edges.iter().enumerate() {
            for i in 0..e.len() {
                for j in i + 1..e.len() {
                    if let Some(prev) = occ.insert(pair_key(e[i], e[j]), id) {
                        return Some((prev, id));
                    }
                }
            }
        }
        None
    }

    /// All vertex pairs contained in some edge, as a 2-uniform hypergraph on the same vertex set.
    pub fn shadow2(&self) -> Hypergraph {
        let mut keys: Vec<u64> = Vec::new();
        for e in &self.edges {
            for i in 0..e.len() {
                for j in i + 1..e.len() {
                    keys.push(pair_key(e[i], e[j]));
                }
            }
        }
        keys.sort_unstable();
        keys.dedup();
        let edges = keys
            .into_iter()
            .map(|k| {
                let (a, b) = unpack_pair(k);
                vec![a, b]
            })
            .collect();
        Hypergraph::build(self.n, edges, Some(2)).expect("shadow pairs are canonical")
    }

    /// Link of `x`: `{e \ {x} : x ∈ e}`. Edges of size 2 through `x` give singletons,
    /// which are reported separately since hypergraph edges need two vertices.
    pub fn link(&self, x: Vertex) -> Hypergraph {
        let edges: Vec<Edge> = self.incidence[x as usize]
            .iter()
            .map(|&id| self.edges[id].iter().copied().filter(|&v| v != x).collect::<Edge>())
            .filter(|e| e.len() >= 2)
            .collect();
        let u = self.uniformity.map(|r| r - 1).filter(|&k| k >= 2);
        Hypergraph::build(self.n, edges, u).expect("link edges are distinct")
    }

    /// Neighbourhood of `x`: vertices sharing an edge with `x`, ascending.
    pub fn neighbors(&self, x: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.incidence[x as usize]
            .iter()
            .flat_map(|&id| self.edges[id].iter().copied())
            .filter(|&v| v != x)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Sub-hypergraph on the same vertex set keeping the listed edges (renumbered in order).
    pub fn sub_edges(&self, ids: &[EdgeId]) -> Hypergraph {
        let edges = ids.iter().map(|&i| self.edges[i].clone()).collect();
        Hypergraph::build(self.n, edges, self.uniformity).expect("subset of a valid edge set")
    }

    /// Induced subgraph `G[S]`: edges contained in `keep`, original labels retained.
    pub fn induced(&self, keep: &[bool]) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| keep[v as usize]))
            .cloned()
            .collect();
        Hypergraph::build(self.n, edges, self.uniformity).expect("subset of a valid edge set")
    }

    /// Edge ids contained in `keep`.
    pub fn induced_edge_ids(&self, keep: &[bool]) -> Vec<EdgeId> {
        (0..self.edges.len())
            .filter(|&id| self.edges[id].iter().all(|&v| keep[v as usize]))
            .collect()
    }

    /// True iff no edge lies inside `set`.
    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        self.edge_inside(set).is_none()
    }

    /// Some edge contained in `set`, if any.
    pub fn edge_inside(&self, set: &[Vertex]) -> Option<EdgeId> {
        let mut mark = vec![false; self.n];
        for &v in set {
            if (v as usize) < self.n {
                mark[v as usize] = true;
            }
        }
        (0..self.edges.len()).find(|&id| self.edges[id].iter().all(|&v| mark[v as usize]))
    }

    /// True iff the listed edges are pairwise disjoint.
    pub fn is_matching(&self, ids: &[EdgeId]) -> bool {
        let mut used = vec![false; self.n];
        for &id in ids {
            for &v in &self.edges[id] {
                if used[v as usize] {
                    return false;
                }
                used[v as usize] = true;
            }
        }
        true
    }

    /// Relabels vertices by `perm` (old -> new).
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Hypergraph> {
        if perm.len() != self.n {
            return Err(Error::arg("permutation length differs from n"));
        }
        let edges = self.edges.iter().map(|e| e.iter().map(|&v| perm[v as usize]).collect()).collect();
        Hypergraph::build(self.n, edges, self.uniformity)
    }

    /// The r-expansion of a simple 2-graph: each pair receives `r - 2` fresh vertices.
    /// Expansion vertices of edge `i` are `n + (r-2)i .. n + (r-2)(i+1)`.
    pub fn expand(&self, r: usize) -> Result<LinearHypergraph> {
        if r < 3 {
            return Err(Error::arg(format!("expansion needs r >= 3, got {r}")));
        }
        if self.edges.iter().any(|e| e.len() != 2) {
            return Err(Error::arg("expansion skeleton must be 2-uniform"));
        }
        let k = r - 2;
        let n = self.n + k * self.edges.len();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let mut f = e.clone();
                f.extend((0..k).map(|j| (self.n + k * i + j) as Vertex));
                f
            })
            .collect();
        LinearHypergraph::new(Hypergraph::uniform(n, r, edges)?)
    }
}

/// A hypergraph whose edges pairwise share at most one vertex, with a
/// pair-occupancy table mapping each covered pair to its unique edge.
#[derive(Clone, Debug)]
pub struct LinearHypergraph {
    g: Hypergraph,
    pairs: HashMap<u64, EdgeId>,
}

impl PartialEq for LinearHypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.g == other.g
    }
}

impl Eq for LinearHypergraph {}

impl LinearHypergraph {
    pub fn new(g: Hypergraph) -> Result<Self> {
        let mut pairs = HashMap::new();
        for (id, e) in g.edges.iter().enumerate() {
            for i in 0..e.len() {
                for j in i + 1..e.len() {
                    if let Some(prev) = pairs.insert(pair_key(e[i], e[j]), id) {
                        return Err(Error::NotLinear(prev, id));
                    }
                }
            }
        }
        Ok(LinearHypergraph { g, pairs })
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.g
    }

    pub fn into_graph(self) -> Hypergraph {
        self.g
    }

    /// The unique edge containing `{a, b}`.
    pub fn edge_containing(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        if a == b {
            return None;
        }
        self.pairs.get(&pair_key(a, b)).copied()
    }
}

impl std::ops::Deref for LinearHypergraph {
    type Target = Hypergraph;
    fn deref(&self) -> &Hypergraph {
        &self.g
    }
}

/// Shorthand for the 2-graph with the given edges.
pub fn graph2(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Hypergraph> {
    Hypergraph::uniform(n, 2, pairs.iter().map(|&(a, b)| vec![a, b]).collect())
}

/// The 2-uniform cycle `0-1-...-(len-1)-0`.
pub fn cycle2(len: usize) -> Hypergraph {
    let pairs: Vec<(Vertex, Vertex)> =
        (0..len).map(|i| (i as Vertex, ((i + 1) % len) as Vertex)).collect();
    graph2(len, &pairs).expect("cycle of length >= 3")
}

/// The 2-uniform path `0-1-...-len` with `len` edges.
pub fn path2(len: usize) -> Hypergraph {
    let pairs: Vec<(Vertex, Vertex)> = (0..len).map(|i| (i as Vertex, i as Vertex + 1)).collect();
    graph2(len + 1, &pairs).expect("path")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[&[Vertex]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn linearity_examples() {
        assert!(g(5, &[&[0, 1, 2], &[0, 3, 4]]).is_linear());
        assert!(!g(4, &[&[0, 1, 2], &[0, 1, 3]]).is_linear());
        assert!(Hypergraph::empty(3).is_linear());
    }

    #[test]
    fn shadow_examples() {
        assert_eq!(g(3, &[&[0, 1, 2]]).shadow2().num_edges(), 3);
        assert_eq!(g(4, &[&[0, 1, 2], &[0, 1, 3]]).shadow2().num_edges(), 5);
        let four = g(9, &[&[0, 1, 2], &[0, 3, 4], &[1, 3, 5], &[2, 4, 6]]);
        assert!(four.is_linear());
        assert_eq!(four.shadow2().num_edges(), 12);
    }

    #[test]
    fn link_examples() {
        let h = g(7, &[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]]);
        let l = h.link(0);
        assert_eq!(l.edges(), &[vec![1, 2], vec![3, 4], vec![5, 6]]);
        assert!(l.is_matching(&[0, 1, 2]));
        assert!(h.link(1).edges().len() == 1);
        let iso = g(8, &[&[0, 1, 2]]);
        assert!(iso.link(7).is_empty());
    }

    #[test]
    fn expansion_examples() {
        let c = cycle2(4).expand(3).unwrap();
        assert_eq!(c.n(), 8);
        assert_eq!(c.num_edges(), 4);
        let single = graph2(2, &[(0, 1)]).unwrap().expand(5).unwrap();
        assert_eq!(single.num_edges(), 1);
        assert_eq!(single.edge(0).len(), 5);
        let p = path2(2).expand(4).unwrap();
        assert_eq!(p.n(), 7);
        assert!(p.is_linear());
        assert!(cycle2(3).expand(2).is_err());
    }

    #[test]
    fn rejects_invalid_edges() {
        assert!(Hypergraph::new(3, vec![vec![0, 3]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![0, 0]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![0]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(Hypergraph::uniform(4, 3, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn pair_table_finds_host_edge() {
        let l = LinearHypergraph::new(g(5, &[&[0, 1, 2], &[0, 3, 4]])).unwrap();
        assert_eq!(l.edge_containing(4, 3), Some(1));
        assert_eq!(l.edge_containing(1, 3), None);
        assert!(matches!(
            LinearHypergraph::new(g(4, &[&[0, 1, 2], &[0, 1, 3]])),
            Err(Error::NotLinear(0, 1))
        ));
    }
}
