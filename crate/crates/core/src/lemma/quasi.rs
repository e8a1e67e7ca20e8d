use std::collections::{BTreeMap, BTreeSet};

use crate::certify::PathCertificate;
use crate::error::{Error, Result};
use crate::hypercore::{EdgeId, Hypergraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LevelKind {
    Main,
    Companion,
}

/// A leveled linear quasi-tree inside a host: segments `H_0..H_{h-1}`, main levels
/// `L_0..L_h` with `L_0 = {w}`, companion levels `L'_0..L'_{h-1}`. Every edge of `H_i` has
/// exactly one vertex in each of `L_i`, `L'_i`, `L_{i+1}`; its remaining vertices occur
/// nowhere else in the structure.
#[derive(Clone, Debug)]
pub struct LeveledQuasiTree {
    root: Vertex,
    main: Vec<Vec<Vertex>>,
    companion: Vec<Vec<Vertex>>,
    segments: Vec<Vec<EdgeId>>,
    level: BTreeMap<Vertex, (LevelKind, usize)>,
    parent_edge: BTreeMap<Vertex, EdgeId>,
    down_edges: BTreeMap<Vertex, Vec<EdgeId>>,
}

/// Roles of the three levelled vertices of a segment edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SegmentEdge {
    pub id: EdgeId,
    pub main: Vertex,
    pub companion: Vertex,
    pub child: Vertex,
}

impl LeveledQuasiTree {
    /// Height-0 tree `{w}`.
    pub fn new(root: Vertex) -> Self {
        LeveledQuasiTree {
            root,
            main: vec![vec![root]],
            companion: Vec::new(),
            segments: Vec::new(),
            level: BTreeMap::from([(root, (LevelKind::Main, 0))]),
            parent_edge: BTreeMap::new(),
            down_edges: BTreeMap::new(),
        }
    }

    /// Appends segment `H_h`; for each edge the companion vertex and child vertex are given.
    pub fn extend(&mut self, g: &Hypergraph, edges: &[(EdgeId, Vertex, Vertex)]) -> Result<()> {
        let h = self.height();
        let mut next = Vec::with_capacity(edges.len());
        let mut comp = BTreeSet::new();
        let mut add = self.clone();
        for &(id, c, child) in edges {
            if id >= g.num_edges() {
                return Err(Error::arg(format!("edge id {id} out of range")));
            }
            let e = g.edge(id);
            let mains: Vec<Vertex> =
                e.iter().copied().filter(|v| self.level.get(v) == Some(&(LevelKind::Main, h))).collect();
            if mains.len() != 1 {
                return Err(Error::arg(format!("edge {id} meets the last main level in {} vertices", mains.len())));
            }
            if !e.contains(&c) || !e.contains(&child) || c == child || c == mains[0] || child == mains[0] {
                return Err(Error::arg(format!("edge {id}: companion and child must be distinct vertices of the edge")));
            }
            if let Some(&(k, i)) = add.level.get(&c) {
                if (k, i) != (LevelKind::Companion, h) {
                    return Err(Error::arg(format!("companion {c} already lies in the structure")));
                }
            }
            if add.level.contains_key(&child) {
                return Err(Error::arg(format!("child {child} already lies in the structure")));
            }
            add.level.insert(c, (LevelKind::Companion, h));
            add.level.insert(child, (LevelKind::Main, h + 1));
            add.parent_edge.insert(child, id);
            add.down_edges.entry(mains[0]).or_default().push(id);
            add.down_edges.entry(c).or_default().push(id);
            comp.insert(c);
            next.push(child);
        }
        next.sort_unstable();
        add.main.push(next);
        add.companion.push(comp.into_iter().collect());
        add.segments.push(edges.iter().map(|e| e.0).collect());
        add.validate(g).map_err(Error::InvalidGraph)?;
        *self = add;
        Ok(())
    }

    /// Breadth-first leveled linear tree of height at most `height` from `root`: for each vertex
    /// of the last level in order, every incident edge whose other vertices are all unused
    /// becomes a segment edge with its two smallest other vertices as companion and child.
    pub fn greedy(g: &Hypergraph, root: Vertex, height: usize) -> Result<Self> {
        if root as usize >= g.n() {
            return Err(Error::arg(format!("root {root} out of range")));
        }
        if g.edges().iter().any(|e| e.len() < 3) {
            return Err(Error::arg("segment edges need at least three vertices"));
        }
        let mut q = LeveledQuasiTree::new(root);
        let mut used = vec![false; g.n()];
        used[root as usize] = true;
        for _ in 0..height {
            let mut seg = Vec::new();
            for &x in q.last_level() {
                for &id in g.incident(x) {
                    let rest: Vec<Vertex> = g.edge(id).iter().copied().filter(|&v| v != x).collect();
                    if rest.iter().any(|&v| used[v as usize]) {
                        continue;
                    }
                    rest.iter().for_each(|&v| used[v as usize] = true);
                    seg.push((id, rest[0], rest[1]));
                }
            }
            if seg.is_empty() {
                break;
            }
            q.extend(g, &seg)?;
        }
        Ok(q)
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn height(&self) -> usize {
        self.segments.len()
    }

    pub fn main_level(&self, i: usize) -> &[Vertex] {
        &self.main[i]
    }

    pub fn companion_level(&self, i: usize) -> &[Vertex] {
        &self.companion[i]
    }

    pub fn last_level(&self) -> &[Vertex] {
        &self.main[self.height()]
    }

    pub fn segment(&self, i: usize) -> &[EdgeId] {
        &self.segments[i]
    }

    pub fn edges(&self) -> Vec<EdgeId> {
        self.segments.iter().flatten().copied().collect()
    }

    pub fn level_of(&self, v: Vertex) -> Option<(LevelKind, usize)> {
        self.level.get(&v).copied()
    }

    /// All vertices of all segment edges, plus the root.
    pub fn vertices(&self, g: &Hypergraph) -> BTreeSet<Vertex> {
        let mut vs: BTreeSet<Vertex> = self.edges().iter().flat_map(|&id| g.edge(id).iter().copied()).collect();
        vs.insert(self.root);
        vs
    }

    pub fn segment_edge(&self, g: &Hypergraph, id: EdgeId) -> Option<SegmentEdge> {
        let e = g.edge(id);
        let child = *e.iter().find(|v| self.parent_edge.get(v) == Some(&id))?;
        let (_, i) = self.level[&child];
        let main = *e.iter().find(|v| self.level.get(v) == Some(&(LevelKind::Main, i - 1)))?;
        let companion = *e.iter().find(|v| self.level.get(v) == Some(&(LevelKind::Companion, i - 1)))?;
        Some(SegmentEdge { id, main, companion, child })
    }

    /// Edges of `H_i` through `x ∈ L_i ∪ L'_i`.
    pub fn down_edges(&self, x: Vertex) -> &[EdgeId] {
        self.down_edges.get(&x).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// The unique edge of `H_{i-1}` containing `x ∈ L_i`, `i ≥ 1`.
    pub fn parent_edge(&self, x: Vertex) -> Option<EdgeId> {
        self.parent_edge.get(&x).copied()
    }

    pub fn children(&self, g: &Hypergraph, x: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> =
            self.down_edges(x).iter().filter_map(|&id| self.segment_edge(g, id).map(|s| s.child)).collect();
        out.sort_unstable();
        out
    }

    /// Every companion vertex lies in exactly one edge, so the structure is a leveled linear tree.
    pub fn is_tree(&self) -> bool {
        self.companion.iter().flatten().all(|c| self.down_edges(*c).len() == 1)
    }

    pub fn validate(&self, g: &Hypergraph) -> std::result::Result<(), String> {
        if self.main.first().map(|l| l.as_slice()) != Some(&[self.root][..]) {
            return Err("L_0 must be the root alone".into());
        }
        let mut seen_level = BTreeSet::new();
        for (i, l) in self.main.iter().enumerate() {
            for &v in l {
                if !seen_level.insert(v) {
                    return Err(format!("vertex {v} lies in two levels (main level {i})"));
                }
            }
        }
        for (i, l) in self.companion.iter().enumerate() {
            for &v in l {
                if !seen_level.insert(v) {
                    return Err(format!("vertex {v} lies in two levels (companion level {i})"));
                }
            }
        }
        let mut owner: BTreeMap<Vertex, EdgeId> = BTreeMap::new();
        let mut pairs = BTreeSet::new();
        for (i, seg) in self.segments.iter().enumerate() {
            for &id in seg {
                if id >= g.num_edges() {
                    return Err(format!("edge id {id} out of range"));
                }
                let e = g.edge(id);
                let count = |k: LevelKind, j: usize| e.iter().filter(|v| self.level.get(v) == Some(&(k, j))).count();
                if count(LevelKind::Main, i) != 1 || count(LevelKind::Companion, i) != 1 || count(LevelKind::Main, i + 1) != 1
                {
                    return Err(format!("edge {id} of segment {i} does not meet L_i, L'_i, L_(i+1) once each"));
                }
                for &v in e {
                    match self.level.get(&v) {
                        Some(&(LevelKind::Main, j)) if j == i => {}
                        Some(&(LevelKind::Companion, j)) if j == i => {}
                        Some(&(LevelKind::Main, j)) if j == i + 1 => {
                            if self.parent_edge.get(&v) != Some(&id) {
                                return Err(format!("child {v} of edge {id} has another parent edge"));
                            }
                        }
                        Some(_) => return Err(format!("edge {id} of segment {i} touches a foreign level")),
                        None => {
                            if let Some(prev) = owner.insert(v, id) {
                                return Err(format!("expansion vertex {v} lies in edges {prev} and {id}"));
                            }
                        }
                    }
                }
                for a in 0..e.len() {
                    for b in a + 1..e.len() {
                        if !pairs.insert((e[a], e[b])) {
                            return Err(format!("edge {id} breaks linearity"));
                        }
                    }
                }
            }
            for &c in &self.companion[i] {
                if self.down_edges(c).is_empty() {
                    return Err(format!("companion {c} is isolated"));
                }
            }
        }
        for (i, l) in self.main.iter().enumerate().skip(1) {
            for &v in l {
                match self.parent_edge.get(&v) {
                    Some(&id) if self.segments[i - 1].contains(&id) => {}
                    _ => return Err(format!("main vertex {v} at level {i} has no parent edge in H_{}", i - 1)),
                }
            }
        }
        Ok(())
    }

    /// The down graph `H_x` of `x ∈ L_i ∪ L'_i` as a quasi-tree rooted at `x`. The other
    /// bipartite side of the first segment becomes the companion level of the new tree.
    pub fn down_graph(&self, g: &Hypergraph, x: Vertex) -> Result<LeveledQuasiTree> {
        if !self.level.contains_key(&x) {
            return Err(Error::arg(format!("vertex {x} is not a levelled vertex")));
        }
        let mut t = LeveledQuasiTree::new(x);
        let mut frontier = vec![x];
        loop {
            let mut seg = Vec::new();
            for &v in &frontier {
                for &id in self.down_edges(v) {
                    let s = self.segment_edge(g, id).expect("segment edge");
                    let other = if s.main == v { s.companion } else { s.main };
                    seg.push((id, other, s.child));
                }
            }
            if seg.is_empty() {
                break;
            }
            seg.sort_unstable();
            frontier = seg.iter().map(|s| s.2).collect();
            frontier.sort_unstable();
            t.extend(g, &seg)?;
        }
        Ok(t)
    }

    /// `V(H_x) ∩ L_h` as seen from `x`.
    pub fn descendants_in_last(&self, g: &Hypergraph, x: Vertex) -> Result<Vec<Vertex>> {
        if self.level_of(x) == Some((LevelKind::Main, self.height())) {
            return Ok(vec![x]);
        }
        let d = self.down_graph(g, x)?;
        let (_, i) = self.level_of(x).expect("levelled");
        let depth = self.height() - i;
        Ok(if d.height() == depth { d.last_level().to_vec() } else { Vec::new() })
    }

    /// The unique monotone path from `from ∈ L_a ∪ L'_a` down to `to ∈ L_j`, `j > a`.
    pub fn monotone_path(&self, g: &Hypergraph, from: Vertex, to: Vertex) -> Option<PathCertificate> {
        let (fk, a) = self.level_of(from)?;
        let (tk, mut j) = self.level_of(to)?;
        if tk != LevelKind::Main || j <= a {
            return None;
        }
        let mut cur = to;
        let mut edges = Vec::new();
        loop {
            let id = self.parent_edge(cur)?;
            edges.push(id);
            let s = self.segment_edge(g, id)?;
            j -= 1;
            if j == a {
                let hit = match fk {
                    LevelKind::Main => s.main == from,
                    LevelKind::Companion => s.companion == from,
                };
                if !hit {
                    return None;
                }
                break;
            }
            cur = s.main;
        }
        edges.reverse();
        Some(PathCertificate { edges, start: from, end: to })
    }
}

/// An `x,y`-path of even length at most `2i` in `H_0 ∪ .. ∪ H_{i-1}` meeting `L_i` only in
/// `x` and `y`, for distinct `x, y ∈ L_i`, `i ≥ 1`.
pub fn joining_path(q: &LeveledQuasiTree, g: &Hypergraph, x: Vertex, y: Vertex) -> Result<PathCertificate> {
    let (kx, i) = q.level_of(x).ok_or_else(|| Error::arg(format!("{x} is not levelled")))?;
    if kx != LevelKind::Main || q.level_of(y) != Some((LevelKind::Main, i)) || x == y || i == 0 {
        return Err(Error::arg("x and y must be distinct vertices of one main level L_i with i >= 1"));
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    let (mut a, mut b) = (x, y);
    loop {
        let e = q.parent_edge(a).expect("parent edge");
        let f = q.parent_edge(b).expect("parent edge");
        left.push(e);
        right.push(f);
        if g.edge(e).iter().any(|v| g.edge(f).contains(v)) {
            break;
        }
        a = q.segment_edge(g, e).expect("segment edge").main;
        b = q.segment_edge(g, f).expect("segment edge").main;
    }
    right.reverse();
    left.extend(right);
    Ok(PathCertificate { edges: left, start: x, end: y })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Root 0; segment 0 has edges {0,c,x} for two children; each child gets two edges below.
    pub(crate) fn small_tree() -> (Hypergraph, LeveledQuasiTree) {
        let edges = vec![
            vec![0, 1, 2],
            vec![0, 3, 4],
            vec![2, 5, 6],
            vec![2, 7, 8],
            vec![4, 9, 10],
            vec![4, 11, 12],
        ];
        let g = Hypergraph::uniform(13, 3, edges).unwrap();
        let mut q = LeveledQuasiTree::new(0);
        q.extend(&g, &[(0, 1, 2), (1, 3, 4)]).unwrap();
        q.extend(&g, &[(2, 5, 6), (3, 7, 8), (4, 9, 10), (5, 11, 12)]).unwrap();
        (g, q)
    }

    #[test]
    fn tree_structure() {
        let (g, q) = small_tree();
        assert_eq!(q.height(), 2);
        assert!(q.is_tree());
        assert_eq!(q.last_level(), &[6, 8, 10, 12]);
        assert_eq!(q.children(&g, 2), vec![6, 8]);
        let p = q.monotone_path(&g, 0, 10).unwrap();
        assert_eq!(p.edges, vec![1, 4]);
        p.validate(&g).unwrap();
        assert!(q.monotone_path(&g, 2, 10).is_none());
        let d = q.down_graph(&g, 4).unwrap();
        assert_eq!(d.height(), 1);
        assert_eq!(d.last_level(), &[10, 12]);
        d.validate(&g).unwrap();
    }

    #[test]
    fn extend_rejects_bad_segments() {
        let (g, q) = small_tree();
        let mut q2 = q.clone();
        assert!(q2.extend(&g, &[(0, 1, 2)]).is_err());
        assert_eq!(q2.height(), 2);
    }

    #[test]
    fn joining_paths() {
        let (g, q) = small_tree();
        let p = joining_path(&q, &g, 6, 8).unwrap();
        assert_eq!(p.len(), 2);
        p.validate(&g).unwrap();
        let p = joining_path(&q, &g, 6, 12).unwrap();
        assert_eq!(p.edges, vec![2, 0, 1, 5]);
        p.validate(&g).unwrap();
        let p = joining_path(&q, &g, 2, 4).unwrap();
        assert_eq!(p.len(), 2);
        assert!(joining_path(&q, &g, 6, 6).is_err());
    }

    #[test]
    fn greedy_growth_recovers_the_tree() {
        let (g, q) = small_tree();
        let grown = LeveledQuasiTree::greedy(&g, 0, 5).unwrap();
        assert_eq!(grown.height(), 2);
        assert_eq!(grown.last_level(), q.last_level());
        assert_eq!(LeveledQuasiTree::greedy(&g, 6, 3).unwrap().last_level(), &[5]);
    }
}
