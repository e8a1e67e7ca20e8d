//! Increasing linear paths under a vertex order, and independent sets in BFS levels.

use serde::Serialize;

use crate::certify::PathCertificate;
use crate::error::{Error, Result, Violation};
use crate::hypercore::{intersection, EdgeId, Hypergraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathPartition {
    /// `S_0..S_(ℓ-1)`, vertices listed in the given order; `S_i` holds the vertices whose longest
    /// increasing path ends there with length `i`. Classes may be empty.
    Classes(Vec<Vec<Vertex>>),
    Path(PathCertificate),
}

fn ranks(n: usize, order: &[Vertex]) -> Result<Vec<Option<usize>>> {
    let mut rank = vec![None; n];
    for (i, &v) in order.iter().enumerate() {
        let slot = rank.get_mut(v as usize).ok_or_else(|| Error::arg(format!("vertex {v} out of range")))?;
        if slot.replace(i).is_some() {
            return Err(Error::arg(format!("vertex {v} listed twice in the order")));
        }
    }
    Ok(rank)
}

/// Partition of the ordered vertices into `ℓ` independent classes of `h[order]`, or an
/// increasing linear path of length `ℓ`. Edges not inside `order` are ignored.
pub fn increasing_path_partition(h: &Hypergraph, order: &[Vertex], ell: usize) -> Result<PathPartition> {
    if ell == 0 {
        return Err(Error::arg("path length must be >= 1"));
    }
    let rank = ranks(h.n(), order)?;
    let mut edges: Vec<(usize, usize, EdgeId)> = Vec::new();
    for (id, e) in h.edges().iter().enumerate() {
        let rs: Option<Vec<usize>> = e.iter().map(|&v| rank[v as usize]).collect();
        if let Some(rs) = rs {
            let lo = *rs.iter().min().expect("nonempty edge");
            let hi = *rs.iter().max().expect("nonempty edge");
            edges.push((hi, lo, id));
        }
    }
    edges.sort_unstable();
    let mut len = vec![0usize; order.len()];
    let mut back: Vec<Option<EdgeId>> = vec![None; order.len()];
    for &(hi, lo, id) in &edges {
        if len[lo] + 1 > len[hi] {
            len[hi] = len[lo] + 1;
            back[hi] = Some(id);
        }
    }
    if let Some(top) = (0..order.len()).find(|&i| len[i] >= ell) {
        let mut path = Vec::new();
        let mut cur = top;
        while let Some(id) = back[cur] {
            path.push(id);
            cur = h.edge(id).iter().map(|&v| rank[v as usize].expect("ranked")).min().expect("nonempty edge");
        }
        path.reverse();
        let path = path.split_off(path.len() - ell);
        let start = *h.edge(path[0]).iter().min_by_key(|&&v| rank[v as usize]).expect("nonempty edge");
        let pc = PathCertificate { edges: path, start, end: order[top] };
        validate_increasing(h, order, &pc).map_err(Error::Invariant)?;
        return Ok(PathPartition::Path(pc));
    }
    let mut classes = vec![Vec::new(); ell];
    for (i, &v) in order.iter().enumerate() {
        classes[len[i]].push(v);
    }
    Ok(PathPartition::Classes(classes))
}

/// Linear path whose junctions increase and whose other vertices sit between the
/// neighbouring junctions (before the first, after the last).
pub fn validate_increasing(h: &Hypergraph, order: &[Vertex], p: &PathCertificate) -> std::result::Result<(), String> {
    p.validate(h)?;
    let rank = ranks(h.n(), order).map_err(|e| e.to_string())?;
    let rk = |v: Vertex| rank[v as usize].ok_or_else(|| format!("vertex {v} is not ordered"));
    let l = p.edges.len();
    let junction: Vec<Vertex> = p.edges.windows(2).map(|w| intersection(h.edge(w[0]), h.edge(w[1]))[0]).collect();
    for (i, &id) in p.edges.iter().enumerate() {
        let lower = if i == 0 { None } else { Some(rk(junction[i - 1])?) };
        let upper = if i + 1 == l { None } else { Some(rk(junction[i])?) };
        for &v in h.edge(id) {
            if Some(v) == (i > 0).then(|| junction[i - 1]) || Some(v) == (i + 1 < l).then(|| junction[i]) {
                continue;
            }
            let x = rk(v)?;
            if lower.is_some_and(|a| x <= a) || upper.is_some_and(|b| x >= b) {
                return Err(format!("vertex {v} of edge {id} is out of order"));
            }
        }
    }
    Ok(())
}

/// True when every class is independent in `h` and the classes partition `order`.
pub fn validate_classes(h: &Hypergraph, order: &[Vertex], classes: &[Vec<Vertex>]) -> std::result::Result<(), String> {
    let mut all: Vec<Vertex> = classes.iter().flatten().copied().collect();
    all.sort_unstable();
    let mut want = order.to_vec();
    want.sort_unstable();
    if all != want {
        return Err("classes do not partition the ordered vertices".into());
    }
    for (i, c) in classes.iter().enumerate() {
        if !h.is_independent(c) {
            return Err(format!("class {i} contains an edge"));
        }
    }
    Ok(())
}

/// BFS levels from `v` over the 2-edges of `h`, up to `max_level`. Level `i` lists the
/// children of the first vertex of level `i-1`, then of the second, and so on.
pub(crate) fn bfs_levels(h: &Hypergraph, v: Vertex, max_level: usize) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; h.n()];
    seen[v as usize] = true;
    let mut levels = vec![vec![v]];
    while levels.len() <= max_level {
        let mut next = Vec::new();
        for &u in levels.last().expect("a level") {
            let mut kids: Vec<Vertex> = h
                .incident(u)
                .iter()
                .map(|&id| h.edge(id))
                .filter(|e| e.len() == 2)
                .map(|e| if e[0] == u { e[1] } else { e[0] })
                .filter(|&w| !seen[w as usize])
                .collect();
            kids.sort_unstable();
            kids.dedup();
            for &w in &kids {
                seen[w as usize] = true;
            }
            next.extend(kids);
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    levels
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelSet {
    pub level: usize,
    /// The level in BFS order.
    pub vertices: Vec<Vertex>,
    pub independent: Vec<Vertex>,
}

/// For each nonempty BFS level `S_i`, `i ≤ m`, an independent set of `h[S_i]` with at least
/// `|S_i|/(2m-1)` vertices: the largest class of the increasing-path partition.
pub fn bfs_level_independent(h: &Hypergraph, v: Vertex, m: usize) -> Result<Vec<LevelSet>> {
    if m == 0 {
        return Err(Error::arg("m must be >= 1"));
    }
    if v as usize >= h.n() {
        return Err(Error::arg(format!("vertex {v} out of range")));
    }
    bfs_levels(h, v, m).into_iter().enumerate().map(|(i, s)| level_set(h, i, s, m)).collect()
}

pub(crate) fn level_set(h: &Hypergraph, level: usize, s: Vec<Vertex>, m: usize) -> Result<LevelSet> {
    let k = 2 * m - 1;
    match increasing_path_partition(h, &s, k)? {
        PathPartition::Classes(classes) => {
            let (_, best) =
                classes.iter().enumerate().max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.0.cmp(&a.0))).expect("k >= 1");
            let mut independent = best.clone();
            independent.sort_unstable();
            if independent.len() * k < s.len() {
                return Err(Error::Invariant(format!("largest class {} below |S_{level}|/{k}", independent.len())));
            }
            Ok(LevelSet { level, vertices: s, independent })
        }
        PathPartition::Path(p) => Err(Error::precondition(Violation::with_trace(
            format!("no increasing linear path of length {k} inside BFS level {level}"),
            vec![format!("found path {:?}; the host has a linear {}-cycle", p.edges, 2 * m + 1)],
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgeless_and_single_edge() {
        let g = Hypergraph::empty(4);
        let PathPartition::Classes(c) = increasing_path_partition(&g, &[0, 1, 2, 3], 3).unwrap() else { panic!() };
        assert_eq!(c, vec![vec![0, 1, 2, 3], vec![], vec![]]);
        let g = Hypergraph::uniform(4, 3, vec![vec![0, 2, 3]]).unwrap();
        let PathPartition::Classes(c) = increasing_path_partition(&g, &[3, 2, 1, 0], 2).unwrap() else { panic!() };
        assert_eq!(c, vec![vec![3, 2, 1], vec![0]]);
        let PathPartition::Path(p) = increasing_path_partition(&g, &[3, 2, 1, 0], 1).unwrap() else { panic!() };
        assert_eq!(p.edges, vec![0]);
    }

    #[test]
    fn increasing_path_found_and_checked() {
        let g = Hypergraph::uniform(7, 3, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 6]]).unwrap();
        let order: Vec<Vertex> = (0..7).collect();
        let PathPartition::Path(p) = increasing_path_partition(&g, &order, 3).unwrap() else { panic!() };
        assert_eq!(p.edges, vec![0, 1, 2]);
        assert!(validate_increasing(&g, &order, &p).is_ok());
        let rev: Vec<Vertex> = (0..7).rev().collect();
        assert!(validate_increasing(&g, &[0, 1, 3, 2, 4, 5, 6], &p).is_err());
        let PathPartition::Path(q) = increasing_path_partition(&g, &rev, 3).unwrap() else { panic!() };
        assert!(validate_increasing(&g, &rev, &q).is_ok());
        let scrambled = [0, 4, 1, 5, 2, 6, 3];
        match increasing_path_partition(&g, &scrambled, 3).unwrap() {
            PathPartition::Classes(c) => assert!(validate_classes(&g, &scrambled, &c).is_ok()),
            PathPartition::Path(p) => assert!(validate_increasing(&g, &scrambled, &p).is_ok()),
        }
    }

    #[test]
    fn bfs_levels_follow_parent_order() {
        let g = Hypergraph::new(7, vec![vec![0, 2], vec![0, 1], vec![1, 4], vec![2, 3], vec![1, 5], vec![3, 5, 6]]).unwrap();
        let lv = bfs_level_independent(&g, 0, 2).unwrap();
        assert_eq!(lv[1].vertices, vec![1, 2]);
        assert_eq!(lv[2].vertices, vec![4, 5, 3]);
        assert_eq!(lv[2].independent.len(), 3);
        let star = Hypergraph::new(4, vec![vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap();
        let lv = bfs_level_independent(&star, 0, 2).unwrap();
        assert_eq!(lv.len(), 2);
        assert_eq!(lv[1].independent, vec![1, 2, 3]);
        let no2 = Hypergraph::uniform(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(bfs_level_independent(&no2, 0, 2).unwrap().len(), 1);
    }
}
