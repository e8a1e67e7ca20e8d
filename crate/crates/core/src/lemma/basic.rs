use std::collections::BTreeSet;

use rand::Rng as _;

use crate::certify::PathCertificate;
use crate::error::{Error, Result, Violation};
use crate::hypercore::{EdgeId, Hypergraph, PairColoring, Vertex};
use crate::rng;
use crate::DEFAULT_BUDGET;

/// Largest support handled by the exact vertex-cover search.
pub const EXACT_COVER_MAX_N: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCover {
    pub vertices: Vec<Vertex>,
    /// False when the cover is heuristic.
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingCover {
    pub matching: Vec<EdgeId>,
    /// `τ(h)` when `cover_exact`, otherwise the size `k|M|` of the matching cover.
    pub cover: usize,
    pub cover_exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCut {
    pub edges: Vec<EdgeId>,
    pub cut: Vec<Vertex>,
    pub tries: u32,
}

fn uniformity(h: &Hypergraph) -> Result<usize> {
    match h.uniformity() {
        Some(k) if k >= 2 => Ok(k),
        None if h.is_empty() => Ok(2),
        _ => Err(Error::arg("expected a k-uniform hypergraph with k >= 2")),
    }
}

/// Greedy maximal matching in edge-id order.
pub fn maximal_matching(h: &Hypergraph) -> Vec<EdgeId> {
    let mut used = vec![false; h.n()];
    let mut out = Vec::new();
    for (id, e) in h.edges().iter().enumerate() {
        if e.iter().all(|&v| !used[v as usize]) {
            e.iter().for_each(|&v| used[v as usize] = true);
            out.push(id);
        }
    }
    out
}

/// Minimum vertex cover when the support has at most [`EXACT_COVER_MAX_N`] vertices;
/// otherwise the smaller of a max-degree greedy cover and the vertex set of a maximal
/// matching, flagged inexact.
pub fn vertex_cover(h: &Hypergraph) -> VertexCover {
    let support = h.support();
    if support.len() <= EXACT_COVER_MAX_N {
        if let Ok(vs) = exact_cover(h, &support, DEFAULT_BUDGET) {
            return VertexCover { vertices: vs, exact: true };
        }
    }
    let mut vs: Vec<Vertex> = maximal_matching(h).iter().flat_map(|&id| h.edge(id).iter().copied()).collect();
    vs.sort_unstable();
    let greedy = greedy_cover(h);
    VertexCover { vertices: if greedy.len() < vs.len() { greedy } else { vs }, exact: false }
}

/// Max-degree greedy cover with redundant vertices removed afterwards.
fn greedy_cover(h: &Hypergraph) -> Vec<Vertex> {
    let mut covered = vec![false; h.num_edges()];
    let mut deg: Vec<usize> = (0..h.n() as Vertex).map(|v| h.degree(v)).collect();
    let mut chosen = vec![false; h.n()];
    let mut left = h.num_edges();
    while left > 0 {
        let v = (0..h.n()).max_by(|&a, &b| deg[a].cmp(&deg[b]).then(b.cmp(&a))).expect("nonempty");
        chosen[v] = true;
        for &id in h.incident(v as Vertex) {
            if !covered[id] {
                covered[id] = true;
                left -= 1;
                h.edge(id).iter().for_each(|&u| deg[u as usize] -= 1);
            }
        }
    }
    for v in 0..h.n() {
        if chosen[v] {
            chosen[v] = false;
            let needed = h.incident(v as Vertex).iter().any(|&id| h.edge(id).iter().all(|&u| !chosen[u as usize]));
            chosen[v] = needed;
        }
    }
    (0..h.n()).filter(|&v| chosen[v]).map(|v| v as Vertex).collect()
}

fn exact_cover(h: &Hypergraph, support: &[Vertex], budget: u64) -> Result<Vec<Vertex>> {
    let index = |v: Vertex| support.binary_search(&v).expect("vertex in support");
    let masks: Vec<u32> = h.edges().iter().map(|e| e.iter().fold(0u32, |m, &v| m | 1 << index(v))).collect();
    struct Bnb<'a> {
        masks: &'a [u32],
        best: u32,
        best_size: u32,
        nodes: u64,
        budget: u64,
    }
    impl Bnb<'_> {
        fn go(&mut self, chosen: u32, excluded: u32) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            let size = chosen.count_ones();
            let mut lb = 0;
            let mut blocked = 0u32;
            let mut pick: Option<u32> = None;
            for &m in self.masks {
                if m & chosen != 0 {
                    continue;
                }
                let open = m & !excluded;
                if open == 0 {
                    return Ok(());
                }
                if pick.is_none_or(|p| open.count_ones() < p.count_ones()) {
                    pick = Some(open);
                }
                if m & blocked == 0 {
                    blocked |= m;
                    lb += 1;
                }
            }
            let Some(open) = pick else {
                if size < self.best_size {
                    self.best_size = size;
                    self.best = chosen;
                }
                return Ok(());
            };
            if size + lb >= self.best_size {
                return Ok(());
            }
            let mut ex = excluded;
            let mut rest = open;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                self.go(chosen | bit, ex)?;
                ex |= bit;
            }
            Ok(())
        }
    }
    let mut b = Bnb { masks: &masks, best: 0, best_size: u32::MAX, nodes: 0, budget };
    b.go(0, 0)?;
    Ok((0..support.len()).filter(|&i| b.best >> i & 1 == 1).map(|i| support[i]).collect())
}

/// A maximal matching `M` with `k|M| ≥ τ(h)`, together with the cover size it was compared to.
pub fn matching_from_cover(h: &Hypergraph) -> Result<MatchingCover> {
    let k = uniformity(h)?;
    let matching = maximal_matching(h);
    let cover = vertex_cover(h);
    if k * matching.len() < cover.vertices.len() {
        return Err(Error::Invariant(format!(
            "maximal matching of size {} is below tau/k with tau = {}",
            matching.len(),
            cover.vertices.len()
        )));
    }
    Ok(MatchingCover { matching, cover: cover.vertices.len(), cover_exact: cover.exact })
}

/// A sub-family `h'` of at least `(k/2^k)|h|` edges and `s' ⊆ s` meeting each of them once.
pub fn cross_cut(h: &Hypergraph, s: &[Vertex], seed: u64, max_tries: u32) -> Result<CrossCut> {
    let k = uniformity(h)?;
    let mut in_s = vec![false; h.n()];
    for &v in s {
        if (v as usize) < h.n() {
            in_s[v as usize] = true;
        }
    }
    if let Some(id) = h.edges().iter().position(|e| e.iter().all(|&v| !in_s[v as usize])) {
        return Err(Error::precondition(Violation::new(format!("s covers h: edge {id} is uncovered"))));
    }
    if h.is_empty() {
        return Ok(CrossCut { edges: Vec::new(), cut: Vec::new(), tries: 0 });
    }
    let need = (k * h.num_edges()) as u128;
    let mut rng = rng::stream(seed, "cross_cut");
    for t in 1..=max_tries {
        let pick: Vec<bool> = (0..h.n()).map(|v| in_s[v] && rng.gen_bool(0.5)).collect();
        let edges: Vec<EdgeId> = (0..h.num_edges())
            .filter(|&id| h.edge(id).iter().filter(|&&v| pick[v as usize]).count() == 1)
            .collect();
        if (edges.len() as u128) << k >= need {
            let mut cut: Vec<Vertex> =
                edges.iter().flat_map(|&id| h.edge(id).iter().copied().filter(|&v| pick[v as usize])).collect();
            cut.sort_unstable();
            cut.dedup();
            return Ok(CrossCut { edges, cut, tries: t });
        }
    }
    Err(Error::FailedAfterRetries { tries: max_tries, reason: format!("no subset reached {k}/2^{k} of {} edges", h.num_edges()) })
}

/// Length-`l` path from `x` in the 2-graph `b`, strongly rainbow under `phi`, with every colour
/// avoiding `s0`. Extends greedily one edge at a time.
pub fn rainbow_path(
    b: &Hypergraph,
    phi: &PairColoring,
    x: Vertex,
    l: usize,
    s0: &BTreeSet<Vertex>,
) -> Result<PathCertificate> {
    if !b.is_empty() && b.uniformity() != Some(2) {
        return Err(Error::arg("rainbow_path needs a 2-graph"));
    }
    let mut k = None;
    for e in b.edges() {
        let c = phi
            .color(e[0], e[1])
            .ok_or_else(|| Error::precondition(Violation::new(format!("pair {{{},{}}} has a colour", e[0], e[1]))))?;
        if *k.get_or_insert(c.len()) != c.len() {
            return Err(Error::precondition(Violation::new("all colours have the same size k")));
        }
    }
    let coloured: PairColoring = {
        let mut p = PairColoring::new();
        for e in b.edges() {
            p.insert(e[0], e[1], phi.color(e[0], e[1]).unwrap_or_default().to_vec());
        }
        p
    };
    if !coloured.is_strongly_proper() {
        return Err(Error::precondition(Violation::new("phi is strongly proper on b")));
    }
    rainbow_path_avoiding(b, phi, x, l, s0, &BTreeSet::new())
}

/// As [`rainbow_path`] without the colouring checks; path vertices other than `x` also avoid
/// `avoid`. `l = 0` is rejected since a path has at least one edge.
pub(crate) fn rainbow_path_avoiding(
    b: &Hypergraph,
    phi: &PairColoring,
    x: Vertex,
    l: usize,
    s0: &BTreeSet<Vertex>,
    avoid: &BTreeSet<Vertex>,
) -> Result<PathCertificate> {
    if l == 0 {
        return Err(Error::arg("path length must be >= 1"));
    }
    if x as usize >= b.n() {
        return Err(Error::arg(format!("vertex {x} out of range")));
    }
    let k = b.edges().first().and_then(|e| phi.color(e[0], e[1])).map_or(0, |c| c.len());
    let mut used: BTreeSet<Vertex> = s0.clone();
    let mut on_path = BTreeSet::from([x]);
    let mut edges = Vec::with_capacity(l);
    let mut y = x;
    for step in 0..l {
        let next = b.incident(y).iter().copied().find_map(|id| {
            let e = b.edge(id);
            let z = if e[0] == y { e[1] } else { e[0] };
            if on_path.contains(&z) || avoid.contains(&z) {
                return None;
            }
            let c = phi.color(y, z)?;
            c.iter().all(|v| !used.contains(v)).then_some((id, z))
        });
        let Some((id, z)) = next else {
            let delta = b.min_degree_over(&b.support());
            return Err(Error::precondition(Violation::with_trace(
                format!("min degree {delta} >= (k+1)l+|s0| = {}", (k + 1) * l + s0.len()),
                vec![format!("no extension from vertex {y} at step {}", step + 1)],
            )));
        };
        used.extend(phi.color(y, z).unwrap_or_default().iter().copied());
        on_path.insert(z);
        edges.push(id);
        y = z;
    }
    Ok(PathCertificate { edges, start: x, end: y })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::{default_coloring, graph2, LinearHypergraph};

    #[test]
    fn matching_on_perfect_matching_and_sunflower() {
        let h = Hypergraph::uniform(6, 3, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let m = matching_from_cover(&h).unwrap();
        assert_eq!(m.matching, vec![0, 1]);
        assert_eq!(m.cover, 2);
        let sf = Hypergraph::uniform(7, 3, vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]]).unwrap();
        let m = matching_from_cover(&sf).unwrap();
        assert_eq!(m.matching.len(), 1);
        assert_eq!((m.cover, m.cover_exact), (1, true));
    }

    #[test]
    fn exact_cover_of_triangle_and_k4() {
        let tri = graph2(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(vertex_cover(&tri).vertices.len(), 2);
        let k4 = graph2(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(vertex_cover(&k4).vertices.len(), 3);
    }

    #[test]
    fn cross_cut_examples() {
        let h = Hypergraph::uniform(6, 3, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let c = cross_cut(&h, &[0, 3], 1, 100).unwrap();
        assert!(c.edges.len() * 8 >= 3 * 2);
        let single = Hypergraph::uniform(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let c = cross_cut(&single, &[0, 1, 2], 7, 100).unwrap();
        assert_eq!(c.edges, vec![0]);
        assert_eq!(c.cut.len(), 1);
        assert!(matches!(cross_cut(&single, &[5], 0, 3), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn rainbow_basis_step() {
        let g = LinearHypergraph::new(Hypergraph::uniform(5, 3, vec![vec![0, 1, 2], vec![0, 3, 4]]).unwrap()).unwrap();
        let b = graph2(5, &[(0, 1), (0, 3)]).unwrap();
        let phi = default_coloring(&g, &[(0, 1), (0, 3)]).unwrap();
        let p = rainbow_path(&b, &phi, 0, 1, &BTreeSet::new()).unwrap();
        assert_eq!(p.edges, vec![0]);
        let p = rainbow_path(&b, &phi, 0, 1, &BTreeSet::from([2])).unwrap();
        assert_eq!(p.end, 3);
        assert!(rainbow_path(&b, &phi, 0, 1, &BTreeSet::from([2, 4])).is_err());
    }
}
