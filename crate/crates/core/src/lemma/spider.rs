use std::collections::BTreeSet;

use super::quasi::{LevelKind, LeveledQuasiTree};
use crate::certify::PathCertificate;
use crate::error::{Error, Result, Violation};
use crate::hypercore::{Hypergraph, Vertex};

/// Legs sharing only the centre.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spider {
    pub center: Vertex,
    pub legs: Vec<PathCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpiderResult {
    pub spider: Spider,
    /// `V(H_x) ∩ s` for the centre `x`.
    pub share: Vec<Vertex>,
}

impl Spider {
    /// Legs are valid paths from the centre, monotone in `q`, pairwise meeting only at the centre.
    pub fn validate(&self, g: &Hypergraph, q: &LeveledQuasiTree) -> std::result::Result<(), String> {
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        for (i, leg) in self.legs.iter().enumerate() {
            leg.validate(g)?;
            if leg.start != self.center {
                return Err(format!("leg {i} does not start at the centre"));
            }
            let vs = leg.vertices(g);
            let mut levels = BTreeSet::new();
            for &v in &vs {
                if let Some((LevelKind::Main, j)) = q.level_of(v) {
                    if !levels.insert(j) {
                        return Err(format!("leg {i} hits main level {j} twice"));
                    }
                }
            }
            for v in vs {
                if v != self.center && !seen.insert(v) {
                    return Err(format!("legs share vertex {v}"));
                }
            }
        }
        Ok(())
    }
}

fn pow_u128(b: u128, e: usize) -> u128 {
    (0..e).fold(1u128, |acc, _| acc.saturating_mul(b))
}

/// Greedy maximal spider at the root of `t` whose legs are monotone paths into `targets`.
fn greedy_spider(t: &LeveledQuasiTree, g: &Hypergraph, targets: &[Vertex], p: usize) -> Vec<PathCertificate> {
    let root = t.root();
    let mut used = BTreeSet::new();
    let mut legs = Vec::new();
    for &y in targets {
        if legs.len() == p {
            break;
        }
        let Some(path) = t.monotone_path(g, root, y) else { continue };
        let vs: Vec<Vertex> = path.vertices(g).into_iter().filter(|&v| v != root).collect();
        if vs.iter().all(|v| !used.contains(v)) {
            used.extend(vs);
            legs.push(path);
        }
    }
    legs
}

/// A vertex `x` with `|V(H_x) ∩ s| ≥ |s|/(hpr)^(h-1)` carrying a `p`-leg spider of monotone
/// paths into `s`. Starts from a maximal spider at the root; when it is too small, descends
/// into the down graph of the vertex met by the most root paths.
pub fn find_spider(q: &LeveledQuasiTree, g: &Hypergraph, s: &[Vertex], p: usize) -> Result<SpiderResult> {
    let h = q.height();
    if h == 0 || p == 0 {
        return Err(Error::arg("find_spider needs height >= 1 and p >= 1"));
    }
    let mut s: Vec<Vertex> = s.to_vec();
    s.sort_unstable();
    s.dedup();
    let last: BTreeSet<Vertex> = q.last_level().iter().copied().collect();
    if let Some(v) = s.iter().find(|v| !last.contains(v)) {
        return Err(Error::arg(format!("vertex {v} is not in the last main level")));
    }
    let r = g.rank() as u128;
    let base = h as u128 * p as u128 * r;
    let need = pow_u128(base, h);
    if (s.len() as u128) < need {
        return Err(Error::precondition(Violation::new(format!("|s| = {} >= (hpr)^h = {need}", s.len()))));
    }
    let mut trace = Vec::new();
    let (center, legs) = descend(q.clone(), g, s.clone(), p, &mut trace)?;
    let share: Vec<Vertex> = {
        let a: BTreeSet<Vertex> = q.descendants_in_last(g, center)?.into_iter().collect();
        s.iter().copied().filter(|v| a.contains(v)).collect()
    };
    if (share.len() as u128).saturating_mul(pow_u128(base, h - 1)) < s.len() as u128 {
        return Err(Error::Invariant(format!(
            "share {} of centre {center} is below |s|/(hpr)^(h-1) [trace: {}]",
            share.len(),
            trace.join(" -> ")
        )));
    }
    let spider = Spider { center, legs };
    spider.validate(g, q).map_err(Error::Invariant)?;
    Ok(SpiderResult { spider, share })
}

fn descend(
    t: LeveledQuasiTree,
    g: &Hypergraph,
    s: Vec<Vertex>,
    p: usize,
    trace: &mut Vec<String>,
) -> Result<(Vertex, Vec<PathCertificate>)> {
    let h = t.height();
    let root = t.root();
    let legs = greedy_spider(&t, g, &s, p);
    trace.push(format!("root {root}: {} legs over {} targets", legs.len(), s.len()));
    if legs.len() >= p {
        return Ok((root, legs));
    }
    if h <= 1 {
        return Err(Error::precondition(Violation::with_trace(
            format!("at least p = {p} targets below a height-1 root"),
            trace.clone(),
        )));
    }
    let mut u: BTreeSet<Vertex> = BTreeSet::new();
    for leg in &legs {
        for v in leg.vertices(g) {
            if let Some((_, j)) = t.level_of(v) {
                if v != root && (1..h).contains(&j) {
                    u.insert(v);
                }
            }
        }
    }
    let paths: Vec<(Vertex, BTreeSet<Vertex>)> = s
        .iter()
        .filter_map(|&y| t.monotone_path(g, root, y).map(|pth| (y, pth.vertices(g).into_iter().collect())))
        .collect();
    let z = u
        .iter()
        .copied()
        .max_by_key(|&z| {
            let count = paths.iter().filter(|(_, vs)| vs.contains(&z)).count();
            let (kind, j) = t.level_of(z).expect("levelled");
            (count, std::cmp::Reverse(j), std::cmp::Reverse(kind), std::cmp::Reverse(z))
        })
        .ok_or_else(|| Error::Invariant("maximal spider meets no root path".into()))?;
    let s2: Vec<Vertex> = paths.iter().filter(|(_, vs)| vs.contains(&z)).map(|(y, _)| *y).collect();
    trace.push(format!("descend to {z} with {} targets", s2.len()));
    let sub = t.down_graph(g, z)?;
    let hz = sub.height();
    let r = g.rank() as u128;
    let need = pow_u128(hz as u128 * p as u128 * r, hz);
    if (s2.len() as u128) < need {
        return Err(Error::precondition(Violation::with_trace(
            format!("|s'| = {} >= (h'pr)^h' = {need}", s2.len()),
            trace.clone(),
        )));
    }
    descend(sub, g, s2, p, trace)
}

/// For each levelled vertex above the last level, its down graph and `V(H_x) ∩ L_h`.
pub(crate) struct DominatorIndex {
    entries: Vec<(Vertex, usize, LeveledQuasiTree, BTreeSet<Vertex>)>,
    h: usize,
}

impl DominatorIndex {
    pub(crate) fn new(q: &LeveledQuasiTree, g: &Hypergraph) -> Result<Self> {
        let h = q.height();
        let mut entries = Vec::new();
        for i in 0..h {
            let mut level: Vec<Vertex> = q.main_level(i).to_vec();
            level.extend_from_slice(q.companion_level(i));
            for x in level {
                let t = q.down_graph(g, x)?;
                let a: BTreeSet<Vertex> =
                    if t.height() == h - i { t.last_level().iter().copied().collect() } else { BTreeSet::new() };
                entries.push((x, i, t, a));
            }
        }
        Ok(DominatorIndex { entries, h })
    }

    /// The qualifying vertex with the largest share of `targets`, ties by smallest level then
    /// smallest id. Qualifying: share at least `|targets|/(hpr)^(h-1)` and a `p`-leg spider.
    pub(crate) fn dominator(&self, g: &Hypergraph, targets: &[Vertex], p: usize) -> Option<(Vertex, Spider)> {
        let base = pow_u128(self.h as u128 * p as u128 * g.rank() as u128, self.h.saturating_sub(1));
        let mut ranked: Vec<(usize, usize, Vertex, usize)> = Vec::new();
        for (k, (x, i, _, a)) in self.entries.iter().enumerate() {
            let share = targets.iter().filter(|v| a.contains(v)).count();
            if (share as u128).saturating_mul(base) >= targets.len() as u128 && share >= p {
                ranked.push((share, *i, *x, k));
            }
        }
        ranked.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
        ranked.into_iter().find_map(|(_, _, x, k)| {
            let (_, _, t, a) = &self.entries[k];
            let mine: Vec<Vertex> = targets.iter().copied().filter(|v| a.contains(v)).collect();
            let legs = greedy_spider(t, g, &mine, p);
            (legs.len() >= p).then_some((x, Spider { center: x, legs }))
        })
    }

    pub(crate) fn last_below(&self, x: Vertex) -> Option<&BTreeSet<Vertex>> {
        self.entries.iter().find(|e| e.0 == x).map(|e| &e.3)
    }

    pub(crate) fn tree_of(&self, x: Vertex) -> Option<&LeveledQuasiTree> {
        self.entries.iter().find(|e| e.0 == x).map(|e| &e.2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Root with `a` children, each with `b` children (r = 3).
    fn balanced(a: usize, b: usize) -> (Hypergraph, LeveledQuasiTree) {
        let mut edges = Vec::new();
        let mut next = 1u32;
        let mut seg0 = Vec::new();
        let mut kids = Vec::new();
        for _ in 0..a {
            edges.push(vec![0, next, next + 1]);
            seg0.push((edges.len() - 1, next, next + 1));
            kids.push(next + 1);
            next += 2;
        }
        let mut seg1 = Vec::new();
        for &k in &kids {
            for _ in 0..b {
                edges.push(vec![k, next, next + 1]);
                seg1.push((edges.len() - 1, next, next + 1));
                next += 2;
            }
        }
        let g = Hypergraph::uniform(next as usize, 3, edges).unwrap();
        let mut q = LeveledQuasiTree::new(0);
        q.extend(&g, &seg0).unwrap();
        q.extend(&g, &seg1).unwrap();
        (g, q)
    }

    #[test]
    fn star_takes_root() {
        let edges: Vec<Vec<Vertex>> = (0..6u32).map(|i| vec![0, 2 * i + 1, 2 * i + 2]).collect();
        let g = Hypergraph::uniform(13, 3, edges).unwrap();
        let mut q1 = LeveledQuasiTree::new(0);
        q1.extend(&g, &(0..6).map(|i| (i, 2 * i as u32 + 1, 2 * i as u32 + 2)).collect::<Vec<_>>()).unwrap();
        let res = find_spider(&q1, &g, q1.last_level(), 2).unwrap();
        assert_eq!(res.spider.center, 0);
        assert_eq!(res.spider.legs.len(), 2);
    }

    #[test]
    fn balanced_tree_root_has_spider() {
        let (g, q) = balanced(3, 108);
        let s = q.last_level().to_vec();
        let res = find_spider(&q, &g, &s, 3).unwrap();
        assert_eq!(res.spider.center, 0);
        res.spider.validate(&g, &q).unwrap();
    }

    #[test]
    fn narrow_root_descends() {
        // one child of the root carries every target, so the spider sits below the root
        let (g, q) = balanced(1, 324);
        let s = q.last_level().to_vec();
        let res = find_spider(&q, &g, &s, 3).unwrap();
        assert_ne!(res.spider.center, 0);
        assert_eq!(res.share.len(), 324);
        res.spider.validate(&g, &q).unwrap();
        let idx = DominatorIndex::new(&q, &g).unwrap();
        let (x, sp) = idx.dominator(&g, &s, 3).unwrap();
        assert_eq!(x, res.spider.center);
        sp.validate(&g, &q).unwrap();
    }

    #[test]
    fn too_few_targets() {
        let (g, q) = balanced(2, 3);
        assert!(matches!(find_spider(&q, &g, q.last_level(), 3), Err(Error::PreconditionViolated(_))));
    }
}
