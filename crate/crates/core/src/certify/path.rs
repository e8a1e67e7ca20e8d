//! Linear path search with optional endpoints and forbidden vertices.

use super::PathCertificate;
use crate::error::{Error, Result};
use crate::hypercore::{EdgeId, Hypergraph, Vertex};
use crate::DEFAULT_BUDGET;

/// A linear path with `l` edges from `x` to `y` (either may be `None` for "any"), whose
/// vertices other than the prescribed endpoints avoid `forbidden`.
pub fn find_linear_path(
    g: &Hypergraph,
    l: usize,
    x: Option<Vertex>,
    y: Option<Vertex>,
    forbidden: &[Vertex],
) -> Result<Option<PathCertificate>> {
    find_linear_path_with_budget(g, l, x, y, forbidden, DEFAULT_BUDGET)
}

pub fn find_linear_path_with_budget(
    g: &Hypergraph,
    l: usize,
    x: Option<Vertex>,
    y: Option<Vertex>,
    forbidden: &[Vertex],
    budget: u64,
) -> Result<Option<PathCertificate>> {
    if l == 0 {
        return Err(Error::arg("path length must be >= 1"));
    }
    for v in x.iter().chain(y.iter()) {
        if *v as usize >= g.n() {
            return Err(Error::arg(format!("endpoint {v} out of range")));
        }
    }
    if x.is_some() && x == y {
        return Ok(None);
    }
    if g.num_edges() < l {
        return Ok(None);
    }
    let mut blocked = vec![false; g.n()];
    for &v in forbidden {
        if (v as usize) < g.n() {
            blocked[v as usize] = true;
        }
    }
    for v in x.iter().chain(y.iter()) {
        blocked[*v as usize] = false;
    }
    let mut s = PathSearch { g, l, y, blocked, used: vec![false; g.n()], path: Vec::new(), nodes: 0, budget };
    if let Some(y) = y {
        s.used[y as usize] = true;
    }
    let starts: Vec<Vertex> = match x {
        Some(x) => vec![x],
        None => (0..g.n() as Vertex).filter(|&v| !s.blocked[v as usize] && Some(v) != y).collect(),
    };
    for start in starts {
        s.used[start as usize] = true;
        let r = s.dfs(start)?;
        s.used[start as usize] = false;
        if let Some((edges, end)) = r {
            return Ok(Some(PathCertificate { edges, start, end }));
        }
    }
    Ok(None)
}

struct PathSearch<'a> {
    g: &'a Hypergraph,
    l: usize,
    y: Option<Vertex>,
    blocked: Vec<bool>,
    used: Vec<bool>,
    path: Vec<EdgeId>,
    nodes: u64,
    budget: u64,
}

impl PathSearch<'_> {
    fn free(&self, v: Vertex) -> bool {
        !self.used[v as usize] && !self.blocked[v as usize]
    }

    fn dfs(&mut self, at: Vertex) -> Result<Option<(Vec<EdgeId>, Vertex)>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let g = self.g;
        let last = self.path.len() + 1 == self.l;
        for &id in g.incident(at) {
            let ed = g.edge(id);
            if last {
                let end = match self.y {
                    Some(y) => {
                        if ed.binary_search(&y).is_err() || !ed.iter().all(|&v| v == at || v == y || self.free(v)) {
                            continue;
                        }
                        y
                    }
                    None => {
                        if !ed.iter().all(|&v| v == at || self.free(v)) {
                            continue;
                        }
                        match ed.iter().copied().find(|&v| v != at) {
                            Some(v) => v,
                            None => continue,
                        }
                    }
                };
                let mut edges = self.path.clone();
                edges.push(id);
                return Ok(Some((edges, end)));
            }
            if !ed.iter().all(|&v| v == at || self.free(v)) {
                continue;
            }
            for &v in ed {
                self.used[v as usize] = true;
            }
            self.path.push(id);
            for &z in ed {
                if z == at {
                    continue;
                }
                if let Some(found) = self.dfs(z)? {
                    return Ok(Some(found));
                }
            }
            self.path.pop();
            for &v in ed {
                if v != at {
                    self.used[v as usize] = false;
                }
            }
        }
        Ok(None)
    }
}
