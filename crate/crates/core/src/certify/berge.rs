//! Berge cycle detection.

use super::BergeCycleCertificate;
use crate::error::{Error, Result};
use crate::hypercore::{EdgeId, Hypergraph, Vertex};

/// A Berge cycle of length `l >= 2`, with `x_1` the least threaded vertex.
pub fn find_berge_cycle(g: &Hypergraph, l: usize, budget: u64) -> Result<Option<BergeCycleCertificate>> {
    if l < 2 {
        return Err(Error::arg("Berge cycle length must be >= 2"));
    }
    let mut s = Berge {
        g,
        l,
        xs: Vec::new(),
        es: Vec::new(),
        used_v: vec![false; g.n()],
        used_e: vec![false; g.num_edges()],
        nodes: 0,
        budget,
    };
    for x1 in 0..g.n() as Vertex {
        s.xs.push(x1);
        s.used_v[x1 as usize] = true;
        if s.dfs()? {
            return Ok(Some(BergeCycleCertificate { edges: s.es, vertices: s.xs }));
        }
        s.used_v[x1 as usize] = false;
        s.xs.pop();
    }
    Ok(None)
}

struct Berge<'a> {
    g: &'a Hypergraph,
    l: usize,
    xs: Vec<Vertex>,
    es: Vec<EdgeId>,
    used_v: Vec<bool>,
    used_e: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Berge<'_> {
    fn dfs(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let g = self.g;
        let x1 = self.xs[0];
        let cur = *self.xs.last().expect("nonempty");
        if self.xs.len() == self.l {
            for &id in g.incident(cur) {
                if !self.used_e[id] && g.edge(id).binary_search(&x1).is_ok() {
                    self.es.push(id);
                    return Ok(true);
                }
            }
            return Ok(false);
        }
        for &id in g.incident(cur) {
            if self.used_e[id] {
                continue;
            }
            self.used_e[id] = true;
            self.es.push(id);
            for &y in g.edge(id) {
                if y <= x1 || self.used_v[y as usize] {
                    continue;
                }
                self.used_v[y as usize] = true;
                self.xs.push(y);
                if self.dfs()? {
                    return Ok(true);
                }
                self.xs.pop();
                self.used_v[y as usize] = false;
            }
            self.es.pop();
            self.used_e[id] = false;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_edges_sharing_a_pair_form_a_berge_2_cycle() {
        let g = Hypergraph::uniform(4, 3, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let c = find_berge_cycle(&g, 2, 1000).unwrap().unwrap();
        c.validate(&g).unwrap();
        let lin = Hypergraph::uniform(5, 3, vec![vec![0, 1, 2], vec![0, 3, 4]]).unwrap();
        assert!(find_berge_cycle(&lin, 2, 1000).unwrap().is_none());
    }

    #[test]
    fn common_point_triangle_is_berge_but_not_linear() {
        let g = Hypergraph::uniform(7, 3, vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5]]).unwrap();
        assert!(find_berge_cycle(&g, 3, 1000).unwrap().is_some());
    }
}
