use std::collections::VecDeque;

use super::{Hypergraph, Vertex};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Result of a peeling process: the surviving subgraph (original labels) and its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peeled {
    pub graph: Hypergraph,
    pub kept: Vec<Vertex>,
}

/// Repeatedly deletes vertices whose current degree satisfies `remove(deg)`.
/// The surviving set does not depend on deletion order; the queue is seeded in index order.
fn peel_by(g: &Hypergraph, remove: impl Fn(usize) -> bool) -> Peeled {
    let n = g.n();
    let mut alive_v = vec![true; n];
    let mut alive_e = vec![true; g.num_edges()];
    let mut deg: Vec<usize> = (0..n as Vertex).map(|v| g.degree(v)).collect();
    let mut queued = vec![false; n];
    let mut queue = VecDeque::new();
    for v in 0..n {
        if remove(deg[v]) {
            queued[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        alive_v[v] = false;
        for &id in g.incident(v as Vertex) {
            if !alive_e[id] {
                continue;
            }
            alive_e[id] = false;
            for &u in g.edge(id) {
                let u = u as usize;
                deg[u] -= 1;
                if alive_v[u] && !queued[u] && remove(deg[u]) {
                    queued[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    let ids: Vec<usize> = (0..g.num_edges()).filter(|&i| alive_e[i]).collect();
    Peeled {
        graph: g.sub_edges(&ids),
        kept: (0..n as Vertex).filter(|&v| alive_v[v as usize]).collect(),
    }
}

/// Iteratively deletes vertices of degree `<= threshold`. Every kept vertex has
/// degree `> threshold` in the result.
pub fn min_degree_peel<T: Scalar>(g: &Hypergraph, threshold: &T) -> Peeled {
    peel_by(g, |d| T::from_usize(d) <= *threshold)
}

/// Iteratively deletes vertices of degree `< d/4` from a 2-graph; keeps at least
/// half the edges when `d` is the average degree.
pub fn half_edge_peel<T: Scalar>(g: &Hypergraph, d: &T) -> Result<Peeled> {
    if g.is_empty() {
        return Err(Error::Degenerate("half_edge_peel on an edgeless graph".into()));
    }
    if g.edges().iter().any(|e| e.len() != 2) {
        return Err(Error::arg("half_edge_peel expects a 2-graph"));
    }
    let quarter = d.clone() / T::from_i64(4);
    Ok(peel_by(g, |deg| T::from_usize(deg) < quarter))
}

/// Average degree `Σ deg / n` as an exact rational.
pub fn average_degree<T: Scalar>(g: &Hypergraph) -> T {
    if g.n() == 0 {
        return T::zero();
    }
    T::from_usize(g.degree_sum()) / T::from_usize(g.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::graph2;
    use crate::Rational;

    #[test]
    fn matching_survives_half_threshold() {
        let g = graph2(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let p = min_degree_peel(&g, &Rational::new(1, 2));
        assert_eq!(p.graph, g);
        assert_eq!(p.kept.len(), 6);
    }

    #[test]
    fn single_edge_at_threshold_one_vanishes() {
        let g = graph2(2, &[(0, 1)]).unwrap();
        let p = min_degree_peel(&g, &Rational::from_integer(1));
        assert!(p.graph.is_empty());
        assert!(p.kept.is_empty());
    }

    #[test]
    fn complete_graph_unchanged() {
        let mut pairs = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                pairs.push((a, b));
            }
        }
        let g = graph2(5, &pairs).unwrap();
        let d: Rational = average_degree(&g);
        let p = half_edge_peel(&g, &d).unwrap();
        assert_eq!(p.graph, g);
    }

    #[test]
    fn path_keeps_half() {
        let g = graph2(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d: Rational = average_degree(&g);
        assert_eq!(d, Rational::new(3, 2));
        let p = half_edge_peel(&g, &d).unwrap();
        assert!(2 * p.graph.num_edges() >= g.num_edges());
        assert!(p.kept.iter().all(|&v| p.graph.degree(v) >= 1));
        assert!(half_edge_peel(&Hypergraph::empty(3), &d).is_err());
    }
}
