use super::{ap3_free_max, APFreeSet, ApMode, ConstructionReport};
use crate::certify::find_linear_cycle;
use crate::error::{Error, Result};
use crate::hypercore::{Hypergraph, LinearHypergraph, Vertex};

/// Tripartite 3-graph with edges `{x, x + a, x + 2a}` for `x ∈ [N]`, `a ∈ A`, where
/// `A ⊆ [N]` is 3-AP-free (exact maximum for `N <= 40`, greedy above). Parts occupy
/// `[0,N)`, `[N,3N)`, `[3N,6N)`. Linearity and absence of linear triangles are re-verified.
pub fn rs_construction(big_n: usize) -> Result<ConstructionReport> {
    if big_n == 0 {
        return Err(Error::arg("N must be >= 1"));
    }
    let mode = if big_n <= super::ap::EXACT_MAX_N { ApMode::Exact } else { ApMode::Greedy };
    let a = ap3_free_max(big_n, mode)?;
    rs_from_set(&a)
}

pub(crate) fn rs_from_set(a: &APFreeSet) -> Result<ConstructionReport> {
    let big_n = a.n;
    let mut edges = Vec::with_capacity(big_n * a.len());
    for x in 1..=big_n {
        for &d in &a.elements {
            let y = x + d;
            let z = x + 2 * d;
            edges.push(vec![(x - 1) as Vertex, (big_n + y - 1) as Vertex, (3 * big_n + z - 1) as Vertex]);
        }
    }
    let g = Hypergraph::uniform(6 * big_n, 3, edges)?;
    let lin = LinearHypergraph::new(g)?;
    if let Some(c) = find_linear_cycle(&lin, 3)? {
        return Err(Error::Invariant(format!("linear triangle {:?} in the tripartite construction", c.edges)));
    }
    Ok(ConstructionReport {
        edges: lin.num_edges(),
        graph: lin,
        girth_checked: 3,
        exponent_estimate: None,
        seed: None,
        sampling: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_one_has_one_edge() {
        let r = rs_construction(1).unwrap();
        assert_eq!(r.edges, 1);
    }
}
