use std::collections::BTreeMap;

use super::{LinearHypergraph, Vertex};
use crate::error::{Error, Result};

/// Colouring of vertex pairs by vertex sets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairColoring {
    colors: BTreeMap<(Vertex, Vertex), Vec<Vertex>>,
}

impl PairColoring {
    pub fn new() -> Self {
        PairColoring::default()
    }

    pub fn insert(&mut self, a: Vertex, b: Vertex, color: Vec<Vertex>) {
        self.colors.insert(ordered(a, b), color);
    }

    pub fn color(&self, a: Vertex, b: Vertex) -> Option<&[Vertex]> {
        self.colors.get(&ordered(a, b)).map(|c| c.as_slice())
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Vertex, Vertex), &Vec<Vertex>)> {
        self.colors.iter()
    }

    /// Incident pairs receive disjoint colour sets.
    pub fn is_strongly_proper(&self) -> bool {
        let mut at: BTreeMap<Vertex, Vec<&Vec<Vertex>>> = BTreeMap::new();
        for (&(a, b), c) in &self.colors {
            at.entry(a).or_default().push(c);
            at.entry(b).or_default().push(c);
        }
        at.values().all(|cs| pairwise_disjoint(cs))
    }

    /// The colour sets of the given pairs are pairwise disjoint.
    pub fn is_rainbow_on(&self, pairs: &[(Vertex, Vertex)]) -> bool {
        let cs: Option<Vec<&Vec<Vertex>>> =
            pairs.iter().map(|&(a, b)| self.colors.get(&ordered(a, b))).collect();
        cs.map(|cs| pairwise_disjoint(&cs)).unwrap_or(false)
    }
}

fn ordered(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn pairwise_disjoint(cs: &[&Vec<Vertex>]) -> bool {
    let mut all: Vec<Vertex> = cs.iter().flat_map(|c| c.iter().copied()).collect();
    let total = all.len();
    all.sort_unstable();
    all.dedup();
    all.len() == total
}

/// `φ({a,b}) = e \ {a,b}` for the unique host edge `e ⊇ {a,b}`, restricted to `pairs`.
pub fn default_coloring(g: &LinearHypergraph, pairs: &[(Vertex, Vertex)]) -> Result<PairColoring> {
    let mut out = PairColoring::new();
    for &(a, b) in pairs {
        let id = g
            .edge_containing(a, b)
            .ok_or_else(|| Error::arg(format!("pair {{{a},{b}}} is not in the shadow")))?;
        let color = g.edge(id).iter().copied().filter(|&v| v != a && v != b).collect();
        out.insert(a, b, color);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::Hypergraph;

    #[test]
    fn default_coloring_examples() {
        let g = LinearHypergraph::new(Hypergraph::new(4, vec![vec![0, 1, 2, 3]]).unwrap()).unwrap();
        let phi = default_coloring(&g, &[(0, 1)]).unwrap();
        assert_eq!(phi.color(1, 0), Some(&[2, 3][..]));
        assert!(default_coloring(&g, &[]).unwrap().is_empty());

        let h = LinearHypergraph::new(
            Hypergraph::new(5, vec![vec![0, 1, 2], vec![0, 3, 4]]).unwrap(),
        )
        .unwrap();
        let phi = default_coloring(&h, &[(0, 1), (0, 3)]).unwrap();
        assert!(phi.is_strongly_proper());
        assert!(default_coloring(&h, &[(1, 3)]).is_err());
    }
}
