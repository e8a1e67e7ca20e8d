//! Exact searches with independently re-checkable certificates.
//!
//! Validators in this module never call the searchers; a searcher result is
//! accepted only after its validator passes.

mod berge;
pub(crate) mod cycle;
mod independence;
mod path;
mod sunflower;

pub use berge::find_berge_cycle;
pub use cycle::{EdgeSource, PairTable, count_linear_cycles, find_cycle_through, find_cycle_through_indexed, find_linear_cycle, find_linear_cycle_with_budget, linear_girth};
pub use independence::{greedy_independent, independence_number, independence_number_with_budget, IndependenceMode, IndependentSet};
pub use path::{find_linear_path, find_linear_path_with_budget};
pub use sunflower::{find_sunflower, find_sunflower_with, sunflower_threshold};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercore::{intersection, intersection_size, EdgeId, Hypergraph, Vertex};

/// Ordered edges `e_1..e_ℓ` forming a linear cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleCertificate {
    pub edges: Vec<EdgeId>,
}

/// Ordered edges forming a linear path from `start ∈ e_1` to `end ∈ e_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathCertificate {
    pub edges: Vec<EdgeId>,
    pub start: Vertex,
    pub end: Vertex,
}

/// Members pairwise meeting exactly in `core`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SunflowerCertificate {
    pub core: Vec<Vertex>,
    pub members: Vec<EdgeId>,
}

/// Distinct edges `e_i ⊇ {x_i, x_{i+1}}` (indices cyclic) with distinct `x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BergeCycleCertificate {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<Vertex>,
}

fn check_ids(g: &Hypergraph, ids: &[EdgeId]) -> std::result::Result<(), String> {
    if let Some(&id) = ids.iter().find(|&&id| id >= g.num_edges()) {
        return Err(format!("edge id {id} out of range"));
    }
    let mut s = ids.to_vec();
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return Err("repeated edge id".into());
    }
    Ok(())
}

impl CycleCertificate {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks the linear-cycle pattern: consecutive edges (cyclically) meet in exactly one
    /// vertex, all other pairs are disjoint, and the junction vertices are distinct.
    pub fn validate(&self, g: &Hypergraph) -> std::result::Result<(), String> {
        let l = self.edges.len();
        if l < 3 {
            return Err(format!("cycle of length {l} < 3"));
        }
        check_ids(g, &self.edges)?;
        for i in 0..l {
            for j in i + 1..l {
                let k = intersection_size(g.edge(self.edges[i]), g.edge(self.edges[j]));
                let consecutive = j == i + 1 || (i == 0 && j == l - 1);
                if consecutive && k != 1 {
                    return Err(format!("consecutive edges at {i},{j} share {k} vertices"));
                }
                if !consecutive && k != 0 {
                    return Err(format!("edges at {i},{j} are not disjoint"));
                }
            }
        }
        let mut js = self.junctions(g);
        js.sort_unstable();
        js.dedup();
        if js.len() != l {
            return Err("junction vertices are not distinct".into());
        }
        Ok(())
    }

    /// `x_i = e_i ∩ e_{i+1}`, cyclically.
    pub fn junctions(&self, g: &Hypergraph) -> Vec<Vertex> {
        let l = self.edges.len();
        (0..l)
            .filter_map(|i| {
                intersection(g.edge(self.edges[i]), g.edge(self.edges[(i + 1) % l])).first().copied()
            })
            .collect()
    }
}

impl PathCertificate {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn validate(&self, g: &Hypergraph) -> std::result::Result<(), String> {
        let l = self.edges.len();
        if l == 0 {
            return Err("empty path".into());
        }
        check_ids(g, &self.edges)?;
        for i in 0..l {
            for j in i + 1..l {
                let k = intersection_size(g.edge(self.edges[i]), g.edge(self.edges[j]));
                if j == i + 1 && k != 1 {
                    return Err(format!("consecutive edges at {i},{j} share {k} vertices"));
                }
                if j > i + 1 && k != 0 {
                    return Err(format!("edges at {i},{j} are not disjoint"));
                }
            }
        }
        let first = g.edge(self.edges[0]);
        let last = g.edge(self.edges[l - 1]);
        if !first.contains(&self.start) || !last.contains(&self.end) {
            return Err("endpoints not in the end edges".into());
        }
        if self.start == self.end {
            return Err("endpoints coincide".into());
        }
        if l > 1 {
            if g.edge(self.edges[1]).contains(&self.start) {
                return Err("start vertex is a junction".into());
            }
            if g.edge(self.edges[l - 2]).contains(&self.end) {
                return Err("end vertex is a junction".into());
            }
        }
        Ok(())
    }

    /// All vertices of the path, ascending.
    pub fn vertices(&self, g: &Hypergraph) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.edges.iter().flat_map(|&e| g.edge(e).iter().copied()).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Sequence `start, x_1, .., x_{ℓ-1}, end` of endpoints and junctions.
    pub fn spine(&self, g: &Hypergraph) -> Vec<Vertex> {
        let mut s = vec![self.start];
        for w in self.edges.windows(2) {
            s.push(intersection(g.edge(w[0]), g.edge(w[1]))[0]);
        }
        s.push(self.end);
        s
    }

    pub fn reversed(&self) -> PathCertificate {
        let mut edges = self.edges.clone();
        edges.reverse();
        PathCertificate { edges, start: self.end, end: self.start }
    }
}

impl SunflowerCertificate {
    pub fn validate(&self, g: &Hypergraph) -> std::result::Result<(), String> {
        if self.members.len() < 2 {
            return Err("sunflower needs at least two members".into());
        }
        check_ids(g, &self.members)?;
        for i in 0..self.members.len() {
            for j in i + 1..self.members.len() {
                if intersection(g.edge(self.members[i]), g.edge(self.members[j])) != self.core {
                    return Err(format!("members {i},{j} do not meet exactly in the core"));
                }
            }
        }
        Ok(())
    }
}

impl BergeCycleCertificate {
    pub fn validate(&self, g: &Hypergraph) -> std::result::Result<(), String> {
        let l = self.edges.len();
        if l < 2 || self.vertices.len() != l {
            return Err("Berge cycle needs ℓ >= 2 edges and ℓ vertices".into());
        }
        check_ids(g, &self.edges)?;
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() != l {
            return Err("repeated vertex".into());
        }
        for i in 0..l {
            let e = g.edge(self.edges[i]);
            if !e.contains(&self.vertices[i]) || !e.contains(&self.vertices[(i + 1) % l]) {
                return Err(format!("edge {i} misses its threaded vertices"));
            }
        }
        Ok(())
    }
}

/// Tagged certificate for serialization: `{type, edgeIds, vertices?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(rename = "edgeIds")]
    pub edge_ids: Vec<EdgeId>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertices: Option<Vec<Vertex>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Cycle(CycleCertificate),
    Path(PathCertificate),
    Sunflower(SunflowerCertificate),
    Berge(BergeCycleCertificate),
}

impl Certificate {
    pub fn validate(&self, g: &Hypergraph) -> std::result::Result<(), String> {
        match self {
            Certificate::Cycle(c) => c.validate(g),
            Certificate::Path(c) => c.validate(g),
            Certificate::Sunflower(c) => c.validate(g),
            Certificate::Berge(c) => c.validate(g),
        }
    }

    pub fn to_json(&self) -> CertificateJson {
        match self {
            Certificate::Cycle(c) => CertificateJson { kind: "cycle".into(), edge_ids: c.edges.clone(), vertices: None },
            Certificate::Path(c) => CertificateJson {
                kind: "path".into(),
                edge_ids: c.edges.clone(),
                vertices: Some(vec![c.start, c.end]),
            },
            Certificate::Sunflower(c) => CertificateJson {
                kind: "sunflower".into(),
                edge_ids: c.members.clone(),
                vertices: Some(c.core.clone()),
            },
            Certificate::Berge(c) => CertificateJson {
                kind: "berge".into(),
                edge_ids: c.edges.clone(),
                vertices: Some(c.vertices.clone()),
            },
        }
    }

    pub fn from_json(j: &CertificateJson) -> Result<Self> {
        let vs = || j.vertices.clone().ok_or_else(|| Error::arg(format!("{} certificate needs vertices", j.kind)));
        Ok(match j.kind.as_str() {
            "cycle" => Certificate::Cycle(CycleCertificate { edges: j.edge_ids.clone() }),
            "path" => {
                let v = vs()?;
                if v.len() != 2 {
                    return Err(Error::arg("path certificate needs exactly two endpoints"));
                }
                Certificate::Path(PathCertificate { edges: j.edge_ids.clone(), start: v[0], end: v[1] })
            }
            "sunflower" => Certificate::Sunflower(SunflowerCertificate { core: vs()?, members: j.edge_ids.clone() }),
            "berge" => Certificate::Berge(BergeCycleCertificate { edges: j.edge_ids.clone(), vertices: vs()? }),
            other => return Err(Error::arg(format!("unknown certificate type `{other}`"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::cycle2;

    #[test]
    fn validator_rejects_common_point_triangle() {
        let g = Hypergraph::uniform(7, 3, vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]]).unwrap();
        let c = CycleCertificate { edges: vec![0, 1, 2] };
        assert!(c.validate(&g).is_err());
    }

    #[test]
    fn certificate_json_roundtrip() {
        let g = cycle2(5).expand(3).unwrap();
        let c = find_linear_cycle(&g, 5).unwrap().unwrap();
        let cert = Certificate::Cycle(c);
        let j = serde_json::to_string(&cert.to_json()).unwrap();
        let back: CertificateJson = serde_json::from_str(&j).unwrap();
        assert_eq!(Certificate::from_json(&back).unwrap(), cert);
        assert!(cert.validate(&g).is_ok());
    }
}
