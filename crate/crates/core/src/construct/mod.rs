//! Lower-bound constructions.

mod ap;
mod fit;
mod packing;
mod rs;

pub use ap::{ap3_free_max, ap3_free_max_with_budget, r3_table, APFreeSet, ApMode};
pub use fit::exponent_fit;
pub use packing::{random_packing_deletion, CycleCountMethod, PackingOptions};
pub use rs::rs_construction;

use serde::Serialize;

use crate::hypercore::LinearHypergraph;

/// A constructed linear hypergraph with the facts that were re-verified on it.
#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub graph: LinearHypergraph,
    pub edges: usize,
    /// Largest cycle length verified absent.
    pub girth_checked: usize,
    pub exponent_estimate: Option<f64>,
    pub seed: Option<u64>,
    pub sampling: Option<SamplingInfo>,
}

/// Parameters of the packing-plus-deletion run.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SamplingInfo {
    pub packing_edges: usize,
    pub packing_cycles: f64,
    pub count_method: CycleCountMethod,
    pub keep_probability: f64,
    pub kept_edges: usize,
    pub deleted_edges: usize,
}

impl ConstructionReport {
    /// `{schema, n, edges, verifiedFreeLength, seed, ...}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "schema": 1,
            "n": self.graph.n(),
            "edges": self.edges,
            "verifiedFreeLength": self.girth_checked,
            "seed": self.seed,
        });
        if let Some(s) = &self.sampling {
            v["sampling"] = serde_json::to_value(s).expect("plain data");
        }
        if let Some(x) = self.exponent_estimate {
            v["exponentEstimate"] = serde_json::json!(x);
        }
        v
    }
}
