//! Exact linear Turán numbers and maximum linear packings by branch-and-bound.

mod search;
mod table;

pub use search::{ex_linear, ex_linear_with, ex_linear_with_budget, SearchOptions, max_linear_packing, max_linear_packing_with_budget, packing_bound};
pub use table::{table_csv, turan_table, CSV_HEADER};

use crate::hypercore::LinearHypergraph;

/// Outcome of an extremal search. `exact` means the search was exhausted and `lo == hi`.
#[derive(Clone, Debug)]
pub struct ExtremalReport {
    pub n: usize,
    pub r: usize,
    /// Forbidden cycle length; `None` for plain packings.
    pub ell: Option<usize>,
    pub lo: usize,
    pub hi: usize,
    pub witness: LinearHypergraph,
    pub nodes: u64,
    pub exact: bool,
    pub seconds: f64,
}

impl ExtremalReport {
    /// The exact value, if the search finished.
    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.lo)
    }
}
