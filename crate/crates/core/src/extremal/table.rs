use rayon::prelude::*;

use super::{ex_linear_with_budget, ExtremalReport};
use crate::error::Result;

pub const CSV_HEADER: &str = "n,r,ell,lo,hi,exact,nodes,seconds";

/// One report per `n` in `range`, computed in parallel and returned in order.
pub fn turan_table(range: std::ops::RangeInclusive<usize>, r: usize, ell: usize, budget: u64) -> Result<Vec<ExtremalReport>> {
    let ns: Vec<usize> = range.collect();
    ns.par_iter().map(|&n| ex_linear_with_budget(n, r, ell, budget)).collect()
}

/// CSV with [`CSV_HEADER`]. Wall-clock seconds are written only when `timing` is set, so
/// that default output is reproducible byte for byte.
pub fn table_csv(rows: &[ExtremalReport], timing: bool) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for row in rows {
        let secs = if timing { format!("{:.3}", row.seconds) } else { "0".to_string() };
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.n,
            row.r,
            row.ell.map(|l| l.to_string()).unwrap_or_default(),
            row.lo,
            row.hi,
            row.exact,
            row.nodes,
            secs
        ));
    }
    s
}
