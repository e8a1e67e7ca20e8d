//! Sets of integers without 3-term arithmetic progressions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::DEFAULT_BUDGET;

pub const EXACT_MAX_N: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ApMode {
    Exact,
    Greedy,
}

/// Sorted subset of `[1, n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct APFreeSet {
    pub n: usize,
    pub elements: Vec<usize>,
}

impl APFreeSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// No `a < b < c` in the set with `a + c = 2b`, and all elements in `[1, n]`, sorted.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err("elements not strictly increasing".into());
        }
        if self.elements.iter().any(|&x| x == 0 || x > self.n) {
            return Err("element outside [1, n]".into());
        }
        for (i, &a) in self.elements.iter().enumerate() {
            for &b in &self.elements[i + 1..] {
                if self.elements.binary_search(&(2 * b - a)).is_ok() {
                    return Err(format!("{a}, {b}, {} is an arithmetic progression", 2 * b - a));
                }
            }
        }
        Ok(())
    }
}

pub fn ap3_free_max(n: usize, mode: ApMode) -> Result<APFreeSet> {
    ap3_free_max_with_budget(n, mode, DEFAULT_BUDGET)
}

pub fn ap3_free_max_with_budget(n: usize, mode: ApMode, budget: u64) -> Result<APFreeSet> {
    match mode {
        ApMode::Greedy => Ok(APFreeSet { n, elements: (1..=n).filter(|&x| no_digit_two(x - 1)).collect() }),
        ApMode::Exact => {
            if n > EXACT_MAX_N {
                return Err(Error::BudgetExceeded { budget });
            }
            let sets = r3_sets(n, budget)?;
            Ok(APFreeSet { n, elements: sets.last().cloned().unwrap_or_default() })
        }
    }
}

fn no_digit_two(mut x: usize) -> bool {
    while x > 0 {
        if x % 3 == 2 {
            return false;
        }
        x /= 3;
    }
    true
}

/// `r_3(k)` for `k = 0..=n`, computed exactly.
pub fn r3_table(n: usize) -> Result<Vec<usize>> {
    if n > EXACT_MAX_N {
        return Err(Error::BudgetExceeded { budget: DEFAULT_BUDGET });
    }
    Ok(r3_sets(n, DEFAULT_BUDGET)?.iter().map(|s| s.len()).collect())
}

/// Maximum AP-free subsets of `[1, k]` for each `k <= n`. Since `r_3(k) <= r_3(k-1) + 1`,
/// step `k` only asks whether a set of size `r_3(k-1) + 1` containing `k` exists, pruning
/// with `chosen + r_3(j) <` target when only `[1, j]` remains undecided.
fn r3_sets(n: usize, budget: u64) -> Result<Vec<Vec<usize>>> {
    let mut sets: Vec<Vec<usize>> = vec![Vec::new()];
    let mut r3 = vec![0usize];
    let mut nodes = 0u64;
    for k in 1..=n {
        let target = r3[k - 1] + 1;
        let mut chosen = vec![k];
        let mut inset = vec![false; 2 * n + 2];
        inset[k] = true;
        if extend(k - 1, target, &r3, &mut chosen, &mut inset, &mut nodes, budget)? {
            chosen.sort_unstable();
            r3.push(target);
            sets.push(chosen);
        } else {
            r3.push(r3[k - 1]);
            sets.push(sets[k - 1].clone());
        }
    }
    Ok(sets)
}

fn extend(
    j: usize,
    target: usize,
    r3: &[usize],
    chosen: &mut Vec<usize>,
    inset: &mut [bool],
    nodes: &mut u64,
    budget: u64,
) -> Result<bool> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    if chosen.len() >= target {
        return Ok(true);
    }
    if j == 0 || chosen.len() + r3[j] < target {
        return Ok(false);
    }
    // j is the smallest element so far if taken; it closes an AP with b > j, c = 2b - j.
    let ok = chosen.iter().all(|&b| {
        let c = 2 * b - j;
        c >= inset.len() || !inset[c]
    });
    if ok {
        chosen.push(j);
        inset[j] = true;
        if extend(j - 1, target, r3, chosen, inset, nodes, budget)? {
            return Ok(true);
        }
        inset[j] = false;
        chosen.pop();
    }
    extend(j - 1, target, r3, chosen, inset, nodes, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(ap3_free_max(2, ApMode::Exact).unwrap().elements, vec![1, 2]);
        let g = ap3_free_max(9, ApMode::Greedy).unwrap();
        assert_eq!(g.elements, vec![1, 2, 4, 5]);
        g.validate().unwrap();
        assert!(APFreeSet { n: 5, elements: vec![1, 3, 5] }.validate().is_err());
    }
}
