//! Sunflower detection by bucketing on candidate cores.

use std::collections::BTreeSet;

use super::SunflowerCertificate;
use crate::error::{Error, Result};
use crate::hypercore::{intersection, EdgeId, Hypergraph, Vertex};
use crate::DEFAULT_BUDGET;

/// `k!(p-1)^k`, the size above which every family of at most-`k`-sets has a `p`-sunflower.
pub fn sunflower_threshold(k: usize, p: usize) -> Option<u128> {
    let mut f: u128 = 1;
    for i in 1..=k as u128 {
        f = f.checked_mul(i)?;
    }
    f.checked_mul((p.saturating_sub(1) as u128).checked_pow(k as u32)?)
}

/// A sunflower with `p` members, if any.
pub fn find_sunflower(f: &Hypergraph, p: usize) -> Result<Option<SunflowerCertificate>> {
    find_sunflower_with(f, p, 0, DEFAULT_BUDGET)
}

/// A sunflower with `p` members and core size at least `min_core`. Cores are tried in
/// order of size, then lexicographically; the empty core comes first when allowed.
pub fn find_sunflower_with(
    f: &Hypergraph,
    p: usize,
    min_core: usize,
    budget: u64,
) -> Result<Option<SunflowerCertificate>> {
    if p < 2 {
        return Err(Error::arg("sunflower needs p >= 2"));
    }
    if f.num_edges() < p {
        return Ok(None);
    }
    let mut cores: BTreeSet<(usize, Vec<Vertex>)> = BTreeSet::new();
    if min_core == 0 {
        cores.insert((0, Vec::new()));
    }
    for v in 0..f.n() as Vertex {
        let inc = f.incident(v);
        for (i, &a) in inc.iter().enumerate() {
            for &b in &inc[i + 1..] {
                // each pair is visited at its least common vertex only
                let c = intersection(f.edge(a), f.edge(b));
                if c[0] == v && c.len() >= min_core {
                    cores.insert((c.len(), c));
                }
            }
        }
    }
    let mut nodes = 0u64;
    for (_, core) in cores {
        let members: Vec<EdgeId> = if core.is_empty() {
            (0..f.num_edges()).collect()
        } else {
            f.incident(core[0])
                .iter()
                .copied()
                .filter(|&id| core.iter().all(|v| f.edge(id).binary_search(v).is_ok()))
                .collect()
        };
        if members.len() < p {
            continue;
        }
        let mut cand: Vec<(Vec<Vertex>, EdgeId)> = members
            .into_iter()
            .map(|id| (f.edge(id).iter().copied().filter(|v| core.binary_search(v).is_err()).collect(), id))
            .collect();
        cand.sort_by_key(|a| (a.0.len(), a.1));
        let mut used = vec![false; f.n()];
        let mut chosen = Vec::new();
        if pack(&cand, 0, p, &mut used, &mut chosen, &mut nodes, budget)? {
            return Ok(Some(SunflowerCertificate { core, members: chosen }));
        }
    }
    Ok(None)
}

fn pack(
    cand: &[(Vec<Vertex>, EdgeId)],
    from: usize,
    p: usize,
    used: &mut [bool],
    chosen: &mut Vec<EdgeId>,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    if chosen.len() == p {
        return Ok(true);
    }
    for i in from..cand.len() {
        if chosen.len() + (cand.len() - i) < p {
            return Ok(false);
        }
        let (petal, id) = &cand[i];
        if petal.iter().any(|&v| used[v as usize]) {
            continue;
        }
        for &v in petal {
            used[v as usize] = true;
        }
        chosen.push(*id);
        if pack(cand, i + 1, p, used, chosen, nodes, budget)? {
            return Ok(true);
        }
        chosen.pop();
        for &v in petal {
            used[v as usize] = false;
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_is_a_sunflower_with_empty_core() {
        let f = Hypergraph::uniform(9, 3, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]).unwrap();
        let s = find_sunflower(&f, 3).unwrap().unwrap();
        assert!(s.core.is_empty());
        s.validate(&f).unwrap();
    }

    #[test]
    fn common_pair_core() {
        let f = Hypergraph::uniform(5, 3, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]).unwrap();
        let s = find_sunflower(&f, 3).unwrap().unwrap();
        assert_eq!(s.core, vec![0, 1]);
        s.validate(&f).unwrap();
    }

    #[test]
    fn threshold_values() {
        assert_eq!(sunflower_threshold(3, 3), Some(48));
        assert_eq!(sunflower_threshold(2, 2), Some(2));
    }
}
