use rand::Rng as _;

use super::{LinearHypergraph, Vertex};
use crate::error::{Error, Result};
use crate::rng;
use crate::scalar::{ge_root, Scalar};

/// Random `t`-partition of the vertices such that every vertex `u` has at least
/// `(c / (2 t^{r-1})) n^{1/m}` link edges inside every part. Retries fresh colourings
/// up to `max_tries` times; the comparison against `n^{1/m}` is exact.
pub fn degree_split<T: Scalar>(
    g: &LinearHypergraph,
    t: usize,
    c: &T,
    m: u32,
    seed: u64,
    max_tries: u32,
) -> Result<Vec<Vec<Vertex>>> {
    if t == 0 || m == 0 {
        return Err(Error::arg("degree_split needs t >= 1 and m >= 1"));
    }
    let n = g.n();
    let r = g.rank().max(2) as u32;
    let k = c.clone() / (T::from_i64(2) * T::from_usize(t).pow(r - 1));
    let mut rng = rng::stream(seed, "degree_split");
    let mut part = vec![0usize; n];
    for _ in 0..max_tries {
        for p in part.iter_mut() {
            *p = rng.gen_range(0..t);
        }
        if satisfies(g, &part, t, &k, m) {
            let mut parts = vec![Vec::new(); t];
            for v in 0..n {
                parts[part[v]].push(v as Vertex);
            }
            return Ok(parts);
        }
    }
    Err(Error::FailedAfterRetries {
        tries: max_tries,
        reason: format!(
            "no {t}-colouring gave every vertex (c/2t^(r-1)) n^(1/m) link edges per part; \
             n may be below the probabilistic threshold n_0"
        ),
    })
}

fn satisfies<T: Scalar>(g: &LinearHypergraph, part: &[usize], t: usize, k: &T, m: u32) -> bool {
    let n = g.n();
    let mut count = vec![0usize; t];
    for u in 0..n as Vertex {
        count.iter_mut().for_each(|c| *c = 0);
        for &id in g.incident(u) {
            let mut rest = g.edge(id).iter().filter(|&&v| v != u);
            let first = match rest.next() {
                Some(&v) => part[v as usize],
                None => continue,
            };
            if rest.all(|&v| part[v as usize] == first) {
                count[first] += 1;
            }
        }
        if count.iter().any(|&c| !ge_root(&T::from_usize(c), k, n, m)) {
            return false;
        }
    }
    true
}

/// Per-vertex, per-part counts of link edges inside each part (for independent recounts).
pub fn link_counts(g: &LinearHypergraph, parts: &[Vec<Vertex>]) -> Vec<Vec<usize>> {
    let mut which = vec![usize::MAX; g.n()];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            which[v as usize] = i;
        }
    }
    (0..g.n() as Vertex)
        .map(|u| {
            let mut c = vec![0; parts.len()];
            for &id in g.incident(u) {
                let rest: Vec<usize> =
                    g.edge(id).iter().filter(|&&v| v != u).map(|&v| which[v as usize]).collect();
                if rest.iter().all(|&p| p == rest[0]) {
                    c[rest[0]] += 1;
                }
            }
            c
        })
        .collect()
}
