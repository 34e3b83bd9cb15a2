//! Synthetic digraphs for tests and benchmarks.

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexId};
use crate::null::randomize_directions;

fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{name} {p} not in [0, 1]")))
    }
}

/// Erdős–Rényi undirected pairs: each of the `n(n-1)/2` pairs independently
/// with probability `p`.
pub fn gnp_pairs(n: usize, p: f64, seed: u64) -> Result<Vec<(VertexId, VertexId)>> {
    check_probability("edge probability", p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            if rng.random::<f64>() < p {
                pairs.push((VertexId(a), VertexId(b)));
            }
        }
    }
    Ok(pairs)
}

/// All pairs of `n` vertices.
pub fn complete_pairs(n: usize) -> Vec<(VertexId, VertexId)> {
    (0..n as u32)
        .flat_map(|a| (a + 1..n as u32).map(move |b| (VertexId(a), VertexId(b))))
        .collect()
}

/// `G(n, p)` with random directions: reciprocal with probability `r`,
/// otherwise one-way in a uniformly chosen direction.
pub fn random_digraph(n: usize, p: f64, r: f64, seed: u64) -> Result<Digraph> {
    let pairs = gnp_pairs(n, p, seed)?;
    randomize_directions((0..n as u64).collect(), &pairs, r, seed ^ 0x9e37_79b9_7f4a_7c15)
}

/// Heavy-tailed undirected graph: `m` endpoint pairs drawn with vertex `i`
/// weighted by `(i + 1)^(-1 / (exponent - 1))`, self-loops and repeats
/// dropped, then directed at reciprocity `r`.
pub fn chung_lu_digraph(n: usize, m: usize, exponent: f64, r: f64, seed: u64) -> Result<Digraph> {
    if exponent <= 1.0 {
        return Err(Error::InvalidArgument(format!("exponent {exponent} must exceed 1")));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("need at least two vertices".into()));
    }
    let alpha = 1.0 / (exponent - 1.0);
    let weights: Vec<f64> = (0..n).map(|i| ((i + 1) as f64).powf(-alpha)).collect();
    let dist = WeightedIndex::new(&weights).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut keys: Vec<u64> = Vec::with_capacity(m);
    for _ in 0..m {
        let a = dist.sample(&mut rng) as u32;
        let b = dist.sample(&mut rng) as u32;
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            keys.push((u64::from(lo) << 32) | u64::from(hi));
        }
    }
    keys.sort_unstable();
    keys.dedup();
    let pairs: Vec<(VertexId, VertexId)> = keys
        .into_iter()
        .map(|k| (VertexId((k >> 32) as u32), VertexId(k as u32)))
        .collect();
    randomize_directions((0..n as u64).collect(), &pairs, r, seed ^ 0x9e37_79b9_7f4a_7c15)
}
