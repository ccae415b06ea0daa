use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Tree;
use crate::error::{Error, Result};

/// Random tree on `n` vertices with maximum valence at most `k`.
///
/// Vertex `i` attaches to a uniformly chosen earlier vertex whose valence
/// is still below `k`. The result depends only on `(n, k, seed)`.
pub fn gen_random_tree(n: usize, k: usize, seed: u64) -> Result<Tree> {
    if n == 0 {
        return Err(Error::InfeasibleParams("n must be at least 1".into()));
    }
    if (n >= 3 && k < 2) || (n == 2 && k < 1) {
        return Err(Error::InfeasibleParams(format!(
            "no tree on {n} vertices has max valence {k}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut open: Vec<usize> = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    open.push(0);
    for v in 1..n {
        let slot = rng.gen_range(0..open.len());
        let p = open[slot];
        edges.push((p, v));
        degree[p] += 1;
        degree[v] = 1;
        if degree[p] >= k {
            open.remove(slot);
        }
        if k > 1 {
            open.push(v);
        }
    }
    Tree::from_edges(n, &edges)
}
