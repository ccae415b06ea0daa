//! Benchmark inputs shared by the criterion targets.

use treedist::{gen_random_tree, Tree};

/// A seeded random tree of `n` vertices and maximal valence at most `k`.
pub fn corpus_tree(n: usize, k: usize, seed: u64) -> Tree {
    gen_random_tree(n, k, seed).expect("feasible parameters")
}
