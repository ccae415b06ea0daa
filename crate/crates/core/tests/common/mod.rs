#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treedist::Tree;

/// Trees with many isomorphic siblings: every vertex draws its children
/// from one or two subtree templates of the level below, so twins are the
/// rule. Generation stops adding vertices at `max_n`.
pub fn symmetric_tree(seed: u64, k: usize, max_n: usize) -> Tree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let depth = rng.gen_range(2..=6);
    // pools[l][s] lists the child templates (indices into pools[l-1]) of
    // template s at height l; usize::MAX marks a pendant leaf.
    let mut pools: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    for level in 1..=depth {
        let below = pools[level - 1].len();
        let pool = (0..rng.gen_range(1..=2))
            .map(|_| {
                let fan = rng.gen_range(1..k);
                let pick = rng.gen_range(0..below);
                let alt = rng.gen_range(0..below);
                (0..fan)
                    .map(|i| match i % 4 {
                        3 if rng.gen_bool(0.5) => usize::MAX,
                        2 => alt,
                        _ => pick,
                    })
                    .collect()
            })
            .collect();
        pools.push(pool);
    }
    let root_fan = rng.gen_range(2..=k);
    let pick = rng.gen_range(0..pools[depth - 1].len());
    let mut edges = Vec::new();
    let mut n = 1;
    let mut queue: std::collections::VecDeque<(usize, usize, usize)> =
        (0..root_fan).map(|_| (0, depth - 1, pick)).collect();
    while let Some((parent, level, shape)) = queue.pop_front() {
        if n >= max_n {
            break;
        }
        let v = n;
        n += 1;
        edges.push((parent, v));
        if level == 0 || shape == usize::MAX {
            continue;
        }
        for &child in &pools[level][shape] {
            queue.push_back((v, level - 1, child));
        }
    }
    Tree::from_edges(n, &edges).expect("generated a tree")
}

/// Every labeled tree on `n` vertices, from Prüfer sequences.
pub fn all_labeled_trees(n: usize) -> Vec<Tree> {
    if n == 1 {
        return vec![Tree::singleton()];
    }
    if n == 2 {
        return vec![Tree::from_edges(2, &[(0, 1)]).unwrap()];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            from_prufer(n, &seq)
        })
        .collect()
}

fn from_prufer(n: usize, seq: &[usize]) -> Tree {
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::from_edges(n, &edges).unwrap()
}
