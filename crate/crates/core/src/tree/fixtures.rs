//! Named trees used by tests, examples and the shipped fixture files.

use super::Tree;

fn build(n: usize, edges: &[(usize, usize)]) -> Tree {
    Tree::from_edges(n, edges).expect("fixture is a tree")
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Tree {
    assert!(n >= 1);
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    build(n, &edges)
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Tree {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    build(leaves + 1, &edges)
}

/// Tree whose internal vertices all have valence `k` and whose leaves all
/// sit at distance `depth` from the center 0. Ids follow BFS order.
pub fn complete_tree(k: usize, depth: usize) -> Tree {
    assert!(k >= 1);
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    let mut next_id = 1;
    for level in 0..depth {
        let fanout = if level == 0 { k } else { k - 1 };
        let mut next = Vec::new();
        for &p in &frontier {
            for _ in 0..fanout {
                edges.push((p, next_id));
                next.push(next_id);
                next_id += 1;
            }
        }
        frontier = next;
    }
    build(next_id, &edges)
}

/// Root 0 with `branches` children, each the top of a pendant path with
/// `tail` further vertices below it.
pub fn spider(branches: usize, tail: usize) -> Tree {
    let mut edges = Vec::new();
    let mut next_id = 1;
    for _ in 0..branches {
        let top = next_id;
        edges.push((0, top));
        next_id += 1;
        let mut prev = top;
        for _ in 0..tail {
            edges.push((prev, next_id));
            prev = next_id;
            next_id += 1;
        }
    }
    build(next_id, &edges)
}

/// The valence-10 tree with pendant paths of length two below every
/// neighbor of the center (31 vertices).
pub fn valence_ten_spider() -> Tree {
    spider(10, 2)
}

/// Three copies of `K_{1,3}` glued at one leaf each: vertex 0 is the glued
/// vertex, 1..=3 the star centers, 4..=9 the remaining leaves.
pub fn glued_stars() -> Tree {
    let mut edges = vec![(0, 1), (0, 2), (0, 3)];
    for (i, c) in (1..=3).enumerate() {
        edges.push((c, 4 + 2 * i));
        edges.push((c, 5 + 2 * i));
    }
    build(10, &edges)
}

/// Spine `0 - 1 - ... - spine-1` with one pendant leaf on every interior
/// spine vertex. Returns the tree and the spine, which starts at leaf 0.
pub fn caterpillar(spine: usize) -> (Tree, Vec<usize>) {
    assert!(spine >= 2);
    let mut edges: Vec<_> = (1..spine).map(|v| (v - 1, v)).collect();
    let mut next_id = spine;
    for v in 1..spine - 1 {
        edges.push((v, next_id));
        next_id += 1;
    }
    (build(next_id, &edges), (0..spine).collect())
}

/// A random finite ray prefix with trees hanging off it, for valence bound
/// `k >= 3`. The ray starts at leaf 0; every ray vertex after the first
/// carries at most `k - 2` off-ray neighbors. Returns the tree and the ray.
pub fn ray_prefix(seed: u64, k: usize) -> (Tree, Vec<usize>) {
    use rand::{Rng, SeedableRng};
    assert!(k >= 3);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let len = rng.gen_range(2..=10);
    let mut edges: Vec<_> = (1..len).map(|v| (v - 1, v)).collect();
    let mut degree = vec![1; len];
    degree[0] = 1;
    for d in degree.iter_mut().take(len - 1).skip(1) {
        *d = 2;
    }
    for z in 1..len {
        for _ in 0..rng.gen_range(0..=k - 2) {
            let top = degree.len();
            edges.push((z, top));
            degree[z] += 1;
            degree.push(1);
            let mut hanging = vec![top];
            for _ in 0..rng.gen_range(0..=5) {
                let open: Vec<usize> = hanging.iter().copied().filter(|&h| degree[h] < k).collect();
                let p = open[rng.gen_range(0..open.len())];
                let v = degree.len();
                edges.push((p, v));
                degree[p] += 1;
                degree.push(1);
                hanging.push(v);
            }
        }
    }
    (build(degree.len(), &edges), (0..len).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(complete_tree(3, 1).n(), 4);
        assert_eq!(complete_tree(3, 2).n(), 10);
        assert_eq!(complete_tree(3, 3).n(), 22);
        assert_eq!(complete_tree(4, 2).n(), 17);
        assert_eq!(valence_ten_spider().n(), 31);
        assert_eq!(valence_ten_spider().max_valence(), 10);
        assert_eq!(glued_stars().max_valence(), 3);
        let (cat, spine) = caterpillar(7);
        assert_eq!(cat.n(), 12);
        assert_eq!(spine.len(), 7);
        assert_eq!(cat.max_valence(), 3);
    }

    #[test]
    fn ray_prefixes_respect_valence() {
        for seed in 0..50 {
            let k = 3 + (seed as usize % 3);
            let (t, ray) = ray_prefix(seed, k);
            assert!(t.max_valence() <= k);
            assert!(t.is_leaf(ray[0]) || t.n() == 1);
        }
    }
}
