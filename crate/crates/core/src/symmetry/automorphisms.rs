//! Explicit enumeration of color-preserving automorphisms.
//!
//! This is a plain backtracking search over vertex images and shares no
//! code with the canonical-code machinery, so it can serve as an oracle
//! for [`fix_report`](super::fix_report). Candidates are pruned by simple
//! invariants (distance to the center, size, height and color content of
//! the hanging subtree) that every color-preserving automorphism keeps.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::tree::Tree;

/// A vertex permutation: `perm[v]` is the image of `v`.
pub type Permutation = Vec<usize>;

/// All color-preserving automorphisms of `tree`, identity included.
///
/// Fails with `LimitExceeded` as soon as more than `limit` are found.
pub fn enumerate_automorphisms(
    tree: &Tree,
    col: &Coloring,
    limit: u64,
) -> Result<Vec<Permutation>> {
    enumerate_automorphisms_fixing(tree, col, limit, &[])
}

/// Color-preserving automorphisms that fix every vertex in `pinned`.
pub fn enumerate_automorphisms_fixing(
    tree: &Tree,
    col: &Coloring,
    limit: u64,
    pinned: &[usize],
) -> Result<Vec<Permutation>> {
    col.check_total(tree.n())?;
    for &p in pinned {
        tree.check_vertex(p)?;
    }
    let n = tree.n();
    let order = tree.bfs_order(0);
    let mut parent = vec![usize::MAX; n];
    for &u in &order {
        for &w in tree.neighbors(u) {
            if w != 0 && parent[w] == usize::MAX && w != parent[u] {
                parent[w] = u;
            }
        }
    }
    let invariant = invariants(tree, col);
    let mut is_pinned = vec![false; n];
    for &p in pinned {
        is_pinned[p] = true;
    }
    let mut search = Search {
        tree,
        col,
        order: &order,
        parent: &parent,
        pinned: &is_pinned,
        invariant: &invariant,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        found: Vec::new(),
        limit,
    };
    search.extend(0)?;
    for perm in &search.found {
        debug_assert!(is_color_automorphism(tree, col, perm));
        if !is_color_automorphism(tree, col, perm) {
            return Err(Error::BadParams(
                "search produced a non-automorphism".into(),
            ));
        }
    }
    Ok(search.found)
}

/// `(distance to the center, size, height, color-content hash)` of the
/// subtree hanging below a vertex when the tree is rooted at its center.
type Invariant = (usize, usize, usize, u64);

fn invariants(tree: &Tree, col: &Coloring) -> Vec<Invariant> {
    let n = tree.n();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = std::collections::VecDeque::new();
    for c in tree.center().vertices() {
        dist[c] = 0;
        queue.push_back(c);
    }
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in tree.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mix = |x: u64| {
        let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    };
    let mut size = vec![1usize; n];
    let mut height = vec![0usize; n];
    let mut hash: Vec<u64> = (0..n).map(|v| mix(u64::from(col.color(v)))).collect();
    for &u in order.iter().rev() {
        let p = parent[u];
        if p != usize::MAX {
            size[p] += size[u];
            height[p] = height[p].max(height[u] + 1);
            hash[p] = hash[p].wrapping_add(hash[u]);
        }
    }
    (0..n)
        .map(|v| (dist[v], size[v], height[v], hash[v]))
        .collect()
}

struct Search<'a> {
    tree: &'a Tree,
    col: &'a Coloring,
    order: &'a [usize],
    parent: &'a [usize],
    pinned: &'a [bool],
    invariant: &'a [Invariant],
    image: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Permutation>,
    limit: u64,
}

impl Search<'_> {
    fn extend(&mut self, i: usize) -> Result<()> {
        if i == self.order.len() {
            if self.found.len() as u64 >= self.limit {
                return Err(Error::LimitExceeded(self.limit));
            }
            self.found.push(self.image.clone());
            return Ok(());
        }
        let u = self.order[i];
        let candidates: Vec<usize> = if i == 0 {
            (0..self.tree.n()).collect()
        } else {
            self.tree.neighbors(self.image[self.parent[u]]).to_vec()
        };
        for w in candidates {
            if self.used[w]
                || self.col.color(w) != self.col.color(u)
                || self.tree.degree(w) != self.tree.degree(u)
                || self.invariant[w] != self.invariant[u]
                || (self.pinned[u] && w != u)
                || (self.pinned[w] && w != u)
            {
                continue;
            }
            self.image[u] = w;
            self.used[w] = true;
            self.extend(i + 1)?;
            self.used[w] = false;
        }
        self.image[u] = usize::MAX;
        Ok(())
    }
}

/// Checks bijectivity, edge preservation and color preservation.
pub fn is_color_automorphism(tree: &Tree, col: &Coloring, perm: &[usize]) -> bool {
    let n = tree.n();
    if perm.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &w in perm {
        if w >= n || hit[w] {
            return false;
        }
        hit[w] = true;
    }
    (0..n).all(|v| col.get(v) == col.get(perm[v]))
        && tree.edges().all(|(u, v)| tree.has_edge(perm[u], perm[v]))
}

pub fn is_identity(perm: &[usize]) -> bool {
    perm.iter().enumerate().all(|(v, &w)| v == w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::fixtures;

    /// All n! maps filtered by edge and color preservation.
    fn brute_force(tree: &Tree, col: &Coloring) -> Vec<Permutation> {
        fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for w in 0..n {
                if !cur.contains(&w) {
                    cur.push(w);
                    rec(n, cur, out);
                    cur.pop();
                }
            }
        }
        let mut all = Vec::new();
        rec(tree.n(), &mut Vec::new(), &mut all);
        all.into_iter()
            .filter(|p| is_color_automorphism(tree, col, p))
            .collect()
    }

    #[test]
    fn monochrome_star_has_six() {
        let t = fixtures::star(3);
        let col = Coloring::monochrome(4);
        let mut auts = enumerate_automorphisms(&t, &col, 100).unwrap();
        auts.sort();
        let mut oracle = brute_force(&t, &col);
        oracle.sort();
        assert_eq!(auts.len(), 6);
        assert_eq!(auts, oracle);
        assert!(auts.iter().any(|p| is_identity(p)));
    }

    #[test]
    fn limit_is_enforced() {
        let t = fixtures::star(4);
        assert_eq!(
            enumerate_automorphisms(&t, &Coloring::monochrome(5), 23),
            Err(Error::LimitExceeded(23))
        );
        assert_eq!(
            enumerate_automorphisms(&t, &Coloring::monochrome(5), 24)
                .unwrap()
                .len(),
            24
        );
    }

    #[test]
    fn distinguishing_coloring_leaves_identity() {
        let t = fixtures::star(3);
        let col = Coloring::from_colors(3, vec![0, 0, 1, 2]).unwrap();
        assert_eq!(
            enumerate_automorphisms(&t, &col, 10).unwrap(),
            vec![vec![0, 1, 2, 3]]
        );
    }

    #[test]
    fn pins_restrict_the_group() {
        let t = fixtures::star(3);
        let col = Coloring::monochrome(4);
        let auts = enumerate_automorphisms_fixing(&t, &col, 100, &[1]).unwrap();
        assert_eq!(auts.len(), 2);
        assert!(auts.iter().all(|p| p[1] == 1));
    }

    #[test]
    fn matches_brute_force_on_small_random_trees() {
        for seed in 0..30 {
            let t = crate::tree::gen_random_tree(1 + (seed as usize % 7), 3, seed).unwrap();
            let colors = (0..t.n()).map(|v| ((v as u64 + seed) % 2) as u32).collect();
            let col = Coloring::from_colors(2, colors).unwrap();
            let mut a = enumerate_automorphisms(&t, &col, 10_000).unwrap();
            a.sort();
            let mut b = brute_force(&t, &col);
            b.sort();
            assert_eq!(a, b, "seed {seed}");
        }
    }
}
