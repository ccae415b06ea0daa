use std::collections::{HashSet, VecDeque};

use super::{Color, Coloring};
use crate::error::{Error, Result};
use crate::symmetry::{color_classes, shape_classes};
use crate::tree::{RootedView, Tree};

/// Colors everything on `top`'s side of the edge to `parent`, so that the
/// up-neighbors of each vertex get colors `0, 1, 2, ...` by ascending id.
/// `top` itself must already be colored.
fn color_away(tree: &Tree, top: usize, parent: Option<usize>, col: &mut Coloring) {
    let mut queue = VecDeque::from([(top, parent)]);
    while let Some((u, from)) = queue.pop_front() {
        let ups = tree
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| Some(w) != from);
        for (i, w) in ups.enumerate() {
            col.set(w, i as Color);
            queue.push_back((w, Some(u)));
        }
    }
}

fn check_valence(tree: &Tree, k: usize) -> Result<()> {
    if tree.max_valence() > k {
        return Err(Error::BadParams(format!(
            "maximal valence {} exceeds k = {k}",
            tree.max_valence()
        )));
    }
    Ok(())
}

/// A `(k-1)`-coloring under which every automorphism fixing `v` is the
/// identity: `v` gets 0 and the up-neighbors of every vertex, seen from
/// `v`, get pairwise different colors.
pub fn color_fix_general(tree: &Tree, v: usize, k: usize) -> Result<Coloring> {
    tree.check_vertex(v)?;
    check_valence(tree, k)?;
    if tree.degree(v) + 1 > k.max(1) {
        return Err(Error::BadParams(format!(
            "vertex {v} has valence {} but at most k-1 = {} is allowed",
            tree.degree(v),
            k.saturating_sub(1)
        )));
    }
    let mut col = Coloring::uncolored(tree.n(), (k as u32).saturating_sub(1).max(1));
    col.set(v, 0);
    color_away(tree, v, None, &mut col);
    Ok(col)
}

/// Gives every vertex a color that differs from all its siblings' colors,
/// rooted at the center. Needs `c >= max(k, 2)` colors.
///
/// A vertex center gets 0. An edge center `(a, b)` with `a < b` gets
/// `a = 1`, `b = 0`.
pub fn color_distinct(tree: &Tree, c: u32) -> Result<Coloring> {
    let k = tree.max_valence();
    if c < 2 || (c as usize) < k {
        return Err(Error::BadParams(format!(
            "distinct coloring needs c >= max(k, 2), got c={c} k={k}"
        )));
    }
    let rv = RootedView::at_center(tree);
    let mut col = Coloring::uncolored(tree.n(), c);
    match *rv.roots() {
        [r] => col.set(r, 0),
        [a, b] => {
            col.set(a, 1);
            col.set(b, 0);
        }
        _ => unreachable!(),
    }
    for &u in rv.bfs_order() {
        for (i, &w) in rv.children(u).iter().enumerate() {
            col.set(w, i as Color);
        }
    }
    Ok(col)
}

/// A `(k-1)`-coloring fixing every vertex except possibly one pair of
/// sibling leaves, where `k` is the maximal valence.
///
/// Trees with `k <= 2` get two colors, since one color cannot fix a path.
pub fn color_k_minus_1(tree: &Tree) -> Result<Coloring> {
    let k = tree.max_valence();
    let palette = (k as u32).saturating_sub(1).max(2);
    let rv = RootedView::at_center(tree);
    let mut col = Coloring::uncolored(tree.n(), palette);

    let r = match *rv.roots() {
        [a, b] => {
            col.set(a, 0);
            col.set(b, 1);
            color_away(tree, a, Some(b), &mut col);
            color_away(tree, b, Some(a), &mut col);
            return Ok(col);
        }
        [r] => r,
        _ => unreachable!(),
    };

    col.set(r, 0);
    let nbrs = rv.children(r);
    let shared = if nbrs.len() as u32 > palette {
        let shape = shape_classes(&rv);
        let pair = (0..nbrs.len())
            .flat_map(|i| (i + 1..nbrs.len()).map(move |j| (i, j)))
            .find(|&(i, j)| shape[nbrs[i]] != shape[nbrs[j]])
            .unwrap_or((0, 1));
        Some(pair)
    } else {
        None
    };

    let mut next = 0;
    for (i, &w) in nbrs.iter().enumerate() {
        let color = match shared {
            Some((p, q)) if i == p || i == q => 0,
            Some(_) => {
                next += 1;
                next
            }
            None => i as Color,
        };
        col.set(w, color);
        color_away(tree, w, Some(r), &mut col);
    }

    if let Some((p, q)) = shared {
        let (a, b) = (nbrs[p], nbrs[q]);
        let class = color_classes(&rv, &col);
        if class[a] == class[b] && !rv.children(b).is_empty() {
            recolor_one_leaf(&rv, b, &mut col);
        }
    }
    Ok(col)
}

/// Changes one leaf color inside `T_top`, which makes it non-isomorphic to
/// any colored copy of its former self.
///
/// Preferred are leaves with a color unused among their siblings, then
/// leaves that can copy a non-leaf sibling's color.
fn recolor_one_leaf(rv: &RootedView<'_>, top: usize, col: &mut Coloring) {
    let leaves: Vec<usize> = rv
        .subtree(top)
        .into_iter()
        .filter(|&v| rv.children(v).is_empty())
        .collect();
    let mut fallback = None;
    for &leaf in &leaves {
        let sibs = rv.siblings(leaf);
        let used: HashSet<Color> = sibs.iter().map(|&s| col.color(s)).collect();
        if let Some(free) =
            (0..col.num_colors()).find(|c| *c != col.color(leaf) && !used.contains(c))
        {
            col.set(leaf, free);
            return;
        }
        if fallback.is_none() {
            if let Some(&s) = sibs.iter().find(|&&s| !rv.children(s).is_empty()) {
                fallback = Some((leaf, col.color(s)));
            }
        }
    }
    let (leaf, color) = fallback.unwrap_or_else(|| {
        let leaf = leaves[0];
        (leaf, col.color(rv.siblings(leaf)[0]))
    });
    col.set(leaf, color);
}

/// The two-color scheme for trees whose valences are all 1 or `k`: every
/// non-leaf vertex ends up fixed.
///
/// The center is white (0) and the vertices next to it black (1). Among
/// same-colored non-leaf siblings, the `i`-th (ordered by shape, then id)
/// gets exactly `i` black up-neighbors.
pub fn color_regular(tree: &Tree) -> Result<Coloring> {
    let k = tree.max_valence();
    if let Some(v) = (0..tree.n()).find(|&v| tree.degree(v) != 1 && tree.degree(v) != k) {
        return Err(Error::NotRegularProfile {
            vertex: v,
            valence: tree.degree(v),
        });
    }
    let rv = RootedView::at_center(tree);
    let shape = shape_classes(&rv);
    let mut col = Coloring::uncolored(tree.n(), 2);
    match *rv.roots() {
        [r] => {
            col.set(r, 0);
            for &w in rv.children(r) {
                col.set(w, 1);
            }
        }
        [a, b] => {
            col.set(a, 0);
            col.set(b, 1);
            for &w in rv.children(a).iter().chain(rv.children(b)) {
                col.set(w, 1);
            }
        }
        _ => unreachable!(),
    }

    let mut pending: Vec<Vec<usize>> = rv
        .roots()
        .iter()
        .map(|&r| rv.children(r).to_vec())
        .collect();
    while let Some(batch) = pending.pop() {
        for color in 0..2 {
            let mut group: Vec<usize> = batch
                .iter()
                .copied()
                .filter(|&w| col.color(w) == color && !rv.children(w).is_empty())
                .collect();
            group.sort_by_key(|&w| (shape[w], w));
            for (pattern, &w) in group.iter().enumerate() {
                for (j, &x) in rv.children(w).iter().enumerate() {
                    col.set(x, Color::from(j < pattern));
                }
                pending.push(rv.children(w).to_vec());
            }
        }
    }
    Ok(col)
}

/// Colors a finite ray prefix `ray` (starting at a leaf) and everything
/// hanging off it with `max(k-1, 2)` colors, so that any automorphism
/// fixing the ray pointwise is the identity.
///
/// Ray vertices get 1. The off-ray neighbors of each ray vertex get
/// pairwise different colors other than 1, and each hanging tree below
/// them is colored as in [`color_fix_general`].
pub fn color_one_ended(tree: &Tree, ray: &[usize], k: usize) -> Result<Coloring> {
    check_valence(tree, k)?;
    let Some(&start) = ray.first() else {
        return Err(Error::BadRay("empty ray".into()));
    };
    for &v in ray {
        tree.check_vertex(v)?;
    }
    if tree.degree(start) > 1 {
        return Err(Error::BadRay(format!(
            "ray must start at a leaf, {start} has valence {}",
            tree.degree(start)
        )));
    }
    let mut on_ray = vec![false; tree.n()];
    for (i, &v) in ray.iter().enumerate() {
        if on_ray[v] {
            return Err(Error::BadRay(format!("vertex {v} repeats")));
        }
        on_ray[v] = true;
        if i > 0 && !tree.has_edge(ray[i - 1], v) {
            return Err(Error::BadRay(format!(
                "{} and {v} are not adjacent",
                ray[i - 1]
            )));
        }
    }

    let palette: Vec<Color> = (0..(k as u32).saturating_sub(1))
        .filter(|&c| c != 1)
        .collect();
    let mut col = Coloring::uncolored(tree.n(), (k as u32).saturating_sub(1).max(2));
    for &z in ray {
        col.set(z, 1);
    }
    for &z in ray {
        let off: Vec<usize> = tree
            .neighbors(z)
            .iter()
            .copied()
            .filter(|&w| !on_ray[w])
            .collect();
        if off.len() > palette.len() {
            return Err(Error::BadRay(format!(
                "ray vertex {z} has {} off-ray neighbors, at most k-2 = {} allowed",
                off.len(),
                palette.len()
            )));
        }
        for (&w, &color) in off.iter().zip(&palette) {
            col.set(w, color);
            color_away(tree, w, Some(z), &mut col);
        }
    }
    Ok(col)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::{enumerate_automorphisms_fixing, fix_report, is_distinguishing};
    use crate::tree::fixtures;

    #[test]
    fn fix_general_on_star_leaf() {
        let t = fixtures::star(3);
        let col = color_fix_general(&t, 1, 4).unwrap();
        let auts = enumerate_automorphisms_fixing(&t, &col, 100, &[1]).unwrap();
        assert_eq!(auts.len(), 1);
        assert!(color_fix_general(&t, 0, 3).is_err());
        let single = color_fix_general(&Tree::singleton(), 0, 2).unwrap();
        assert_eq!(single.to_vec(), vec![0]);
    }

    #[test]
    fn distinct_is_distinguishing() {
        for seed in 0..20 {
            let t = crate::tree::gen_random_tree(15, 4, seed).unwrap();
            let col = color_distinct(&t, 4).unwrap();
            assert!(is_distinguishing(&t, &col).unwrap());
        }
        assert!(color_distinct(&fixtures::star(4), 3).is_err());
    }

    #[test]
    fn k_minus_1_on_glued_stars() {
        let t = fixtures::glued_stars();
        let col = color_k_minus_1(&t).unwrap();
        assert_eq!(col.num_colors(), 2);
        let rep = fix_report(&t, &col).unwrap();
        let unfixed = rep.unfixed();
        assert_eq!(unfixed.len(), 2);
        assert!(unfixed.iter().all(|&v| t.is_leaf(v)));
    }

    #[test]
    fn k_minus_1_on_paths() {
        for n in 1..=9 {
            let t = fixtures::path(n);
            let col = color_k_minus_1(&t).unwrap();
            assert!(fix_report(&t, &col).unwrap().unfixed().len() <= 2, "P_{n}");
        }
    }

    #[test]
    fn regular_on_complete_trees() {
        for k in 3..=5 {
            for depth in 1..=3 {
                let t = fixtures::complete_tree(k, depth);
                let col = color_regular(&t).unwrap();
                let rep = fix_report(&t, &col).unwrap();
                assert!(
                    rep.unfixed().iter().all(|&v| t.is_leaf(v)),
                    "k={k} depth={depth}"
                );
            }
        }
        let k2 = fixtures::path(2);
        assert_eq!(color_regular(&k2).unwrap().to_vec(), vec![0, 1]);
        assert!(matches!(
            color_regular(&fixtures::spider(3, 2)),
            Err(Error::NotRegularProfile { .. })
        ));
    }

    #[test]
    fn one_ended_examples() {
        let p = fixtures::path(6);
        let ray: Vec<usize> = (0..6).collect();
        assert_eq!(color_one_ended(&p, &ray, 2).unwrap().to_vec(), vec![1; 6]);

        // ray 0-1-2 with two pendant leaves 3, 4 at vertex 1
        let t = Tree::from_edges(5, &[(0, 1), (1, 2), (1, 3), (1, 4)]).unwrap();
        let col = color_one_ended(&t, &[0, 1, 2], 4).unwrap();
        assert_eq!((col.color(3), col.color(4)), (0, 2));
        assert!(matches!(
            color_one_ended(&t, &[1, 2], 4),
            Err(Error::BadRay(_))
        ));
        assert!(matches!(
            color_one_ended(&t, &[0, 2], 4),
            Err(Error::BadRay(_))
        ));
        assert!(matches!(
            color_one_ended(&t, &[0, 1], 4),
            Err(Error::BadRay(_))
        ));
    }
}
