use std::collections::HashMap;

use num_bigint::BigUint;
use serde::Serialize;

use super::canon::color_classes;
use crate::coloring::Coloring;
use crate::error::Result;
use crate::tree::{RootedView, Tree};

/// Orbits of the color-preserving automorphism group and its order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixReport {
    /// Orbit id per vertex; ids are dense and numbered in BFS order from the center.
    pub orbit: Vec<usize>,
    /// `fixed[v]` iff `v`'s orbit is a singleton.
    pub fixed: Vec<bool>,
    pub aut_count: BigUint,
}

#[derive(Serialize)]
struct FixReportJson<'a> {
    aut_count: String,
    orbit: &'a [usize],
    fixed: &'a [bool],
}

impl FixReport {
    pub fn num_fixed(&self) -> usize {
        self.fixed.iter().filter(|&&f| f).count()
    }

    pub fn unfixed(&self) -> Vec<usize> {
        (0..self.fixed.len()).filter(|&v| !self.fixed[v]).collect()
    }

    /// Another vertex in `v`'s orbit, if `v` is not fixed.
    pub fn orbit_mate(&self, v: usize) -> Option<usize> {
        (0..self.orbit.len()).find(|&w| w != v && self.orbit[w] == self.orbit[v])
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.orbit.iter().max().map_or(0, |m| m + 1)];
        for &o in &self.orbit {
            sizes[o] += 1;
        }
        sizes
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&FixReportJson {
            aut_count: self.aut_count.to_string(),
            orbit: &self.orbit,
            fixed: &self.fixed,
        })
        .expect("report serializes")
    }
}

/// Orbit partition and group order for the automorphisms of `tree` that
/// preserve a total coloring.
///
/// Every automorphism fixes the center. Below it, two vertices share an
/// orbit iff their parents do and their colored subtrees are isomorphic;
/// with an edge center the endpoints share an orbit iff their colored
/// halves are isomorphic.
pub fn fix_report(tree: &Tree, col: &Coloring) -> Result<FixReport> {
    col.check_total(tree.n())?;
    let rv = RootedView::at_center(tree);
    let class = color_classes(&rv, col);
    let n = tree.n();

    let mut orbit = vec![usize::MAX; n];
    let mut keys: HashMap<(usize, u32), usize> = HashMap::new();
    let (mut next, swap) = match *rv.roots() {
        [r] => {
            orbit[r] = 0;
            (1, false)
        }
        [a, b] => {
            let swap = class[a] == class[b];
            orbit[a] = 0;
            orbit[b] = if swap { 0 } else { 1 };
            (orbit[b] + 1, swap)
        }
        _ => unreachable!(),
    };
    for &u in rv.bfs_order() {
        let Some(p) = rv.parent(u) else { continue };
        let id = *keys.entry((orbit[p], class[u])).or_insert_with(|| {
            next += 1;
            next - 1
        });
        orbit[u] = id;
    }

    let mut aut_count = BigUint::from(if swap { 2u32 } else { 1u32 });
    for u in 0..n {
        let mut mult: HashMap<u32, u32> = HashMap::new();
        for &c in rv.children(u) {
            *mult.entry(class[c]).or_insert(0) += 1;
        }
        for m in mult.into_values() {
            for f in 2..=m {
                aut_count *= f;
            }
        }
    }

    let mut size = vec![0usize; next];
    for &o in &orbit {
        size[o] += 1;
    }
    let fixed = orbit.iter().map(|&o| size[o] == 1).collect();
    Ok(FixReport {
        orbit,
        fixed,
        aut_count,
    })
}

/// Whether the identity is the only automorphism preserving `col`.
pub fn is_distinguishing(tree: &Tree, col: &Coloring) -> Result<bool> {
    Ok(fix_report(tree, col)?.aut_count == BigUint::from(1u32))
}

/// Vertices moved by some color-preserving automorphism.
pub fn unfixed_vertices(tree: &Tree, col: &Coloring) -> Result<Vec<usize>> {
    Ok(fix_report(tree, col)?.unfixed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::tree::fixtures;

    fn big(n: u32) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn monochrome_star() {
        let t = fixtures::star(3);
        let rep = fix_report(&t, &Coloring::monochrome(4)).unwrap();
        assert_eq!(rep.aut_count, big(6));
        assert_eq!(rep.fixed, vec![true, false, false, false]);
    }

    #[test]
    fn rainbow_star_is_distinguished() {
        let t = fixtures::star(3);
        let col = Coloring::from_colors(3, vec![0, 0, 1, 2]).unwrap();
        let rep = fix_report(&t, &col).unwrap();
        assert_eq!(rep.aut_count, big(1));
        assert!(rep.fixed.iter().all(|&f| f));
        assert!(is_distinguishing(&t, &col).unwrap());
        let col = Coloring::from_colors(2, vec![0, 0, 0, 1]).unwrap();
        assert!(!is_distinguishing(&t, &col).unwrap());
        assert_eq!(unfixed_vertices(&t, &col).unwrap(), vec![1, 2]);
    }

    #[test]
    fn even_path_reflection() {
        let t = fixtures::path(4);
        let rep = fix_report(&t, &Coloring::monochrome(4)).unwrap();
        assert_eq!(rep.aut_count, big(2));
        assert_eq!(rep.unfixed(), vec![0, 1, 2, 3]);
        let col = Coloring::from_colors(2, vec![0, 0, 1, 0]).unwrap();
        assert!(is_distinguishing(&t, &col).unwrap());
    }

    #[test]
    fn singleton() {
        let t = Tree::singleton();
        assert!(is_distinguishing(&t, &Coloring::monochrome(1)).unwrap());
    }

    #[test]
    fn partial_coloring_rejected() {
        let t = fixtures::path(3);
        let col = Coloring::uncolored(3, 2);
        assert_eq!(fix_report(&t, &col), Err(Error::PartialColoring(0)));
    }

    #[test]
    fn big_group_order() {
        // complete (1,3)-tree of depth 2: 3! * (2!)^3 = 48
        let t = fixtures::complete_tree(3, 2);
        let rep = fix_report(&t, &Coloring::monochrome(t.n())).unwrap();
        assert_eq!(rep.aut_count, big(48));
    }
}
