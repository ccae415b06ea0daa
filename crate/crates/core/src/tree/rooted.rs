use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Tree;
use crate::error::{Error, Result};
use crate::threshold::RThreshold;

/// The center of a finite tree: one vertex, or the two ends of one edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CenterLocus {
    Vertex(usize),
    /// Endpoints in ascending order.
    Edge(usize, usize),
}

impl CenterLocus {
    pub fn vertices(&self) -> Vec<usize> {
        match *self {
            CenterLocus::Vertex(v) => vec![v],
            CenterLocus::Edge(u, v) => vec![u, v],
        }
    }
}

/// A tree arranged in spheres around one root vertex, or around both
/// endpoints of a central edge.
///
/// With two roots the joining edge is dropped: each endpoint roots its own
/// half and both sit at depth 0.
#[derive(Debug, Clone)]
pub struct RootedView<'t> {
    tree: &'t Tree,
    roots: Vec<usize>,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    children: Vec<Vec<usize>>,
    height: Vec<usize>,
    order: Vec<usize>,
}

/// Roots `tree` at a center locus or an explicit vertex (`CenterLocus::Vertex`).
pub fn root_at(tree: &Tree, locus: CenterLocus) -> Result<RootedView<'_>> {
    match locus {
        CenterLocus::Vertex(v) => {
            tree.check_vertex(v)?;
            Ok(RootedView::build(tree, vec![v]))
        }
        CenterLocus::Edge(u, v) => {
            tree.check_vertex(u)?;
            tree.check_vertex(v)?;
            if !tree.has_edge(u, v) {
                return Err(Error::BadParams(format!("{u} and {v} are not adjacent")));
            }
            Ok(RootedView::build(tree, vec![u.min(v), u.max(v)]))
        }
    }
}

impl<'t> RootedView<'t> {
    /// Roots the tree at its center.
    pub fn at_center(tree: &'t Tree) -> RootedView<'t> {
        let roots = tree.center().vertices();
        RootedView::build(tree, roots)
    }

    fn build(tree: &'t Tree, roots: Vec<usize>) -> RootedView<'t> {
        let n = tree.n();
        let mut parent = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        let mut children = vec![Vec::new(); n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::new();
        for &r in &roots {
            depth[r] = 0;
            queue.push_back(r);
        }
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in tree.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = Some(u);
                    children[u].push(w);
                    queue.push_back(w);
                }
            }
        }
        let mut height = vec![0; n];
        for &u in order.iter().rev() {
            if let Some(p) = parent[u] {
                height[p] = height[p].max(height[u] + 1);
            }
        }
        RootedView {
            tree,
            roots,
            parent,
            depth,
            children,
            height,
            order,
        }
    }

    pub fn tree(&self) -> &'t Tree {
        self.tree
    }

    pub fn n(&self) -> usize {
        self.tree.n()
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn locus(&self) -> CenterLocus {
        match self.roots.as_slice() {
            [v] => CenterLocus::Vertex(*v),
            [u, v] => CenterLocus::Edge(*u, *v),
            _ => unreachable!(),
        }
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Sphere index: distance to the nearest root.
    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Up-neighbors of `v`, ascending by id.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Vertices in breadth-first order, roots first.
    pub fn bfs_order(&self) -> &[usize] {
        &self.order
    }

    /// Vertices of the sphere at distance `n` from the roots.
    pub fn sphere(&self, n: usize) -> Vec<usize> {
        self.order
            .iter()
            .copied()
            .filter(|&v| self.depth[v] == n)
            .collect()
    }

    /// Vertices of the ball of radius `n` around the roots.
    pub fn ball(&self, n: usize) -> Vec<usize> {
        self.order
            .iter()
            .copied()
            .filter(|&v| self.depth[v] <= n)
            .collect()
    }

    /// Siblings of `v` (same down-neighbor), excluding `v` itself.
    pub fn siblings(&self, v: usize) -> Vec<usize> {
        match self.parent[v] {
            Some(p) => self.children[p]
                .iter()
                .copied()
                .filter(|&w| w != v)
                .collect(),
            None => Vec::new(),
        }
    }

    /// `u` together with all its descendants, in preorder.
    pub fn subtree(&self, u: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            out.push(x);
            stack.extend(self.children[x].iter().rev());
        }
        out
    }

    /// Largest distance from `u` to a leaf of `T_u`; 0 when `u` has no children.
    pub fn max_leaf_depth(&self, u: usize) -> usize {
        self.height[u]
    }

    /// Whether `T_u` contains a leaf at distance at least `r` from `u`.
    pub fn distance_condition(&self, u: usize, r: &RThreshold) -> bool {
        r.admits(self.height[u])
    }

    /// The downward path from `u` to a deepest leaf of `T_u`, descending
    /// through the smallest id among children of maximal height.
    pub fn longest_path(&self, u: usize) -> Vec<usize> {
        let mut path = vec![u];
        let mut cur = u;
        while let Some(&next) = self.children[cur]
            .iter()
            .find(|&&c| self.height[c] + 1 == self.height[cur])
        {
            path.push(next);
            cur = next;
        }
        path
    }
}
