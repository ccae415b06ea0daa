//! Finite trees on vertices `0..n`, their centers and rooted views.
//!
//! A [`Tree`] is immutable once built. Structural queries that depend on a
//! root (spheres, children, `T_u` subtrees, heights) live on [`RootedView`].

mod gen;
mod rooted;

pub mod fixtures;

pub use gen::gen_random_tree;
pub use rooted::{root_at, CenterLocus, RootedView};

use std::collections::VecDeque;

use crate::error::{Error, NotATreeReason, Result};

/// An undirected tree on vertices `0..n` stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// The tree with one vertex and no edges.
    pub fn singleton() -> Tree {
        Tree {
            adj: vec![Vec::new()],
        }
    }

    /// Builds a tree on `n` vertices from an edge set, rejecting anything
    /// that is not connected and acyclic.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::InfeasibleParams(
                "a tree needs at least one vertex".into(),
            ));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::NotATree(NotATreeReason::Cycle));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::NotATree(NotATreeReason::DuplicateEdge(
                    u.min(w[0]),
                    u.max(w[0]),
                )));
            }
        }
        let tree = Tree { adj };
        let reached = tree.bfs_order(0).len();
        if reached != n {
            return Err(Error::NotATree(NotATreeReason::Disconnected));
        }
        if edges.len() != n - 1 {
            // connected with too many edges
            return Err(Error::NotATree(NotATreeReason::Cycle));
        }
        Ok(tree)
    }

    /// Parses the line-oriented edge-list format: one `u v` pair per line,
    /// blank lines and `#` comments ignored. A `# n=<N>` comment, when
    /// present, declares the vertex count; an input without edges and
    /// without that declaration is the single-vertex tree.
    pub fn parse_edge_list(text: &str) -> Result<Tree> {
        let mut edges = Vec::new();
        let mut declared: Option<usize> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(n) = parse_header(comment) {
                    let n = n.map_err(|msg| Error::BadFormat { line: line_no, msg })?;
                    declared = Some(n);
                }
                continue;
            }
            let line = match line.find('#') {
                Some(pos) => line[..pos].trim(),
                None => line,
            };
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let mut next = |what: &str| -> Result<usize> {
                let tok = tokens.next().ok_or_else(|| Error::BadFormat {
                    line: line_no,
                    msg: format!("missing {what} vertex"),
                })?;
                tok.parse::<usize>().map_err(|_| Error::BadFormat {
                    line: line_no,
                    msg: format!("not a vertex id: {tok:?}"),
                })
            };
            let u = next("first")?;
            let v = next("second")?;
            if let Some(extra) = tokens.next() {
                return Err(Error::BadFormat {
                    line: line_no,
                    msg: format!("unexpected token {extra:?}"),
                });
            }
            edges.push((u, v));
        }

        let max_id = edges.iter().map(|&(u, v)| u.max(v)).max();
        let n = match (max_id, declared) {
            (None, None) => 1,
            (None, Some(n)) => n,
            (Some(m), None) => m + 1,
            (Some(m), Some(n)) => {
                if m >= n {
                    return Err(Error::VertexOutOfRange { vertex: m, n });
                }
                n
            }
        };
        if n == 0 {
            return Err(Error::BadFormat {
                line: 1,
                msg: "n=0 declared".into(),
            });
        }
        let mut seen = vec![false; n];
        if edges.is_empty() {
            seen[0] = true;
        }
        for &(u, v) in &edges {
            seen[u] = true;
            seen[v] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::NonContiguousIds { missing });
        }
        Tree::from_edges(n, &edges)
    }

    /// Serializes to the edge-list format, with a `# n=<N>` header and
    /// edges listed as `u v` with `u < v` in ascending order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# n={}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_valence(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Vertices in breadth-first order from `start`.
    pub fn bfs_order(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut order = Vec::with_capacity(self.n());
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Distances from `start` to every vertex.
    pub fn distances_from(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[start] = 0;
        for u in self.bfs_order(start) {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                }
            }
        }
        dist
    }

    /// Center by repeated leaf peeling.
    pub fn center(&self) -> CenterLocus {
        let n = self.n();
        if n == 1 {
            return CenterLocus::Vertex(0);
        }
        let mut degree: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                degree[leaf] = 0;
                for &w in &self.adj[leaf] {
                    if degree[w] > 0 {
                        degree[w] -= 1;
                        if degree[w] == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            layer = next;
        }
        let mut left: Vec<usize> = (0..n).filter(|&v| degree[v] > 0).collect();
        if left.is_empty() {
            left = layer;
        }
        left.sort_unstable();
        match left.as_slice() {
            [v] => CenterLocus::Vertex(*v),
            [u, v] => CenterLocus::Edge(*u, *v),
            _ => unreachable!("leaf peeling leaves one or two vertices"),
        }
    }
}

fn parse_header(comment: &str) -> Option<std::result::Result<usize, String>> {
    let rest = comment.trim().strip_prefix("n=")?;
    let token = rest.split_whitespace().next().unwrap_or("");
    Some(
        token
            .parse::<usize>()
            .map_err(|_| format!("bad vertex count {token:?}")),
    )
}
