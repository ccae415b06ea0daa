//! Exact distinguishing numbers by symmetry-pruned search.
//!
//! A coloring of a tree rooted at its center is distinguishing iff every
//! colored subtree is rigid below its root and isomorphic siblings carry
//! pairwise different colored subtrees. Isomorphic siblings are
//! interchangeable, so the search never orders them: for a group of `m`
//! isomorphic siblings it picks an `m`-subset of the distinct colored
//! versions of their shape. Colored versions are enumerated once per shape
//! and only as many as the parent can use.

use std::collections::HashMap;
use std::rc::Rc;

use super::canon::{shape_classes, ClassTable};
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::tree::{RootedView, Tree};

/// Limits for [`distinguishing_number`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_vertices: usize,
    /// Colored subtree versions generated, summed over all color counts tried.
    pub max_steps: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 24,
            max_steps: 10_000_000,
        }
    }
}

/// Smallest `d <= max_colors` admitting a distinguishing `d`-coloring.
pub fn distinguishing_number(tree: &Tree, max_colors: u32, budget: &SearchBudget) -> Result<u32> {
    distinguishing_coloring(tree, max_colors, budget).map(|(d, _)| d)
}

/// Like [`distinguishing_number`], also returning a witness coloring.
pub fn distinguishing_coloring(
    tree: &Tree,
    max_colors: u32,
    budget: &SearchBudget,
) -> Result<(u32, Coloring)> {
    if tree.n() > budget.max_vertices {
        return Err(Error::SearchBudgetExceeded(format!(
            "{} vertices exceeds the search limit of {}",
            tree.n(),
            budget.max_vertices
        )));
    }
    let mut steps = 0;
    for d in 1..=max_colors {
        if let Some(col) = find_with(tree, d, budget, &mut steps)? {
            return Ok((d, col));
        }
    }
    Err(Error::NotFoundWithinMax(max_colors))
}

/// A distinguishing `d`-coloring if one exists.
pub fn find_distinguishing(tree: &Tree, d: u32, budget: &SearchBudget) -> Result<Option<Coloring>> {
    let mut steps = 0;
    find_with(tree, d, budget, &mut steps)
}

fn find_with(
    tree: &Tree,
    d: u32,
    budget: &SearchBudget,
    steps: &mut u64,
) -> Result<Option<Coloring>> {
    let rv = RootedView::at_center(tree);
    let mut solver = Solver::new(&rv, d, budget.max_steps, steps);
    let mut col = Coloring::uncolored(tree.n(), d.max(1));
    let found = match *rv.roots() {
        [r] => {
            let sols = solver.solve(r, 1)?;
            sols.first().map(|s| vec![(r, s.clone())])
        }
        [a, b] if solver.shape[a] == solver.shape[b] => {
            let sols = solver.solve(a, 2)?;
            (sols.len() >= 2).then(|| vec![(a, sols[0].clone()), (b, sols[1].clone())])
        }
        [a, b] => {
            let sa = solver.solve(a, 1)?.first().cloned();
            let sb = solver.solve(b, 1)?.first().cloned();
            sa.zip(sb).map(|(x, y)| vec![(a, x), (b, y)])
        }
        _ => unreachable!(),
    };
    *steps = solver.steps;
    let Some(assignments) = found else {
        return Ok(None);
    };
    for (v, sol) in assignments {
        solver.apply(v, &sol, &mut col);
    }
    Ok(Some(col))
}

/// One rigid colored version of a rooted shape. `kids` follow the
/// children's order sorted by `(shape, id)`.
#[derive(Debug)]
struct Version {
    class: u32,
    color: Color,
    kids: Vec<Rc<Version>>,
}

struct Memo {
    versions: Vec<Rc<Version>>,
    complete: bool,
}

struct Solver<'a, 't> {
    rv: &'a RootedView<'t>,
    shape: Vec<u32>,
    d: u32,
    table: ClassTable,
    memo: HashMap<u32, Memo>,
    steps: u64,
    max_steps: u64,
}

impl<'a, 't> Solver<'a, 't> {
    fn new(rv: &'a RootedView<'t>, d: u32, max_steps: u64, steps: &mut u64) -> Self {
        Solver {
            rv,
            shape: shape_classes(rv),
            d,
            table: ClassTable::new(),
            memo: HashMap::new(),
            steps: *steps,
            max_steps,
        }
    }

    fn sorted_children(&self, u: usize) -> Vec<usize> {
        let mut kids = self.rv.children(u).to_vec();
        kids.sort_by_key(|&c| (self.shape[c], c));
        kids
    }

    /// Up to `need` pairwise distinct rigid colored versions of `T_u`.
    fn solve(&mut self, u: usize, need: usize) -> Result<Vec<Rc<Version>>> {
        let key = self.shape[u];
        if let Some(m) = self.memo.get(&key) {
            if m.complete || m.versions.len() >= need {
                return Ok(m.versions.iter().take(need).cloned().collect());
            }
        }

        let kids = self.sorted_children(u);
        let mut groups: Vec<(usize, usize)> = Vec::new(); // (representative, size)
        for &c in &kids {
            match groups.last_mut() {
                Some((rep, m)) if self.shape[*rep] == self.shape[c] => *m += 1,
                _ => groups.push((c, 1)),
            }
        }
        let mut lists = Vec::with_capacity(groups.len());
        for &(rep, m) in &groups {
            let list = self.solve(rep, m + need - 1)?;
            if list.len() < m {
                self.memo.insert(
                    key,
                    Memo {
                        versions: Vec::new(),
                        complete: true,
                    },
                );
                return Ok(Vec::new());
            }
            lists.push(list);
        }

        let mut out = Vec::new();
        'colors: for color in 0..self.d {
            let mut combos: Vec<Vec<usize>> =
                groups.iter().map(|&(_, m)| (0..m).collect()).collect();
            loop {
                self.steps += 1;
                if self.steps > self.max_steps {
                    return Err(Error::SearchBudgetExceeded(format!(
                        "more than {} search steps",
                        self.max_steps
                    )));
                }
                let chosen: Vec<Rc<Version>> = combos
                    .iter()
                    .zip(&lists)
                    .flat_map(|(idx, list)| idx.iter().map(|&i| list[i].clone()))
                    .collect();
                let class = self
                    .table
                    .intern(color, chosen.iter().map(|v| v.class).collect());
                out.push(Rc::new(Version {
                    class,
                    color,
                    kids: chosen,
                }));
                if out.len() >= need {
                    break 'colors;
                }
                if !advance(&mut combos, &lists) {
                    break;
                }
            }
        }
        let complete = out.len() < need;
        self.memo.insert(
            key,
            Memo {
                versions: out.clone(),
                complete,
            },
        );
        Ok(out)
    }

    fn apply(&self, u: usize, version: &Version, col: &mut Coloring) {
        col.set(u, version.color);
        for (c, kid) in self.sorted_children(u).into_iter().zip(&version.kids) {
            self.apply(c, kid, col);
        }
    }
}

/// Advances the odometer of per-group index subsets; false when exhausted.
fn advance(combos: &mut [Vec<usize>], lists: &[Vec<Rc<Version>>]) -> bool {
    for (idx, list) in combos.iter_mut().zip(lists).rev() {
        if next_subset(idx, list.len()) {
            return true;
        }
        let m = idx.len();
        idx.clear();
        idx.extend(0..m);
    }
    false
}

/// Next `m`-subset of `0..len` in lexicographic order.
fn next_subset(idx: &mut [usize], len: usize) -> bool {
    let m = idx.len();
    for i in (0..m).rev() {
        if idx[i] < len - m + i {
            idx[i] += 1;
            for j in i + 1..m {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
