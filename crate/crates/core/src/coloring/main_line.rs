//! The sphere-by-sphere coloring with main lines.
//!
//! Vertices are colored top-down from the center. Siblings that satisfy
//! the distance condition are spread over the palette as evenly as
//! possible; those that still share a color and look alike get a main line
//! each, a longest downward path carrying a distinct base-`c` digit string.
//! The other up-neighbors along a main line are colored so the line can be
//! read back from the colors alone, which separates the twins.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{
    color_distinct, color_k_minus_1, optimal_coloring, reversed_base_c_sequence, Color, Coloring,
};
use crate::error::{Error, Result};
use crate::symmetry::{subtree_classes, ClassTable};
use crate::threshold::{ceil_r, r_threshold, RThreshold};
use crate::tree::{root_at, CenterLocus, RootedView, Tree};

/// Which step assigned a vertex its color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rule {
    Root,
    Step2Default,
    Step3Optimal,
    /// Index into [`AlgorithmTrace::main_lines`].
    MainLine(usize),
    Step4Case1,
    Step4Case1NoBranch,
    Step4Case2,
    Step4Branching,
    LemmaRule,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainLine {
    /// `[x, l_1, ..., l_R]`: the twin `x` and the `R` line vertices below it.
    pub vertices: Vec<usize>,
    /// Colors of `l_1..l_R`.
    pub sequence: Vec<Color>,
    /// Lines sharing a group separate twins from one another.
    pub group: usize,
    /// Position of `x` among its twins.
    pub index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BatchKind {
    Step3,
    Step4Case2,
    Step4Branching,
}

/// Siblings colored together by one optimal coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SiblingBatch {
    pub parent: usize,
    pub kind: BatchKind,
    pub members: Vec<usize>,
}

/// Which construction produced the coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Delegation {
    MainLines,
    /// `c >= k`: siblings all get different colors.
    Distinct,
    /// `c = k - 1`.
    KMinus1,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgorithmTrace {
    pub rules: Vec<Rule>,
    pub main_lines: Vec<MainLine>,
    pub batches: Vec<SiblingBatch>,
    pub delegation: Delegation,
    pub threshold: RThreshold,
}

#[derive(Serialize)]
struct TraceJson<'a> {
    rules: &'a [Rule],
    main_lines: Vec<&'a [usize]>,
}

impl AlgorithmTrace {
    pub fn to_json(&self) -> String {
        let doc = TraceJson {
            rules: &self.rules,
            main_lines: self
                .main_lines
                .iter()
                .map(|l| l.vertices.as_slice())
                .collect(),
        };
        serde_json::to_string(&doc).expect("trace serializes")
    }

    /// Edges `(parent, child)` lying on some main line.
    pub fn main_line_edges(&self) -> Vec<(usize, usize)> {
        self.main_lines
            .iter()
            .flat_map(|l| l.vertices.windows(2).map(|w| (w[0], w[1])))
            .collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MainOptions {
    /// Start from this vertex instead of the center. Only used when the
    /// main-line construction runs; nothing is guaranteed for it.
    pub root: Option<usize>,
}

pub fn color_main_algorithm(tree: &Tree, c: u32) -> Result<(Coloring, AlgorithmTrace)> {
    color_main_algorithm_with(tree, c, &MainOptions::default())
}

pub fn color_main_algorithm_with(
    tree: &Tree,
    c: u32,
    opts: &MainOptions,
) -> Result<(Coloring, AlgorithmTrace)> {
    let k = tree.max_valence();
    let threshold = r_threshold(c, k)?;
    let delegated = |col: Coloring, delegation| {
        let trace = AlgorithmTrace {
            rules: vec![Rule::LemmaRule; tree.n()],
            main_lines: Vec::new(),
            batches: Vec::new(),
            delegation,
            threshold,
        };
        (col, trace)
    };
    if c as usize >= k {
        return Ok(delegated(color_distinct(tree, c)?, Delegation::Distinct));
    }
    if c as usize + 1 == k {
        let mut col = color_k_minus_1(tree)?;
        col.set_num_colors(c);
        return Ok(delegated(col, Delegation::KMinus1));
    }

    let rv = match opts.root {
        Some(r) => root_at(tree, CenterLocus::Vertex(r))?,
        None => RootedView::at_center(tree),
    };
    let mut run = Run {
        rv: &rv,
        c,
        len: ceil_r(c, k)?,
        threshold,
        col: Coloring::uncolored(tree.n(), c),
        rules: vec![None; tree.n()],
        main_lines: Vec::new(),
        groups: 0,
        batches: Vec::new(),
        stack: Vec::new(),
    };
    run.execute()?;
    let rules = run
        .rules
        .into_iter()
        .map(|r| r.expect("every vertex colored"))
        .collect();
    let trace = AlgorithmTrace {
        rules,
        main_lines: run.main_lines,
        batches: run.batches,
        delegation: Delegation::MainLines,
        threshold,
    };
    Ok((run.col, trace))
}

/// Step 4 work: color the up-neighbors of `at` other than `main`.
struct Step4 {
    at: usize,
    main: usize,
}

struct Run<'a, 't> {
    rv: &'a RootedView<'t>,
    c: u32,
    /// Main-line length `R = ceil(r(c, k))`.
    len: usize,
    threshold: RThreshold,
    col: Coloring,
    rules: Vec<Option<Rule>>,
    main_lines: Vec<MainLine>,
    groups: usize,
    batches: Vec<SiblingBatch>,
    stack: Vec<Step4>,
}

impl Run<'_, '_> {
    fn paint(&mut self, v: usize, color: Color, rule: Rule) {
        debug_assert!(self.rules[v].is_none(), "vertex {v} colored twice");
        self.col.set(v, color);
        self.rules[v] = Some(rule);
    }

    fn dc(&self, v: usize) -> bool {
        self.rv.distance_condition(v, &self.threshold)
    }

    fn execute(&mut self) -> Result<()> {
        let rv = self.rv;
        match *rv.roots() {
            [r] => self.paint(r, 0, Rule::Root),
            [a, b] => {
                self.paint(a, 1, Rule::Root);
                self.paint(b, 0, Rule::Root);
            }
            _ => unreachable!(),
        }
        for &p in rv.bfs_order() {
            let kids = rv.children(p);
            if kids.is_empty() || self.col.is_colored(kids[0]) {
                continue;
            }
            let (near, far): (Vec<usize>, Vec<usize>) = kids.iter().partition(|&&v| !self.dc(v));
            for v in near {
                self.paint(v, 0, Rule::Step2Default);
            }
            if !far.is_empty() {
                let palette: Vec<Color> = (0..self.c).collect();
                let colors = optimal_coloring(far.len(), &palette, false)?;
                for (&v, color) in far.iter().zip(colors) {
                    self.paint(v, color, Rule::Step3Optimal);
                }
                self.batch(p, BatchKind::Step3, far)?;
            }
            while let Some(task) = self.stack.pop() {
                self.step4(task)?;
            }
        }
        Ok(())
    }

    /// Records a sibling batch and gives main lines to its indistinguishable
    /// same-colored members that satisfy the distance condition.
    fn batch(&mut self, parent: usize, kind: BatchKind, members: Vec<usize>) -> Result<()> {
        let far: Vec<usize> = members.iter().copied().filter(|&v| self.dc(v)).collect();
        self.batches.push(SiblingBatch {
            parent,
            kind,
            members,
        });
        let classes = subtree_classes(self.rv, &self.col, &far, &mut ClassTable::new());
        let mut groups: BTreeMap<(Color, u32), Vec<usize>> = BTreeMap::new();
        for &v in &far {
            groups
                .entry((self.col.color(v), classes[&v]))
                .or_default()
                .push(v);
        }
        for group in groups.into_values().filter(|g| g.len() > 1) {
            let id = self.groups;
            self.groups += 1;
            for (index, &x) in group.iter().enumerate() {
                self.main_line(x, id, index)?;
            }
        }
        Ok(())
    }

    fn sequence(&self, index: usize) -> Result<Vec<Color>> {
        if self.c == 2 {
            // The last digit is kept 0 so that it differs from the all-1
            // colors along Case 1 segments.
            let mut seq = reversed_base_c_sequence(index, self.len - 1, 2)?;
            seq.push(0);
            Ok(seq)
        } else {
            reversed_base_c_sequence(index, self.len, self.c)
        }
    }

    fn main_line(&mut self, x: usize, group: usize, index: usize) -> Result<()> {
        let sequence = self.sequence(index)?;
        let path = self.rv.longest_path(x);
        if path.len() <= self.len {
            return Err(Error::BadParams(format!(
                "main line from {x} is shorter than {}",
                self.len
            )));
        }
        let vertices = path[..=self.len].to_vec();
        let id = self.main_lines.len();
        for (&v, &color) in vertices[1..].iter().zip(&sequence) {
            self.paint(v, color, Rule::MainLine(id));
        }
        for w in vertices.windows(2).rev() {
            self.stack.push(Step4 {
                at: w[0],
                main: w[1],
            });
        }
        self.main_lines.push(MainLine {
            vertices,
            sequence,
            group,
            index,
        });
        Ok(())
    }

    fn step4(&mut self, Step4 { at, main }: Step4) -> Result<()> {
        let rv = self.rv;
        let a = self.col.color(main);
        let others: Vec<usize> = rv
            .children(at)
            .iter()
            .copied()
            .filter(|&v| v != main)
            .collect();
        match others.len() {
            0 => {}
            1 => {
                let o = others[0];
                self.paint(o, (a + 1) % self.c, Rule::Step4Case1);
                if self.c == 2 {
                    self.case1_segment(o)?;
                }
            }
            _ => {
                let palette: Vec<Color> = (0..self.c).filter(|&x| x != a).collect();
                let colors = optimal_coloring(others.len(), &palette, true)?;
                for (&v, color) in others.iter().zip(colors) {
                    self.paint(v, color, Rule::Step4Case2);
                }
                self.batch(at, BatchKind::Step4Case2, others)?;
            }
        }
        Ok(())
    }

    /// Two colors: below a Case 1 vertex, color 1 down to the next
    /// branching and color the branching's up-neighbors.
    fn case1_segment(&mut self, top: usize) -> Result<()> {
        let rv = self.rv;
        let mut cur = top;
        while let [only] = *rv.children(cur) {
            self.paint(only, 1, Rule::Step4Case1NoBranch);
            cur = only;
        }
        let kids = rv.children(cur).to_vec();
        if kids.is_empty() {
            return Ok(());
        }
        let colors = if kids.len() <= 3 {
            vec![1; kids.len()]
        } else {
            optimal_coloring(kids.len(), &[0, 1], false)?
        };
        for (&v, color) in kids.iter().zip(colors) {
            self.paint(v, color, Rule::Step4Branching);
        }
        self.batch(cur, BatchKind::Step4Branching, kids)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::fix_report;
    use crate::tree::fixtures;

    fn guarantee_holds(t: &Tree, c: u32) -> bool {
        let (col, trace) = color_main_algorithm(t, c).unwrap();
        let rv = RootedView::at_center(t);
        let rep = fix_report(t, &col).unwrap();
        (0..t.n()).all(|v| !rv.distance_condition(v, &trace.threshold) || rep.fixed[v])
    }

    #[test]
    fn ten_spider_lines() {
        let t = fixtures::valence_ten_spider();
        let (col, trace) = color_main_algorithm(&t, 3).unwrap();
        assert_eq!(trace.delegation, Delegation::MainLines);
        assert_eq!(trace.main_lines.len(), 10);
        assert!(trace.main_lines.iter().all(|l| l.vertices.len() == 3));
        let mut by_color: BTreeMap<Color, Vec<Vec<Color>>> = BTreeMap::new();
        for l in &trace.main_lines {
            by_color
                .entry(col.color(l.vertices[0]))
                .or_default()
                .push(l.sequence.clone());
        }
        assert_eq!(
            by_color[&0],
            vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![0, 1]]
        );
        for seqs in by_color.values() {
            let mut d = seqs.clone();
            d.sort();
            d.dedup();
            assert_eq!(d.len(), seqs.len());
        }
        let rep = fix_report(&t, &col).unwrap();
        assert!(t.neighbors(0).iter().all(|&v| rep.fixed[v]));
    }

    #[test]
    fn delegations() {
        let (_, trace) = color_main_algorithm(&fixtures::path(6), 2).unwrap();
        assert_eq!(trace.delegation, Delegation::Distinct);
        let (col, trace) = color_main_algorithm(&fixtures::complete_tree(4, 2), 3).unwrap();
        assert_eq!(trace.delegation, Delegation::KMinus1);
        assert_eq!(col.num_colors(), 3);
        assert!(color_main_algorithm(&fixtures::path(3), 1).is_err());
    }

    #[test]
    fn complete_4_tree_two_colors() {
        assert!(guarantee_holds(&fixtures::complete_tree(4, 3), 2));
    }

    #[test]
    fn random_trees() {
        for seed in 0..200 {
            let t = crate::tree::gen_random_tree(
                10 + (seed as usize % 30),
                3 + (seed as usize % 6),
                seed,
            )
            .unwrap();
            for c in 2..=t.max_valence().max(2) as u32 {
                assert!(guarantee_holds(&t, c), "seed {seed} c {c}");
            }
        }
    }

    #[test]
    fn trace_json_shape() {
        let (_, trace) = color_main_algorithm(&fixtures::valence_ten_spider(), 3).unwrap();
        let v: serde_json::Value = serde_json::from_str(&trace.to_json()).unwrap();
        assert_eq!(v["rules"].as_array().unwrap().len(), 31);
        assert_eq!(v["main_lines"].as_array().unwrap().len(), 10);
    }
}
