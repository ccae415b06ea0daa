//! Vertex colorings and the constructions that produce them.
//!
//! [`Coloring`] is shared by every module. The submodules hold the sibling
//! coloring primitives, the lemma colorings and the main-line algorithm.

mod lemmas;
mod main_line;
mod primitives;

pub use lemmas::{
    color_distinct, color_fix_general, color_k_minus_1, color_one_ended, color_regular,
};
pub use main_line::{
    color_main_algorithm, color_main_algorithm_with, AlgorithmTrace, BatchKind, Delegation,
    MainLine, MainOptions, Rule, SiblingBatch,
};
pub use primitives::{optimal_coloring, reversed_base_c_sequence};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Color = u32;

/// A total or partial assignment of colors `0..num_colors` to vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    num_colors: u32,
    colors: Vec<Option<Color>>,
}

/// On-disk form: `{"num_colors": c, "colors": [...]}` with `-1` for uncolored.
#[derive(Debug, Serialize, Deserialize)]
struct ColoringJson {
    num_colors: u32,
    colors: Vec<i64>,
}

impl Coloring {
    /// All `n` vertices uncolored.
    pub fn uncolored(n: usize, num_colors: u32) -> Coloring {
        Coloring {
            num_colors,
            colors: vec![None; n],
        }
    }

    /// A total coloring; fails if some color is out of range.
    pub fn from_colors(num_colors: u32, colors: Vec<Color>) -> Result<Coloring> {
        if let Some(v) = colors.iter().position(|&c| c >= num_colors) {
            return Err(Error::BadParams(format!(
                "vertex {v} has color {} but num_colors is {num_colors}",
                colors[v]
            )));
        }
        Ok(Coloring {
            num_colors,
            colors: colors.into_iter().map(Some).collect(),
        })
    }

    /// Every vertex gets color 0.
    pub fn monochrome(n: usize) -> Coloring {
        Coloring {
            num_colors: 1,
            colors: vec![Some(0); n],
        }
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<Color> {
        self.colors[v]
    }

    /// Color of `v`; panics on an uncolored vertex.
    pub fn color(&self, v: usize) -> Color {
        self.colors[v].unwrap_or_else(|| panic!("vertex {v} is uncolored"))
    }

    pub fn is_colored(&self, v: usize) -> bool {
        self.colors[v].is_some()
    }

    pub fn set(&mut self, v: usize, color: Color) {
        assert!(
            color < self.num_colors,
            "color {color} out of range {}",
            self.num_colors
        );
        self.colors[v] = Some(color);
    }

    pub fn clear(&mut self, v: usize) {
        self.colors[v] = None;
    }

    /// Widens the palette; existing colors are unchanged.
    pub fn set_num_colors(&mut self, num_colors: u32) {
        assert!(self.colors.iter().flatten().all(|&c| c < num_colors));
        self.num_colors = num_colors;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// First uncolored vertex, if any.
    pub fn first_uncolored(&self) -> Option<usize> {
        self.colors.iter().position(Option::is_none)
    }

    /// Errors unless the coloring is total and sized for `n` vertices.
    pub fn check_total(&self, n: usize) -> Result<()> {
        if self.colors.len() != n {
            return Err(Error::ColoringSize {
                expected: n,
                got: self.colors.len(),
            });
        }
        match self.first_uncolored() {
            Some(v) => Err(Error::PartialColoring(v)),
            None => Ok(()),
        }
    }

    /// Colors of a total coloring.
    pub fn to_vec(&self) -> Vec<Color> {
        (0..self.len()).map(|v| self.color(v)).collect()
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn to_json(&self) -> String {
        let doc = ColoringJson {
            num_colors: self.num_colors,
            colors: self
                .colors
                .iter()
                .map(|c| c.map_or(-1, i64::from))
                .collect(),
        };
        serde_json::to_string(&doc).expect("coloring serializes")
    }

    pub fn from_json(text: &str) -> Result<Coloring> {
        let doc: ColoringJson =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let mut colors = Vec::with_capacity(doc.colors.len());
        for (v, &c) in doc.colors.iter().enumerate() {
            colors.push(match c {
                -1 => None,
                c if c >= 0 && c < i64::from(doc.num_colors) => Some(c as Color),
                c => {
                    return Err(Error::Json(format!(
                        "vertex {v}: color {c} outside 0..{}",
                        doc.num_colors
                    )))
                }
            });
        }
        Ok(Coloring {
            num_colors: doc.num_colors,
            colors,
        })
    }
}
