//! Colorings of finite trees that fix every vertex far enough from the
//! leaves, and exact tools to check them.
//!
//! ```
//! use treedist::{color_main_algorithm, fix_report, fixtures};
//!
//! let tree = fixtures::valence_ten_spider();
//! let (coloring, trace) = color_main_algorithm(&tree, 3).unwrap();
//! let report = fix_report(&tree, &coloring).unwrap();
//! assert!(tree.neighbors(0).iter().all(|&v| report.fixed[v]));
//! assert_eq!(trace.main_lines.len(), 10);
//! ```

pub mod coloring;
pub mod error;
pub mod symmetry;
pub mod threshold;
pub mod tree;
pub mod verifier;

pub use coloring::{
    color_distinct, color_fix_general, color_k_minus_1, color_main_algorithm,
    color_main_algorithm_with, color_one_ended, color_regular, AlgorithmTrace, Color, Coloring,
    Delegation, MainOptions, Rule,
};
pub use error::{Error, NotATreeReason, Result};
pub use symmetry::{
    canon_code, distinguishing_number, enumerate_automorphisms, fix_report, is_distinguishing,
    unfixed_vertices, CanonCode, FixReport,
};
pub use threshold::{ceil_r, main_r_bound, r_threshold, RThreshold};
pub use tree::{fixtures, gen_random_tree, root_at, CenterLocus, RootedView, Tree};
pub use verifier::{Budget, CampaignReport};
