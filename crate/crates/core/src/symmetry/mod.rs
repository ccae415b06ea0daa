//! Ground truth about color-preserving automorphisms.
//!
//! [`fix_report`] works from canonical codes. [`enumerate_automorphisms`]
//! is a separate brute search used to cross-check it.

mod automorphisms;
mod canon;
mod distinguishing;
mod fix;

pub use automorphisms::{
    enumerate_automorphisms, enumerate_automorphisms_fixing, is_color_automorphism, is_identity,
    Permutation,
};
pub use canon::{canon_code, color_classes, shape_classes, subtree_classes, CanonCode, ClassTable};
pub use distinguishing::{
    distinguishing_coloring, distinguishing_number, find_distinguishing, SearchBudget,
};
pub use fix::{fix_report, is_distinguishing, unfixed_vertices, FixReport};
