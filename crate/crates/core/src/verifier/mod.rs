//! Checks of the coloring guarantees against the automorphism oracles.
//!
//! Every check returns a [`CampaignReport`]. Failures carry enough data to
//! be rebuilt and re-run with [`replay`].

mod budget;
mod campaign;
mod combi;
mod table;

pub use budget::{Budget, BUDGET_ENV};
pub use campaign::{run_random_campaign, run_random_campaign_parallel};
pub use combi::{case_formula, combi_check, combi_oracle, lemma_bound, CombiCheck};
pub use table::{
    render_grid, render_table, render_table2, table2_check, table2_entry, TABLE2, TABLE2_C,
    TABLE2_K,
};

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize, Serializer};

use crate::coloring::{color_k_minus_1, color_main_algorithm, Coloring};
use crate::error::Result;
use crate::symmetry::{enumerate_automorphisms, fix_report, FixReport};
use crate::threshold::r_threshold;
use crate::tree::{gen_random_tree, RootedView, Tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    /// A vertex satisfying the distance condition is not fixed.
    MainGuarantee,
    /// The `(k-1)`-coloring leaves more than one sibling-leaf pair unfixed.
    LemmaKMinus1,
    /// The orbit computation disagrees with explicit enumeration.
    OracleMismatch,
    Table2,
}

/// One violated property with a witness.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    /// Seed of the generated tree, when the tree came from the generator.
    pub seed: Option<u64>,
    pub n: usize,
    /// Valence bound the tree was generated with, or its maximal valence.
    pub k: usize,
    pub c: Option<u32>,
    pub property: Property,
    /// Offending vertices: for the guarantee, an unfixed vertex and a vertex
    /// in its orbit.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CampaignReport {
    pub trials: usize,
    pub failures: Vec<Failure>,
    #[serde(rename = "elapsed_secs", serialize_with = "secs")]
    pub elapsed: Duration,
}

fn secs<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// Wall time is ignored.
impl PartialEq for CampaignReport {
    fn eq(&self, other: &Self) -> bool {
        self.trials == other.trials && self.failures == other.failures
    }
}

impl Eq for CampaignReport {}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub(crate) fn absorb(&mut self, other: CampaignReport) {
        self.failures.extend(other.failures);
    }
}

/// Fixed flags recomputed from the explicitly enumerated group.
fn enumerated_fixed(tree: &Tree, col: &Coloring, limit: u64) -> Result<Vec<bool>> {
    let auts = enumerate_automorphisms(tree, col, limit)?;
    Ok((0..tree.n())
        .map(|v| auts.iter().all(|p| p[v] == v))
        .collect())
}

/// The orbit report, cross-checked against enumeration when the group is
/// small enough to list. Disagreements are pushed as failures.
fn checked_report(
    tree: &Tree,
    col: &Coloring,
    budget: &Budget,
    c: Option<u32>,
    report: &mut CampaignReport,
) -> Result<FixReport> {
    let rep = fix_report(tree, col)?;
    if rep.aut_count <= BigUint::from(budget.max_automorphisms) {
        let fixed = enumerated_fixed(tree, col, budget.max_automorphisms)?;
        if let Some(v) = (0..tree.n()).find(|&v| fixed[v] != rep.fixed[v]) {
            report.failures.push(Failure {
                seed: None,
                n: tree.n(),
                k: tree.max_valence(),
                c,
                property: Property::OracleMismatch,
                witness: vec![v],
            });
        }
    }
    Ok(rep)
}

/// Runs the main algorithm with `c` colors and checks that every vertex
/// satisfying the distance condition is fixed.
pub fn verify_main_guarantee(tree: &Tree, c: u32, budget: &Budget) -> Result<CampaignReport> {
    budget.check_size(tree.n())?;
    let (col, _) = color_main_algorithm(tree, c)?;
    verify_coloring_guarantee(tree, &col, c, budget)
}

/// Checks an arbitrary total coloring against the guarantee for `c` colors.
pub fn verify_coloring_guarantee(
    tree: &Tree,
    col: &Coloring,
    c: u32,
    budget: &Budget,
) -> Result<CampaignReport> {
    let start = Instant::now();
    budget.check_size(tree.n())?;
    let k = tree.max_valence();
    let threshold = r_threshold(c, k)?;
    let mut report = CampaignReport {
        trials: 1,
        ..Default::default()
    };
    let rep = checked_report(tree, col, budget, Some(c), &mut report)?;
    let rv = RootedView::at_center(tree);
    for v in 0..tree.n() {
        if rv.distance_condition(v, &threshold) && !rep.fixed[v] {
            report.failures.push(Failure {
                seed: None,
                n: tree.n(),
                k,
                c: Some(c),
                property: Property::MainGuarantee,
                witness: vec![v, rep.orbit_mate(v).expect("unfixed vertex has a mate")],
            });
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Runs the `(k-1)`-coloring and checks that at most one pair of sibling
/// leaves stays unfixed.
pub fn verify_lemma_k_minus_1(tree: &Tree, budget: &Budget) -> Result<CampaignReport> {
    let start = Instant::now();
    budget.check_size(tree.n())?;
    let col = color_k_minus_1(tree)?;
    let mut report = CampaignReport {
        trials: 1,
        ..Default::default()
    };
    let rep = checked_report(tree, &col, budget, None, &mut report)?;
    let unfixed = rep.unfixed();
    let rv = RootedView::at_center(tree);
    let ok = match unfixed.as_slice() {
        [] => true,
        &[a, b] => {
            tree.is_leaf(a)
                && tree.is_leaf(b)
                && rv.parent(a).is_some()
                && rv.parent(a) == rv.parent(b)
        }
        _ => false,
    };
    if !ok {
        report.failures.push(Failure {
            seed: None,
            n: tree.n(),
            k: tree.max_valence(),
            c: Some(col.num_colors()),
            property: Property::LemmaKMinus1,
            witness: unfixed,
        });
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Rebuilds the tree behind a failure and re-runs its check. Returns
/// whether the violation shows up again.
pub fn replay(failure: &Failure, budget: &Budget) -> Result<bool> {
    if failure.property == Property::Table2 {
        return Ok(!table2_check().passed());
    }
    let Some(seed) = failure.seed else {
        return Err(crate::error::Error::BadParams(
            "failure has no seed to rebuild its tree from".into(),
        ));
    };
    let tree = gen_random_tree(failure.n, failure.k, seed)?;
    let report = match (failure.property, failure.c) {
        (Property::LemmaKMinus1, _) | (Property::OracleMismatch, None) => {
            verify_lemma_k_minus_1(&tree, budget)?
        }
        (_, Some(c)) => verify_main_guarantee(&tree, c, budget)?,
        (Property::MainGuarantee, None) => {
            return Err(crate::error::Error::BadParams(
                "guarantee failure without a color count".into(),
            ))
        }
        (Property::Table2, _) => unreachable!(),
    };
    Ok(report
        .failures
        .iter()
        .any(|f| f.property == failure.property && f.witness == failure.witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::fixtures;

    #[test]
    fn example_and_paths_pass() {
        let budget = Budget::default();
        assert!(
            verify_main_guarantee(&fixtures::valence_ten_spider(), 3, &budget)
                .unwrap()
                .passed()
        );
        for n in 1..=10 {
            assert!(verify_main_guarantee(&fixtures::path(n), 2, &budget)
                .unwrap()
                .passed());
        }
    }

    #[test]
    fn monochrome_fails_with_witness() {
        let t = fixtures::star(4);
        let report =
            verify_coloring_guarantee(&t, &Coloring::monochrome(5), 4, &Budget::default()).unwrap();
        assert!(!report.passed());
        let f = &report.failures[0];
        assert_eq!(f.property, Property::MainGuarantee);
        assert_eq!(f.witness.len(), 2);
    }

    #[test]
    fn oversize_tree_is_rejected() {
        let budget = Budget {
            max_vertices: 5,
            ..Budget::default()
        };
        assert!(matches!(
            verify_main_guarantee(&fixtures::path(6), 2, &budget),
            Err(crate::error::Error::OracleBudgetExceeded(_))
        ));
    }

    #[test]
    fn lemma_on_glued_stars() {
        let report = verify_lemma_k_minus_1(&fixtures::glued_stars(), &Budget::default()).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn report_equality_ignores_time() {
        let a = CampaignReport {
            trials: 3,
            failures: vec![],
            elapsed: Duration::from_secs(1),
        };
        let b = CampaignReport {
            trials: 3,
            failures: vec![],
            elapsed: Duration::from_secs(2),
        };
        assert_eq!(a, b);
        assert!(a.to_json().contains("\"elapsed_secs\""));
    }
}
