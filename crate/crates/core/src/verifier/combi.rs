//! Sibling colorings in which every used color appears at least twice.

use crate::error::{Error, Result};

/// Smallest possible largest color class when `t` slots are colored with
/// at most `j` colors, each used color appearing at least twice.
///
/// Searches every multiset of class sizes, which covers every coloring up
/// to renaming colors and reordering slots.
pub fn combi_oracle(t: usize, j: usize) -> Result<usize> {
    if t < 2 || j == 0 {
        return Err(Error::InfeasibleParams(format!(
            "no coloring of {t} slots with {j} colors"
        )));
    }
    fn best(rest: usize, parts_left: usize, max_part: usize, largest: usize) -> Option<usize> {
        if rest == 0 {
            return Some(largest);
        }
        if parts_left == 0 {
            return None;
        }
        (2..=max_part.min(rest))
            .filter(|&p| rest - p != 1)
            .filter_map(|p| best(rest - p, parts_left - 1, p, largest.max(p)))
            .min()
    }
    best(t, j, t, 0).ok_or_else(|| Error::InfeasibleParams(format!("t={t} j={j}")))
}

/// The stated upper bound `max{3, ceil(t/j)}`.
pub fn lemma_bound(t: usize, j: usize) -> usize {
    3.max(t.div_ceil(j))
}

/// The case values from the bound's proof: 2 or `ceil(t/j)` for even `t`,
/// 3 or `ceil((t-1)/j) + 1` for odd `t`.
pub fn case_formula(t: usize, j: usize) -> usize {
    if t.is_multiple_of(2) {
        if 2 * j >= t {
            2
        } else {
            t.div_ceil(j)
        }
    } else if 2 * j >= t - 1 {
        3
    } else {
        (t - 1).div_ceil(j) + 1
    }
}

/// Outcome of checking every `2 <= t <= 12`, `1 <= j <= 6`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CombiCheck {
    pub cases: usize,
    /// `(t, j, oracle)` where the oracle exceeds [`lemma_bound`].
    pub bound_violations: Vec<(usize, usize, usize)>,
    /// `(t, j, oracle, formula)` where [`case_formula`] differs from the oracle.
    pub formula_mismatches: Vec<(usize, usize, usize, usize)>,
}

pub fn combi_check() -> Result<CombiCheck> {
    let mut out = CombiCheck::default();
    for t in 2..=12 {
        for j in 1..=6 {
            let p = combi_oracle(t, j)?;
            out.cases += 1;
            if p > lemma_bound(t, j) {
                out.bound_violations.push((t, j, p));
            }
            let f = case_formula(t, j);
            if f != p {
                out.formula_mismatches.push((t, j, p, f));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(combi_oracle(4, 2).unwrap(), 2);
        assert_eq!(combi_oracle(5, 2).unwrap(), 3);
        assert_eq!(combi_oracle(9, 2).unwrap(), 5);
        assert_eq!(combi_oracle(2, 1).unwrap(), 2);
        assert_eq!(combi_oracle(3, 6).unwrap(), 3);
        assert!(combi_oracle(1, 3).is_err());
        assert!(combi_oracle(4, 0).is_err());
    }

    #[test]
    fn bound_holds_everywhere() {
        assert!(combi_check().unwrap().bound_violations.is_empty());
    }
}
