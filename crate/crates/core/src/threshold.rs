//! The distance threshold `r(c, k)` and its integer comparisons.
//!
//! `r(c, k)` is a real logarithm, but it is only ever compared against
//! integer distances, so it is stored by case and compared with exact
//! integer powers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact representation of `r(c, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum RThreshold {
    /// Every vertex must be fixed.
    Zero,
    /// Every non-leaf vertex must be fixed.
    One,
    /// `log_base(argument) + offset`.
    LogForm {
        base: u64,
        argument: u64,
        offset: u32,
    },
}

impl RThreshold {
    /// Whether an integer distance `d` satisfies `d >= r`.
    pub fn admits(&self, d: usize) -> bool {
        match *self {
            RThreshold::Zero => true,
            RThreshold::One => d >= 1,
            RThreshold::LogForm {
                base,
                argument,
                offset,
            } => {
                let Some(exp) = d.checked_sub(offset as usize) else {
                    return false;
                };
                pow_at_least(base, exp, argument)
            }
        }
    }

    /// `ceil(r)`: the smallest distance admitted.
    pub fn ceil(&self) -> usize {
        (0..)
            .find(|&d| self.admits(d))
            .expect("thresholds are finite")
    }

    /// Approximate real value, for display only.
    pub fn approx(&self) -> f64 {
        match *self {
            RThreshold::Zero => 0.0,
            RThreshold::One => 1.0,
            RThreshold::LogForm {
                base,
                argument,
                offset,
            } => (argument as f64).ln() / (base as f64).ln() + offset as f64,
        }
    }
}

impl std::fmt::Display for RThreshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            RThreshold::Zero => write!(f, "0"),
            RThreshold::One => write!(f, "1"),
            RThreshold::LogForm {
                base,
                argument,
                offset: 0,
            } => write!(f, "log_{base}({argument})"),
            RThreshold::LogForm {
                base,
                argument,
                offset,
            } => {
                write!(f, "log_{base}({argument}) + {offset}")
            }
        }
    }
}

/// `base^exp >= target` without overflow.
fn pow_at_least(base: u64, exp: usize, target: u64) -> bool {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        if acc >= target {
            return true;
        }
        acc = acc.saturating_mul(base);
    }
    acc >= target
}

/// `r(c, k)` for `c` colors and maximal valence `k`.
pub fn r_threshold(c: u32, k: usize) -> Result<RThreshold> {
    if c < 2 {
        return Err(Error::BadParams(format!("need at least 2 colors, got {c}")));
    }
    let c = c as u64;
    let k = k as u64;
    if k <= 2 || c >= k {
        return Ok(RThreshold::Zero);
    }
    if c == k - 1 {
        return Ok(RThreshold::One);
    }
    // 2 <= c <= k - 2, k >= 4
    if c == 2 {
        Ok(RThreshold::LogForm {
            base: 2,
            argument: 3.max(k - 2),
            offset: 1,
        })
    } else {
        let ratio = (k - 2).div_ceil(c - 1);
        Ok(RThreshold::LogForm {
            base: c,
            argument: 3.max(ratio),
            offset: 0,
        })
    }
}

/// `ceil(r(c, k))`.
pub fn ceil_r(c: u32, k: usize) -> Result<usize> {
    Ok(r_threshold(c, k)?.ceil())
}

/// Smallest integer `r` satisfying the coarser bound `k <= 2^(r-1)` (for
/// `c = 2`) or `k <= c^r (c-1) + 2` (for `c > 2`); 0 at `c = k` and 1 at
/// `c = k - 1`.
pub fn main_r_bound(c: u32, k: usize) -> Result<usize> {
    if c < 2 || (c as usize) > k {
        return Err(Error::BadParams(format!(
            "need 2 <= c <= k, got c={c} k={k}"
        )));
    }
    let (c, k) = (c as u128, k as u128);
    if c == k {
        return Ok(0);
    }
    if c + 1 == k {
        return Ok(1);
    }
    let holds = |r: u32| -> bool {
        if c == 2 {
            r >= 1 && k <= 1u128 << (r - 1)
        } else {
            k <= c.pow(r) * (c - 1) + 2
        }
    };
    Ok((0u32..).find(|&r| holds(r)).expect("bound is reached") as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cases() {
        assert_eq!(r_threshold(5, 5).unwrap(), RThreshold::Zero);
        assert_eq!(r_threshold(2, 2).unwrap(), RThreshold::Zero);
        assert_eq!(r_threshold(3, 1).unwrap(), RThreshold::Zero);
        assert_eq!(r_threshold(3, 4).unwrap(), RThreshold::One);
        assert_eq!(r_threshold(2, 3).unwrap(), RThreshold::One);
        assert_eq!(
            r_threshold(3, 10).unwrap(),
            RThreshold::LogForm {
                base: 3,
                argument: 4,
                offset: 0
            }
        );
        assert_eq!(
            r_threshold(2, 4).unwrap(),
            RThreshold::LogForm {
                base: 2,
                argument: 3,
                offset: 1
            }
        );
        assert!(r_threshold(1, 4).is_err());
    }

    #[test]
    fn admits_at_boundaries() {
        let r = r_threshold(3, 10).unwrap();
        assert!(!r.admits(1));
        assert!(r.admits(2));
        let r = r_threshold(2, 4).unwrap();
        assert!(!r.admits(2));
        assert!(r.admits(3));
        assert!(RThreshold::Zero.admits(0));
        assert!(!RThreshold::One.admits(0));
    }

    #[test]
    fn ceil_values() {
        for (c, k, want) in [
            (2, 4, 3),
            (2, 7, 4),
            (2, 11, 5),
            (3, 8, 1),
            (3, 9, 2),
            (4, 14, 1),
            (4, 15, 2),
        ] {
            assert_eq!(ceil_r(c, k).unwrap(), want, "c={c} k={k}");
        }
    }

    #[test]
    fn main_bound_values() {
        assert_eq!(main_r_bound(2, 4).unwrap(), 3);
        assert_eq!(main_r_bound(3, 9).unwrap(), 2);
        assert_eq!(main_r_bound(7, 7).unwrap(), 0);
        assert_eq!(main_r_bound(6, 7).unwrap(), 1);
        assert!(main_r_bound(5, 4).is_err());
    }

    #[test]
    fn main_bound_dominates_ceil() {
        for k in 2..=64 {
            for c in 2..=k as u32 {
                assert!(
                    ceil_r(c, k).unwrap() <= main_r_bound(c, k).unwrap(),
                    "c={c} k={k}"
                );
            }
        }
    }

    #[test]
    fn monotone_in_distance() {
        for k in 2..=16 {
            for c in 2..=k as u32 {
                let r = r_threshold(c, k).unwrap();
                let mut seen = false;
                for d in 0..12 {
                    let now = r.admits(d);
                    assert!(!seen || now, "c={c} k={k} d={d}");
                    seen |= now;
                }
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(r_threshold(3, 10).unwrap().to_string(), "log_3(4)");
        assert_eq!(r_threshold(2, 7).unwrap().to_string(), "log_2(5) + 1");
    }
}
