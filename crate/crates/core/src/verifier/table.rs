use std::fmt::Write;
use std::time::Instant;

use super::{CampaignReport, Failure, Property};
use crate::threshold::ceil_r;

/// `ceil(r(c, k))` for `c = 2..=7` (rows) and `k = 2..=16` (columns),
/// transcribed by hand; `None` where `c > k`.
#[rustfmt::skip]
pub const TABLE2: [[Option<u8>; 15]; 6] = {
    const N: Option<u8> = None;
    const fn s(v: u8) -> Option<u8> { Some(v) }
    [
        [s(0), s(1), s(3), s(3), s(3), s(4), s(4), s(4), s(4), s(5), s(5), s(5), s(5), s(5), s(5)],
        [N,    s(0), s(1), s(1), s(1), s(1), s(1), s(2), s(2), s(2), s(2), s(2), s(2), s(2), s(2)],
        [N,    N,    s(0), s(1), s(1), s(1), s(1), s(1), s(1), s(1), s(1), s(1), s(1), s(2), s(2)],
        [N,    N,    N,    s(0), s(1), s(1), s(1), s(1), s(1), s(1), s(1), s(1), s(1), s(1), s(1)],
        [N,    N,    N,    N,    s(0), s(1), s(1), s(1), s(1), s(1), s(1), s(1), s(1), s(1), s(1)],
        [N,    N,    N,    N,    N,    s(0), s(1), s(1), s(1), s(1), s(1), s(1), s(1), s(1), s(1)],
    ]
};

pub const TABLE2_C: std::ops::RangeInclusive<u32> = 2..=7;
pub const TABLE2_K: std::ops::RangeInclusive<usize> = 2..=16;

/// The transcribed entry, if `(c, k)` lies inside the table and `c <= k`.
pub fn table2_entry(c: u32, k: usize) -> Option<u8> {
    if !TABLE2_C.contains(&c) || !TABLE2_K.contains(&k) {
        return None;
    }
    TABLE2[(c - 2) as usize][k - 2]
}

/// Compares every defined entry against [`ceil_r`]. A mismatch is reported
/// with witness `[table value, computed value]`.
pub fn table2_check() -> CampaignReport {
    let start = Instant::now();
    let mut report = CampaignReport::default();
    for c in TABLE2_C {
        for k in TABLE2_K {
            let Some(expected) = table2_entry(c, k) else {
                continue;
            };
            report.trials += 1;
            let got = ceil_r(c, k).expect("c >= 2");
            if got != expected as usize {
                report.failures.push(Failure {
                    seed: None,
                    n: 0,
                    k,
                    c: Some(c),
                    property: Property::Table2,
                    witness: vec![expected as usize, got],
                });
            }
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// Renders a grid of `cell(c, k)` values with `-` where `c > k`.
///
/// `plain` prints bare rows of space-separated values; otherwise columns are
/// aligned under a `c\k` header.
pub fn render_grid(
    cs: std::ops::RangeInclusive<u32>,
    ks: std::ops::RangeInclusive<usize>,
    plain: bool,
    cell: impl Fn(u32, usize) -> String,
) -> String {
    let mut out = String::new();
    if !plain {
        out.push_str("c\\k");
        for k in ks.clone() {
            write!(out, " {k:>2}").unwrap();
        }
        out.push('\n');
    }
    for c in cs {
        let cells: Vec<String> = ks
            .clone()
            .map(|k| {
                if c as usize > k {
                    "-".to_string()
                } else {
                    cell(c, k)
                }
            })
            .collect();
        if plain {
            out.push_str(&cells.join(" "));
        } else {
            write!(out, "{c:<3}").unwrap();
            for v in cells {
                write!(out, " {v:>2}").unwrap();
            }
        }
        out.push('\n');
    }
    out
}

/// `ceil(r(c, k))` over the given ranges.
pub fn render_table(
    cs: std::ops::RangeInclusive<u32>,
    ks: std::ops::RangeInclusive<usize>,
    plain: bool,
) -> String {
    render_grid(cs, ks, plain, |c, k| {
        ceil_r(c, k).expect("c >= 2").to_string()
    })
}

/// The transcribed table in the same layout as [`render_table`].
pub fn render_table2(plain: bool) -> String {
    render_grid(TABLE2_C, TABLE2_K, plain, |c, k| {
        table2_entry(c, k).expect("defined").to_string()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventy_five_entries_match() {
        let report = table2_check();
        assert_eq!(report.trials, 75);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn renderings() {
        assert_eq!(render_table(2..=2, 2..=4, true), "0 1 3\n");
        assert_eq!(render_table(5..=5, 5..=5, true), "0\n");
        assert_eq!(
            render_table(TABLE2_C, TABLE2_K, false),
            render_table2(false)
        );
        let aligned = render_table(2..=3, 2..=4, false);
        assert_eq!(aligned, "c\\k  2  3  4\n2    0  1  3\n3    -  0  1\n");
    }
}
