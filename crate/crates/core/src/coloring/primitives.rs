use super::Color;
use crate::error::{Error, Result};

/// Colors `t` siblings from `palette` so the largest color class is as
/// small as possible.
///
/// Without `pairs_required` this is round-robin through the palette. With
/// it, every color used appears at least twice: as many colors as fit
/// (`min(|palette|, t/2)`) are laid down in adjacent pairs, then the
/// leftover slots go round-robin over the colors already used, so an odd
/// leftover joins the first class.
pub fn optimal_coloring(t: usize, palette: &[Color], pairs_required: bool) -> Result<Vec<Color>> {
    if t == 0 {
        return Err(Error::BadParams("nothing to color".into()));
    }
    if palette.is_empty() {
        return Err(Error::BadParams("empty palette".into()));
    }
    if !pairs_required {
        return Ok((0..t).map(|i| palette[i % palette.len()]).collect());
    }
    if t < 2 {
        return Err(Error::BadParams(
            "a single vertex cannot share its color".into(),
        ));
    }
    let used = palette.len().min(t / 2);
    let mut out: Vec<Color> = (0..2 * used).map(|s| palette[s / 2]).collect();
    out.extend((0..t - 2 * used).map(|q| palette[q % used]));
    Ok(out)
}

/// Base-`c` digits of `index`, least significant first, zero-padded to
/// `len` digits.
pub fn reversed_base_c_sequence(index: usize, len: usize, c: u32) -> Result<Vec<Color>> {
    if c < 2 {
        return Err(Error::BadParams(format!("base {c} < 2")));
    }
    let mut rest = index;
    let digits: Vec<Color> = (0..len)
        .map(|_| {
            let d = (rest % c as usize) as Color;
            rest /= c as usize;
            d
        })
        .collect();
    if rest != 0 {
        return Err(Error::IndexOverflow {
            index,
            len,
            base: c,
        });
    }
    Ok(digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_class(colors: &[Color]) -> usize {
        let mut counts = std::collections::HashMap::new();
        for &c in colors {
            *counts.entry(c).or_insert(0usize) += 1;
        }
        counts.into_values().max().unwrap_or(0)
    }

    #[test]
    fn pairs_examples() {
        assert_eq!(
            optimal_coloring(4, &[1, 2], true).unwrap(),
            vec![1, 1, 2, 2]
        );
        let five = optimal_coloring(5, &[1, 2], true).unwrap();
        assert_eq!(five, vec![1, 1, 2, 2, 1]);
        assert_eq!(max_class(&five), 3);
        assert_eq!(
            optimal_coloring(6, &[1, 2], true).unwrap(),
            vec![1, 1, 2, 2, 1, 2]
        );
    }

    #[test]
    fn plain_round_robin() {
        assert_eq!(
            optimal_coloring(3, &[0, 1, 2], false).unwrap(),
            vec![0, 1, 2]
        );
        assert_eq!(
            optimal_coloring(10, &[0, 1, 2], false)
                .unwrap()
                .iter()
                .filter(|&&c| c == 0)
                .count(),
            4
        );
    }

    #[test]
    fn pairs_every_used_color_twice() {
        for t in 2..=12 {
            for j in 1..=6u32 {
                let palette: Vec<Color> = (0..j).collect();
                let out = optimal_coloring(t, &palette, true).unwrap();
                for c in &palette {
                    let n = out.iter().filter(|&x| x == c).count();
                    assert!(n == 0 || n >= 2, "t={t} j={j} {out:?}");
                }
                let bound = 3.max(t.div_ceil(j as usize));
                assert!(max_class(&out) <= bound);
            }
        }
    }

    #[test]
    fn bad_params() {
        assert!(optimal_coloring(0, &[0], false).is_err());
        assert!(optimal_coloring(2, &[], false).is_err());
        assert!(optimal_coloring(1, &[0, 1], true).is_err());
    }

    #[test]
    fn reversed_sequences() {
        assert_eq!(
            reversed_base_c_sequence(3, 5, 2).unwrap(),
            vec![1, 1, 0, 0, 0]
        );
        assert_eq!(
            reversed_base_c_sequence(3, 5, 3).unwrap(),
            vec![0, 1, 0, 0, 0]
        );
        assert_eq!(reversed_base_c_sequence(0, 4, 7).unwrap(), vec![0; 4]);
        assert_eq!(
            reversed_base_c_sequence(1, 5, 2).unwrap(),
            vec![1, 0, 0, 0, 0]
        );
        assert_eq!(
            reversed_base_c_sequence(2, 5, 3).unwrap(),
            vec![2, 0, 0, 0, 0]
        );
        assert!(matches!(
            reversed_base_c_sequence(9, 2, 3),
            Err(Error::IndexOverflow { .. })
        ));
        assert_eq!(reversed_base_c_sequence(8, 2, 3).unwrap(), vec![2, 2]);
    }
}
