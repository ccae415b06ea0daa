use std::collections::HashSet;
use std::fmt::Write;

use treedist::{Coloring, Tree};

/// Fill colors by color index; indices past the end wrap around.
const PALETTE: [&str; 8] = [
    "white", "black", "gray", "red", "blue", "green", "orange", "purple",
];

/// Graphviz source with vertices filled by color and `bold` edges drawn thicker.
pub fn to_dot(tree: &Tree, col: &Coloring, bold: &[(usize, usize)]) -> String {
    let bold: HashSet<(usize, usize)> = bold.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut out = String::from("graph tree {\n  node [shape=circle, style=filled];\n");
    for v in 0..tree.n() {
        match col.get(v) {
            Some(c) => {
                let fill = PALETTE[c as usize % PALETTE.len()];
                let font = if fill == "black" { "white" } else { "black" };
                writeln!(out, "  {v} [fillcolor={fill}, fontcolor={font}];").unwrap();
            }
            None => writeln!(out, "  {v} [style=dashed];").unwrap(),
        }
    }
    for (u, v) in tree.edges() {
        if bold.contains(&(u, v)) {
            writeln!(out, "  {u} -- {v} [penwidth=2];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use treedist::fixtures;

    #[test]
    fn palette_cycles_and_lines_are_bold() {
        let t = fixtures::path(3);
        let col = Coloring::from_colors(9, vec![0, 1, 8]).unwrap();
        let dot = to_dot(&t, &col, &[(2, 1)]);
        assert!(dot.contains("  0 [fillcolor=white, fontcolor=black];"));
        assert!(dot.contains("  1 [fillcolor=black, fontcolor=white];"));
        assert!(dot.contains("  2 [fillcolor=white"));
        assert!(dot.contains("  1 -- 2 [penwidth=2];"));
        assert!(dot.contains("  0 -- 1;\n"));
    }
}
