use std::path::PathBuf;

use treedist::{fixtures, Tree};

fn expected() -> Vec<(&'static str, Tree)> {
    let mut out = vec![
        ("example5_5.tree", fixtures::valence_ten_spider()),
        ("glued_stars.tree", fixtures::glued_stars()),
        ("path5.tree", fixtures::path(5)),
        ("path10.tree", fixtures::path(10)),
        ("star3.tree", fixtures::star(3)),
    ];
    for (name, k, depth) in [
        ("k3_depth1.tree", 3, 1),
        ("k3_depth2.tree", 3, 2),
        ("k3_depth3.tree", 3, 3),
        ("k4_depth2.tree", 4, 2),
        ("k4_depth3.tree", 4, 3),
    ] {
        out.push((name, fixtures::complete_tree(k, depth)));
    }
    out
}

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn files_match_constructors() {
    if std::env::var_os("TREEDIST_WRITE_FIXTURES").is_some() {
        for (name, t) in expected() {
            std::fs::write(dir().join(name), t.to_edge_list()).unwrap();
        }
    }
    for (name, t) in expected() {
        let text =
            std::fs::read_to_string(dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(Tree::parse_edge_list(&text).unwrap(), t, "{name}");
    }
}
