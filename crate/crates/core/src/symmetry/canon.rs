//! Canonical codes for colored rooted subtrees.
//!
//! `code(u)` is built from `u`'s color and the sorted codes of its
//! children, so two subtrees share a code exactly when a color-preserving
//! rooted isomorphism maps one onto the other. Uncolored vertices take the
//! sentinel color `num_colors`.

use std::collections::HashMap;

use crate::coloring::Coloring;
use crate::tree::RootedView;

/// Byte encoding of a colored rooted subtree:
/// `'(' color(u32 BE) child-code* ')'` with child codes sorted bytewise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonCode(pub Vec<u8>);

const OPEN: u8 = b'(';
const CLOSE: u8 = b')';

fn color_key(col: &Coloring, v: usize) -> u32 {
    col.get(v).unwrap_or(col.num_colors())
}

/// Canonical code of `T_u` for every vertex `u`.
pub fn canon_code(rv: &RootedView<'_>, col: &Coloring) -> Vec<CanonCode> {
    let mut codes: Vec<Option<CanonCode>> = vec![None; rv.n()];
    for &u in rv.bfs_order().iter().rev() {
        let mut kids: Vec<&CanonCode> = rv
            .children(u)
            .iter()
            .map(|&c| codes[c].as_ref().expect("children first"))
            .collect();
        kids.sort();
        let mut bytes = Vec::with_capacity(6 + kids.iter().map(|k| k.0.len()).sum::<usize>());
        bytes.push(OPEN);
        bytes.extend_from_slice(&color_key(col, u).to_be_bytes());
        for k in kids {
            bytes.extend_from_slice(&k.0);
        }
        bytes.push(CLOSE);
        codes[u] = Some(CanonCode(bytes));
    }
    codes
        .into_iter()
        .map(|c| c.expect("every vertex reached"))
        .collect()
}

/// Interns `(color, sorted child classes)` tuples into dense class ids.
///
/// Ids are only comparable within one table, but there they are a pure
/// function of the isomorphism class.
#[derive(Debug, Default, Clone)]
pub struct ClassTable {
    ids: HashMap<(u32, Vec<u32>), u32>,
}

impl ClassTable {
    pub fn new() -> ClassTable {
        ClassTable::default()
    }

    pub fn intern(&mut self, color: u32, mut children: Vec<u32>) -> u32 {
        children.sort_unstable();
        let next = self.ids.len() as u32;
        *self.ids.entry((color, children)).or_insert(next)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }
}

/// Class id of `T_u` for every vertex, with `key(u)` as the vertex label.
pub fn classes_with(
    rv: &RootedView<'_>,
    table: &mut ClassTable,
    key: impl Fn(usize) -> u32,
) -> Vec<u32> {
    let mut class = vec![u32::MAX; rv.n()];
    for &u in rv.bfs_order().iter().rev() {
        let kids = rv.children(u).iter().map(|&c| class[c]).collect();
        class[u] = table.intern(key(u), kids);
    }
    class
}

/// Class ids of the colored subtrees `T_u` (uncolored = sentinel).
pub fn color_classes(rv: &RootedView<'_>, col: &Coloring) -> Vec<u32> {
    classes_with(rv, &mut ClassTable::new(), |v| color_key(col, v))
}

/// Class ids of the uncolored shapes of `T_u`.
pub fn shape_classes(rv: &RootedView<'_>) -> Vec<u32> {
    classes_with(rv, &mut ClassTable::new(), |_| 0)
}

/// Class ids for the subtrees rooted at `tops` only; other entries of the
/// returned map are absent.
pub fn subtree_classes(
    rv: &RootedView<'_>,
    col: &Coloring,
    tops: &[usize],
    table: &mut ClassTable,
) -> HashMap<usize, u32> {
    let mut class: HashMap<usize, u32> = HashMap::new();
    let mut out = HashMap::new();
    for &top in tops {
        for u in rv.subtree(top).into_iter().rev() {
            let kids = rv.children(u).iter().map(|c| class[c]).collect();
            let id = table.intern(color_key(col, u), kids);
            class.insert(u, id);
        }
        out.insert(top, class[&top]);
    }
    out
}
