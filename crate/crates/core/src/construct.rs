//! Constructors for triplet covers.

use std::collections::BTreeSet;

use crate::cover::{is_triplet_cover, Layout, TripletCover};
use crate::error::{Error, Result};
use crate::tree::PhyloTree;

/// For every interior vertex, picks the smallest label of each of its three
/// subtrees and adds the three pairs among them.
pub fn per_vertex_cover(tree: &PhyloTree) -> TripletCover {
    let layout = Layout::new(tree);
    let mut pairs = BTreeSet::new();
    for side in &layout.side {
        let mut pick = [usize::MAX; 3];
        for (i, &s) in side.iter().enumerate() {
            pick[s as usize] = pick[s as usize].min(i);
        }
        pick.sort_unstable();
        pairs.extend([(pick[0], pick[1]), (pick[0], pick[2]), (pick[1], pick[2])]);
    }
    TripletCover::from_indices(tree.taxa().to_vec(), pairs)
}

/// A cover of size `2|X| - 3` built by cherry induction.
///
/// With three leaves all pairs are taken. Otherwise the smallest leaf `x`
/// belonging to a cherry `{x, y}` is removed, a cover of `T - x` is built,
/// and `xy`, `xb` are added for the smallest pair `yb` of that cover. The
/// triple `xyb` then supports the vertex next to `x` and every other support
/// survives, so each step adds exactly two pairs and keeps the cover graph a
/// 2-tree.
pub fn minimum_cover(tree: &PhyloTree) -> TripletCover {
    let mut removals = Vec::with_capacity(tree.leaf_count().saturating_sub(3));
    let mut current = tree.clone();
    while current.leaf_count() > 3 {
        let (x, y) = current
            .cherries()
            .into_iter()
            .flat_map(|(a, b)| [(a.clone(), b.clone()), (b, a)])
            .min()
            .expect("a tree with four or more leaves has a cherry");
        current = current.remove_leaf(&x).expect("leaf of a tree with at least 4 leaves");
        removals.push((x, y));
    }

    let base = current.taxa();
    let mut pairs: BTreeSet<(String, String)> = BTreeSet::new();
    for i in 0..3 {
        for j in i + 1..3 {
            pairs.insert((base[i].clone(), base[j].clone()));
        }
    }
    for (x, y) in removals.into_iter().rev() {
        let b = pairs
            .iter()
            .filter(|(p, q)| *p == y || *q == y)
            .map(|(p, q)| if *p == y { q.clone() } else { p.clone() })
            .next()
            .expect("every leaf of a cover lies in some pair");
        for other in [y, b] {
            let key = if x < other { (x.clone(), other) } else { (other, x.clone()) };
            pairs.insert(key);
        }
    }
    TripletCover::for_tree(tree, pairs).expect("pairs over the leaf set")
}

/// Deletes pairs in lexicographic order whenever the rest still covers.
/// The result is a minimal triplet cover contained in `cover`.
pub fn minimalize(tree: &PhyloTree, cover: &TripletCover) -> Result<TripletCover> {
    if !is_triplet_cover(tree, cover)? {
        return Err(Error::NotACover);
    }
    let mut current = cover.clone();
    let pairs: Vec<(String, String)> = cover
        .pairs()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    for (a, b) in pairs {
        let candidate = current.without_pair(&a, &b)?;
        if is_triplet_cover(tree, &candidate)? {
            current = candidate;
        }
    }
    Ok(current)
}
