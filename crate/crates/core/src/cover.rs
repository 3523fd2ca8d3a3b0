//! Triplet covers and the structures derived from them: supports, the
//! support graph, multiplicities and the cover/minimal/minimum predicates.

use std::collections::{BTreeMap, BTreeSet};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::{PhyloTree, VertexId};
use crate::two_tree::{is_two_tree, SimpleGraph};

/// A set of unordered leaf pairs over a fixed universe of labels.
///
/// Pairs are stored as index pairs `(i, j)` with `i < j` into the sorted
/// universe, so iteration is lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TripletCover {
    universe: Vec<String>,
    pairs: BTreeSet<(usize, usize)>,
}

impl TripletCover {
    pub fn new<U, P, A, B>(universe: U, pairs: P) -> Result<Self>
    where
        U: IntoIterator,
        U::Item: AsRef<str>,
        P: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let set: BTreeSet<String> = universe.into_iter().map(|s| s.as_ref().to_string()).collect();
        let mut cover = Self {
            universe: set.into_iter().collect(),
            pairs: BTreeSet::new(),
        };
        for (a, b) in pairs {
            let (a, b) = (a.as_ref(), b.as_ref());
            let key = cover.key(a, b)?;
            if !cover.pairs.insert(key) {
                return Err(Error::InvalidPair(format!("duplicate pair {a} {b}")));
            }
        }
        Ok(cover)
    }

    /// Cover over the leaf set of `tree`.
    pub fn for_tree<P, A, B>(tree: &PhyloTree, pairs: P) -> Result<Self>
    where
        P: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        Self::new(tree.taxa(), pairs)
    }

    /// Parses whitespace- or comma-separated two-character words such as
    /// `"ab ac bc"`. Only meaningful for single-character labels.
    pub fn from_compact<U>(universe: U, words: &str) -> Result<Self>
    where
        U: IntoIterator,
        U::Item: AsRef<str>,
    {
        let pairs = words
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|w| !w.is_empty())
            .map(|w| {
                let chars: Vec<char> = w.chars().collect();
                match chars[..] {
                    [a, b] => Ok((a.to_string(), b.to_string())),
                    _ => Err(Error::InvalidPair(w.to_string())),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, pairs)
    }

    /// Every pair of the universe.
    pub fn full<U>(universe: U) -> Self
    where
        U: IntoIterator,
        U::Item: AsRef<str>,
    {
        let mut cover = Self::new(universe, std::iter::empty::<(&str, &str)>()).expect("empty");
        let n = cover.universe.len();
        cover.pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        cover
    }

    pub(crate) fn from_indices(universe: Vec<String>, pairs: BTreeSet<(usize, usize)>) -> Self {
        Self { universe, pairs }
    }

    fn key(&self, a: &str, b: &str) -> Result<(usize, usize)> {
        if a == b {
            return Err(Error::InvalidPair(format!("{a} {a}")));
        }
        let (i, j) = (self.index(a)?, self.index(b)?);
        Ok((i.min(j), i.max(j)))
    }

    pub(crate) fn index(&self, label: &str) -> Result<usize> {
        self.universe
            .binary_search_by(|u| u.as_str().cmp(label))
            .map_err(|_| Error::UnknownLabel(label.to_string()))
    }

    /// The label set, sorted.
    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: &str, b: &str) -> bool {
        self.key(a, b).is_ok_and(|k| self.pairs.contains(&k))
    }

    /// Pairs in lexicographic order, each with `a < b`.
    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.pairs
            .iter()
            .map(|&(i, j)| (self.universe[i].as_str(), self.universe[j].as_str()))
    }

    pub(crate) fn index_pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    /// The cover with `ab` added.
    pub fn with_pair(&self, a: &str, b: &str) -> Result<Self> {
        let key = self.key(a, b)?;
        let mut out = self.clone();
        out.pairs.insert(key);
        Ok(out)
    }

    /// The cover with `ab` removed.
    pub fn without_pair(&self, a: &str, b: &str) -> Result<Self> {
        let key = self.key(a, b)?;
        let mut out = self.clone();
        out.pairs.remove(&key);
        Ok(out)
    }

    /// Number of pairs containing `x`, i.e. the degree of `x` in the cover graph.
    pub fn multiplicity(&self, x: &str) -> Result<usize> {
        let i = self.index(x)?;
        Ok(self.pairs.iter().filter(|&&(a, b)| a == i || b == i).count())
    }

    /// Smallest multiplicity over the universe.
    pub fn min_multiplicity(&self) -> usize {
        let mut counts = vec![0; self.universe.len()];
        for &(a, b) in &self.pairs {
            counts[a] += 1;
            counts[b] += 1;
        }
        counts.into_iter().min().unwrap_or(0)
    }

    /// Drops every pair containing `x` and removes `x` from the universe.
    pub fn remove_incident(&self, x: &str) -> Result<Self> {
        let i = self.index(x)?;
        let shift = |k: usize| if k > i { k - 1 } else { k };
        let mut universe = self.universe.clone();
        universe.remove(i);
        let pairs = self
            .pairs
            .iter()
            .filter(|&&(a, b)| a != i && b != i)
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        Ok(Self { universe, pairs })
    }

    /// The graph on the universe whose edges are the pairs.
    pub fn cover_graph(&self) -> SimpleGraph {
        SimpleGraph::from_cover(self)
    }
}

/// Per-tree tables shared by the cover computations.
pub(crate) struct Layout {
    pub(crate) interior: Vec<VertexId>,
    /// `side[k][i]`: block (0..3) of taxon `i` at interior vertex `k`.
    pub(crate) side: Vec<Vec<u8>>,
    /// Interior vertex (index into `interior`) adjacent to each taxon.
    pub(crate) adjacent: Vec<usize>,
}

impl Layout {
    pub(crate) fn new(tree: &PhyloTree) -> Self {
        let interior = tree.interior_vertices();
        let side = interior
            .iter()
            .map(|&v| tree.side_table(v).expect("interior vertex"))
            .collect();
        let slot: BTreeMap<VertexId, usize> =
            interior.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let adjacent = (0..tree.leaf_count())
            .map(|i| {
                let (u, _) = tree.adjacent(tree.leaf_vertex_of(i))[0];
                slot[&VertexId(u)]
            })
            .collect();
        Self {
            interior,
            side,
            adjacent,
        }
    }

    /// Interior vertex at which three distinct taxa fall into distinct blocks.
    pub(crate) fn median(&self, a: usize, b: usize, c: usize) -> usize {
        self.side
            .iter()
            .position(|s| s[a] != s[b] && s[a] != s[c] && s[b] != s[c])
            .expect("three leaves of a binary tree have a median")
    }
}

fn check_universe(tree: &PhyloTree, cover: &TripletCover) -> Result<()> {
    if tree.taxa() == cover.universe() {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

/// Triangles `i < j < k` of the cover graph, in lexicographic order.
pub(crate) fn triangles(cover: &TripletCover) -> Vec<[usize; 3]> {
    let n = cover.universe.len();
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for &(a, b) in &cover.pairs {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut out = Vec::new();
    for &(i, j) in &cover.pairs {
        let mut common = adj[i].clone();
        common.intersect_with(&adj[j]);
        out.extend(common.ones().filter(|&k| k > j).map(|k| [i, j, k]));
    }
    out.sort_unstable();
    out
}

/// Supporting triples of every interior vertex (indexed like `layout.interior`).
/// A triangle of the cover graph supports exactly its median.
pub(crate) fn supports_by_index(layout: &Layout, cover: &TripletCover) -> Vec<Vec<[usize; 3]>> {
    let mut out = vec![Vec::new(); layout.interior.len()];
    for t in triangles(cover) {
        out[layout.median(t[0], t[1], t[2])].push(t);
    }
    out
}

/// Taxa present in every supporting triple; empty when there is no support.
pub(crate) fn forced(triples: &[[usize; 3]]) -> Vec<usize> {
    match triples.split_first() {
        None => Vec::new(),
        Some((first, rest)) => first
            .iter()
            .copied()
            .filter(|x| rest.iter().all(|t| t.contains(x)))
            .collect(),
    }
}

/// The triples supporting one interior vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSet {
    vertex: VertexId,
    triples: Vec<[String; 3]>,
}

impl SupportSet {
    pub fn vertex(&self) -> VertexId {
        self.vertex
    }

    /// Supporting triples, each sorted, in lexicographic order.
    pub fn triples(&self) -> &[[String; 3]] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Membership of the triple `{a, b, c}` in any order.
    pub fn contains(&self, a: &str, b: &str, c: &str) -> bool {
        let mut key = [a, b, c];
        key.sort_unstable();
        self.triples
            .iter()
            .any(|t| t[0] == key[0] && t[1] == key[1] && t[2] == key[2])
    }

    /// Leaves lying in every supporting triple (empty if unsupported).
    pub fn forced_leaves(&self) -> Vec<&str> {
        match self.triples.split_first() {
            None => Vec::new(),
            Some((first, rest)) => first
                .iter()
                .filter(|x| rest.iter().all(|t| t.contains(x)))
                .map(String::as_str)
                .collect(),
        }
    }
}

fn named(cover: &TripletCover, vertex: VertexId, triples: Vec<[usize; 3]>) -> SupportSet {
    SupportSet {
        vertex,
        triples: triples
            .into_iter()
            .map(|t| t.map(|i| cover.universe[i].clone()))
            .collect(),
    }
}

/// Triples supporting interior vertex `v`: one leaf from each subtree at `v`,
/// all three pairs in the cover.
pub fn support_set(tree: &PhyloTree, cover: &TripletCover, v: VertexId) -> Result<SupportSet> {
    check_universe(tree, cover)?;
    let side = tree.side_table(v)?;
    let triples = triangles(cover)
        .into_iter()
        .filter(|t| side[t[0]] != side[t[1]] && side[t[0]] != side[t[2]] && side[t[1]] != side[t[2]])
        .collect();
    Ok(named(cover, v, triples))
}

/// Support sets of all interior vertices, in vertex id order.
pub fn support_sets(tree: &PhyloTree, cover: &TripletCover) -> Result<Vec<SupportSet>> {
    check_universe(tree, cover)?;
    let layout = Layout::new(tree);
    Ok(supports_by_index(&layout, cover)
        .into_iter()
        .zip(&layout.interior)
        .map(|(triples, &v)| named(cover, v, triples))
        .collect())
}

/// Whether every interior vertex has nonempty support.
pub fn is_triplet_cover(tree: &PhyloTree, cover: &TripletCover) -> Result<bool> {
    Ok(unsupported_vertices(tree, cover)?.is_empty())
}

/// Interior vertices with empty support, in id order.
pub fn unsupported_vertices(tree: &PhyloTree, cover: &TripletCover) -> Result<Vec<VertexId>> {
    check_universe(tree, cover)?;
    let layout = Layout::new(tree);
    Ok(supports_by_index(&layout, cover)
        .iter()
        .zip(&layout.interior)
        .filter(|(s, _)| s.is_empty())
        .map(|(_, &v)| v)
        .collect())
}

/// Bipartite graph joining leaf `x` to interior vertex `v` when `x` lies in
/// every triple supporting `v`. Unsupported vertices have no edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportGraph {
    leaves: Vec<String>,
    vertices: Vec<VertexId>,
    /// `(taxon index, interior index)`
    edges: BTreeSet<(usize, usize)>,
}

impl SupportGraph {
    /// Edges as `(leaf, interior vertex)` ordered by leaf then vertex.
    pub fn edges(&self) -> Vec<(&str, VertexId)> {
        self.edges
            .iter()
            .map(|&(x, k)| (self.leaves[x].as_str(), self.vertices[k]))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, leaf: &str, v: VertexId) -> bool {
        match (self.leaf_slot(leaf), self.vertex_slot(v)) {
            (Some(x), Some(k)) => self.edges.contains(&(x, k)),
            _ => false,
        }
    }

    pub fn leaf_degree(&self, leaf: &str) -> Result<usize> {
        let x = self
            .leaf_slot(leaf)
            .ok_or_else(|| Error::UnknownLabel(leaf.to_string()))?;
        Ok(self.edges.iter().filter(|&&(y, _)| y == x).count())
    }

    pub fn vertex_degree(&self, v: VertexId) -> Result<usize> {
        let k = self.vertex_slot(v).ok_or(Error::NotInterior(v))?;
        Ok(self.edges.iter().filter(|&&(_, w)| w == k).count())
    }

    /// Whether `a, v, b` is a path for some interior `v`.
    pub fn joins(&self, a: &str, b: &str) -> bool {
        self.vertices
            .iter()
            .any(|&v| self.contains(a, v) && self.contains(b, v))
    }

    fn leaf_slot(&self, leaf: &str) -> Option<usize> {
        self.leaves.binary_search_by(|l| l.as_str().cmp(leaf)).ok()
    }

    fn vertex_slot(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }
}

pub fn support_graph(tree: &PhyloTree, cover: &TripletCover) -> Result<SupportGraph> {
    check_universe(tree, cover)?;
    let layout = Layout::new(tree);
    let edges = supports_by_index(&layout, cover)
        .iter()
        .enumerate()
        .flat_map(|(k, s)| forced(s).into_iter().map(move |x| (x, k)))
        .collect();
    Ok(SupportGraph {
        leaves: cover.universe.clone(),
        vertices: layout.interior,
        edges,
    })
}

fn require_cover(tree: &PhyloTree, cover: &TripletCover) -> Result<Vec<Vec<[usize; 3]>>> {
    check_universe(tree, cover)?;
    let supports = supports_by_index(&Layout::new(tree), cover);
    if supports.iter().any(|s| s.is_empty()) {
        return Err(Error::NotACover);
    }
    Ok(supports)
}

/// Pairs that cannot be deleted without losing coverage: `ab` is essential
/// exactly when some interior vertex has every supporting triple through
/// both `a` and `b`.
pub fn essential_pairs(tree: &PhyloTree, cover: &TripletCover) -> Result<Vec<(String, String)>> {
    let supports = require_cover(tree, cover)?;
    let forced_sets: Vec<Vec<usize>> = supports.iter().map(|s| forced(s)).collect();
    Ok(cover
        .pairs
        .iter()
        .filter(|(a, b)| forced_sets.iter().any(|f| f.contains(a) && f.contains(b)))
        .map(|&(a, b)| (cover.universe[a].clone(), cover.universe[b].clone()))
        .collect())
}

/// Whether no single pair can be removed while keeping a triplet cover.
/// Fails with [`Error::NotACover`] if `cover` is not a cover.
pub fn is_minimal(tree: &PhyloTree, cover: &TripletCover) -> Result<bool> {
    Ok(essential_pairs(tree, cover)?.len() == cover.len())
}

/// Whether the cover has the least possible size, `2|X| - 3`.
/// Fails with [`Error::NotACover`] if `cover` is not a cover.
pub fn is_minimum(tree: &PhyloTree, cover: &TripletCover) -> Result<bool> {
    require_cover(tree, cover)?;
    Ok(cover.len() == 2 * tree.leaf_count() - 3)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnsupportedVertex {
    pub vertex: VertexId,
    pub components: [Vec<String>; 3],
}

/// Summary of the predicates for one tree and pair set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoverReport {
    pub cover_size: usize,
    pub is_cover: bool,
    pub is_minimal: bool,
    pub is_minimum: bool,
    pub min_multiplicity: usize,
    pub unsupported_vertices: Vec<UnsupportedVertex>,
    pub two_tree: bool,
    pub multiplicities: BTreeMap<String, usize>,
}

/// Evaluates every predicate; `is_minimal` and `is_minimum` are false when
/// the pair set is not a cover.
pub fn cover_report(tree: &PhyloTree, cover: &TripletCover) -> Result<CoverReport> {
    let unsupported = unsupported_vertices(tree, cover)?;
    let is_cover = unsupported.is_empty();
    let multiplicities = cover
        .universe
        .iter()
        .map(|x| (x.clone(), cover.multiplicity(x).expect("in universe")))
        .collect();
    Ok(CoverReport {
        cover_size: cover.len(),
        is_cover,
        is_minimal: is_cover && is_minimal(tree, cover)?,
        is_minimum: is_cover && is_minimum(tree, cover)?,
        min_multiplicity: cover.min_multiplicity(),
        unsupported_vertices: unsupported
            .into_iter()
            .map(|v| UnsupportedVertex {
                vertex: v,
                components: tree.components_at(v).expect("interior"),
            })
            .collect(),
        two_tree: is_two_tree(&cover.cover_graph())
            .map(|o| o.is_some())
            .unwrap_or(false),
        multiplicities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newick::parse_newick;

    fn fig1() -> (PhyloTree, TripletCover) {
        let t = parse_newick("((a,b),c,(d,e));").unwrap();
        let c = TripletCover::from_compact(t.taxa(), "ab ac bc cd ce de be").unwrap();
        (t, c)
    }

    fn vertex_next_to(t: &PhyloTree, x: &str) -> VertexId {
        t.neighbors(t.leaf(x).unwrap()).next().unwrap()
    }

    /// Definition-level support: every triple of taxa, blocks by path search.
    fn brute_support(t: &PhyloTree, c: &TripletCover, v: VertexId) -> Vec<[String; 3]> {
        let blocks = t.components_at(v).unwrap();
        let block = |x: &String| blocks.iter().position(|b| b.contains(x)).unwrap();
        let u = c.universe();
        let mut out = Vec::new();
        for i in 0..u.len() {
            for j in i + 1..u.len() {
                for k in j + 1..u.len() {
                    let (a, b, d) = (&u[i], &u[j], &u[k]);
                    let distinct = block(a) != block(b) && block(a) != block(d) && block(b) != block(d);
                    if distinct && c.contains(a, b) && c.contains(a, d) && c.contains(b, d) {
                        out.push([a.clone(), b.clone(), d.clone()]);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn construction_errors() {
        let u = ["a", "b", "c"];
        assert!(matches!(TripletCover::new(u, [("a", "a")]), Err(Error::InvalidPair(_))));
        assert!(matches!(TripletCover::new(u, [("a", "z")]), Err(Error::UnknownLabel(_))));
        assert!(matches!(TripletCover::new(u, [("a", "b"), ("b", "a")]), Err(Error::InvalidPair(_))));
        assert!(TripletCover::from_compact(u, "abc").is_err());
    }

    #[test]
    fn fig1_supports() {
        let (t, c) = fig1();
        let u = vertex_next_to(&t, "a");
        let v = vertex_next_to(&t, "c");
        let w = vertex_next_to(&t, "e");
        let su = support_set(&t, &c, u).unwrap();
        assert_eq!(su.triples(), [["a", "b", "c"].map(String::from)]);
        let sv = support_set(&t, &c, v).unwrap();
        assert_eq!(sv.triples(), [["b", "c", "e"].map(String::from)]);
        assert!(support_set(&t, &c, w).unwrap().contains("e", "d", "c"));
        assert_eq!(support_set(&t, &c, t.leaf("a").unwrap()).unwrap_err(), Error::NotInterior(t.leaf("a").unwrap()));
    }

    #[test]
    fn triangle_route_matches_brute_force() {
        for seed in 0..40 {
            let t = crate::tree::random_tree(4 + seed as usize % 6, seed, None).unwrap();
            let full = TripletCover::full(t.taxa());
            // thin the full set deterministically
            let pairs: Vec<(String, String)> = full
                .pairs()
                .enumerate()
                .filter(|(k, _)| !(k * 7 + seed as usize).is_multiple_of(3))
                .map(|(_, (a, b))| (a.to_string(), b.to_string()))
                .collect();
            let c = TripletCover::for_tree(&t, pairs).unwrap();
            let all = support_sets(&t, &c).unwrap();
            for s in &all {
                assert_eq!(s.triples(), brute_support(&t, &c, s.vertex()).as_slice());
                assert_eq!(s, &support_set(&t, &c, s.vertex()).unwrap());
            }
        }
    }

    #[test]
    fn cover_predicates_on_fig1() {
        let (t, c) = fig1();
        assert!(is_triplet_cover(&t, &c).unwrap());
        assert!(is_minimal(&t, &c).unwrap());
        assert!(is_minimum(&t, &c).unwrap());
        let bigger = c.with_pair("a", "d").unwrap();
        assert!(!is_minimal(&t, &bigger).unwrap());
        assert!(!is_minimum(&t, &bigger).unwrap());
        assert!(is_triplet_cover(&t, &TripletCover::full(t.taxa())).unwrap());
        let thin = c.without_pair("a", "b").unwrap();
        assert!(!is_triplet_cover(&t, &thin).unwrap());
        assert_eq!(is_minimal(&t, &thin), Err(Error::NotACover));
        assert_eq!(is_minimum(&t, &thin), Err(Error::NotACover));
        let other = TripletCover::full(["a", "b", "c"]);
        assert_eq!(is_triplet_cover(&t, &other), Err(Error::UniverseMismatch));
    }

    #[test]
    fn quartet_full_set_not_minimum() {
        let t = parse_newick("((a,b),c,d);").unwrap();
        let full = TripletCover::full(t.taxa());
        assert_eq!(full.len(), 6);
        assert!(!is_minimum(&t, &full).unwrap());
    }

    #[test]
    fn fig1_support_graph() {
        let (t, c) = fig1();
        let g = support_graph(&t, &c).unwrap();
        let u = vertex_next_to(&t, "a");
        let v = vertex_next_to(&t, "c");
        let w = vertex_next_to(&t, "e");
        let mut expected = vec![
            ("a", u), ("b", u), ("c", u),
            ("b", v), ("c", v), ("e", v),
            ("c", w), ("d", w), ("e", w),
        ];
        expected.sort();
        assert_eq!(g.edges(), expected);
        assert_eq!(g.leaf_degree("a").unwrap(), 1);
        assert_eq!(g.leaf_degree("c").unwrap(), 3);
        assert!(g.joins("b", "e"));
        assert!(!g.joins("a", "e"));

        let full = support_graph(&t, &TripletCover::full(t.taxa())).unwrap();
        for x in t.taxa() {
            assert_eq!(full.leaf_degree(x).unwrap(), 1);
            assert!(full.contains(x, vertex_next_to(&t, x)));
        }
    }

    #[test]
    fn multiplicities() {
        let (_, c) = fig1();
        assert_eq!(c.multiplicity("a").unwrap(), 2);
        assert_eq!(c.multiplicity("c").unwrap(), 4);
        assert_eq!(c.min_multiplicity(), 2);
        assert!(c.multiplicity("q").is_err());
        let full = TripletCover::full(["a", "b", "c", "d", "e", "f"]);
        assert!(full.universe().iter().all(|x| full.multiplicity(x).unwrap() == 5));
    }

    #[test]
    fn remove_incident_filters() {
        let (_, c) = fig1();
        let r = c.remove_incident("a").unwrap();
        assert_eq!(r, TripletCover::from_compact(["b", "c", "d", "e"], "bc cd ce de be").unwrap());
        assert!(c.remove_incident("z").is_err());
    }

    #[test]
    fn report_on_unsupported_vertex() {
        let t = parse_newick("((a,b),c,(d,(e,(f,g))));").unwrap();
        let c = TripletCover::from_compact(t.taxa(), "ab ad bc be cd cf de dg ef fg ag").unwrap();
        let r = cover_report(&t, &c).unwrap();
        assert!(!r.is_cover);
        assert!(!r.is_minimal && !r.is_minimum);
        // the only triangle is adg, which supports the vertex next to d
        assert_eq!(r.unsupported_vertices.len(), 4);
        let next_to_a = r
            .unsupported_vertices
            .iter()
            .find(|u| u.vertex == vertex_next_to(&t, "a"))
            .unwrap();
        assert_eq!(next_to_a.components, [vec!["a"], vec!["b"], vec!["c", "d", "e", "f", "g"]]);
        assert!(r.unsupported_vertices.iter().all(|u| u.vertex != vertex_next_to(&t, "d")));
    }
}
