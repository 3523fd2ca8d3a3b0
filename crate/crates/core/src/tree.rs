//! Binary phylogenetic X-trees and elementary queries on them.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Opaque identifier of a vertex. Ids are dense and assigned in construction
/// order (parse order for Newick input).
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexId(pub(crate) usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn valid_label(label: &str) -> bool {
    !label.is_empty()
        && label
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || matches!(b, b'_' | b'.' | b'-'))
}

/// An unrooted binary tree whose leaves carry distinct labels and whose
/// interior vertices all have degree three. Optionally every edge carries a
/// strictly positive length.
///
/// Trees are immutable; operations such as [`PhyloTree::remove_leaf`] return
/// new trees.
#[derive(Clone, Debug)]
pub struct PhyloTree {
    /// `(neighbour, edge index)` per vertex.
    adjacency: Vec<Vec<(usize, usize)>>,
    edges: Vec<(usize, usize)>,
    lengths: Option<Vec<f64>>,
    labels: Vec<Option<String>>,
    /// Leaf labels in lexicographic order.
    taxa: Vec<String>,
    /// Vertex of each taxon, parallel to `taxa`.
    leaf_vertex: Vec<usize>,
    /// Position in `taxa` of each vertex, `None` for interior vertices.
    rank: Vec<Option<usize>>,
}

impl PhyloTree {
    /// Builds a tree from per-vertex labels (`Some` for leaves) and an edge
    /// list, checking every structural invariant.
    pub fn from_edges(
        labels: Vec<Option<String>>,
        edges: Vec<(usize, usize)>,
        lengths: Option<Vec<f64>>,
    ) -> Result<Self> {
        let vertex_count = labels.len();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (e, &(a, b)) in edges.iter().enumerate() {
            if a >= vertex_count || b >= vertex_count || a == b {
                return Err(Error::MalformedTree(format!("bad edge ({a}, {b})")));
            }
            adjacency[a].push((b, e));
            adjacency[b].push((a, e));
        }

        let mut leaves = BTreeMap::new();
        for (v, label) in labels.iter().enumerate() {
            let degree = adjacency[v].len();
            match label {
                Some(l) => {
                    if !valid_label(l) {
                        return Err(Error::InvalidLabel(l.clone()));
                    }
                    if degree != 1 {
                        return Err(Error::MalformedTree(format!(
                            "leaf '{l}' has degree {degree}"
                        )));
                    }
                    if leaves.insert(l.clone(), v).is_some() {
                        return Err(Error::DuplicateLabel(l.clone()));
                    }
                }
                None if degree == 1 => {
                    return Err(Error::MalformedTree(format!("vertex {v} is an unlabelled leaf")))
                }
                None if degree != 3 => return Err(Error::NonBinary { degree }),
                None => {}
            }
        }
        if leaves.len() < 3 {
            return Err(Error::TooFewLeaves(leaves.len()));
        }
        if edges.len() + 1 != vertex_count {
            return Err(Error::MalformedTree("edge count does not describe a tree".into()));
        }
        // connected with |V|-1 edges => acyclic
        let mut seen = vec![false; vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        if reached != vertex_count {
            return Err(Error::MalformedTree("graph is disconnected".into()));
        }

        if let Some(ls) = &lengths {
            if ls.len() != edges.len() {
                return Err(Error::MixedLengths);
            }
            if let Some(&bad) = ls.iter().find(|l| !(l.is_finite() && **l > 0.0)) {
                return Err(Error::NonPositiveLength(bad));
            }
        }

        let mut rank = vec![None; vertex_count];
        let mut taxa = Vec::with_capacity(leaves.len());
        let mut leaf_vertex = Vec::with_capacity(leaves.len());
        for (i, (label, v)) in leaves.into_iter().enumerate() {
            rank[v] = Some(i);
            taxa.push(label);
            leaf_vertex.push(v);
        }
        debug_assert_eq!(edges.len(), 2 * taxa.len() - 3);

        Ok(Self {
            adjacency,
            edges,
            lengths,
            labels,
            taxa,
            leaf_vertex,
            rank,
        })
    }

    pub fn leaf_count(&self) -> usize {
        self.taxa.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Leaf labels in lexicographic order.
    pub fn taxa(&self) -> &[String] {
        &self.taxa
    }

    pub fn has_lengths(&self) -> bool {
        self.lengths.is_some()
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.labels.get(v.0).is_some_and(|l| l.is_some())
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.get(v.0).and_then(|l| l.as_deref())
    }

    pub fn leaf(&self, label: &str) -> Result<VertexId> {
        self.taxon_index(label).map(|i| VertexId(self.leaf_vertex[i]))
    }

    /// Interior vertices in id order.
    pub fn interior_vertices(&self) -> Vec<VertexId> {
        (0..self.vertex_count())
            .filter(|&v| self.labels[v].is_none())
            .map(VertexId)
            .collect()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v.0].iter().map(|&(w, _)| VertexId(w))
    }

    /// Edges as `(endpoint, endpoint, length)`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, Option<f64>)> + '_ {
        self.edges.iter().enumerate().map(|(e, &(a, b))| {
            (VertexId(a), VertexId(b), self.lengths.as_ref().map(|l| l[e]))
        })
    }

    /// Copy of the tree with the given length on every edge.
    pub fn with_uniform_lengths(&self, length: f64) -> Result<Self> {
        Self::from_edges(
            self.labels.clone(),
            self.edges.clone(),
            Some(vec![length; self.edges.len()]),
        )
    }

    /// Copy of the tree with lengths drawn from `sample` in edge order.
    pub fn with_lengths(&self, mut sample: impl FnMut() -> f64) -> Result<Self> {
        let lengths = (0..self.edges.len()).map(|_| sample()).collect();
        Self::from_edges(self.labels.clone(), self.edges.clone(), Some(lengths))
    }

    /// Copy of the tree without edge lengths.
    pub fn topology(&self) -> Self {
        Self {
            lengths: None,
            ..self.clone()
        }
    }

    /// Copy with every leaf relabelled through `map`.
    pub fn relabel(&self, map: impl Fn(&str) -> String) -> Result<Self> {
        let labels = self
            .labels
            .iter()
            .map(|l| l.as_deref().map(&map))
            .collect();
        Self::from_edges(labels, self.edges.clone(), self.lengths.clone())
    }

    /// Pairs of leaves adjacent to a common interior vertex, sorted.
    pub fn cherries(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for v in 0..self.vertex_count() {
            if self.labels[v].is_some() {
                continue;
            }
            let leafs: Vec<usize> = self.adjacency[v]
                .iter()
                .filter_map(|&(w, _)| self.rank[w])
                .collect();
            for i in 0..leafs.len() {
                for j in i + 1..leafs.len() {
                    let (a, b) = (leafs[i].min(leafs[j]), leafs[i].max(leafs[j]));
                    out.push((self.taxa[a].clone(), self.taxa[b].clone()));
                }
            }
        }
        out.sort();
        out
    }

    /// The unique vertex lying on all three paths between `a`, `b` and `c`.
    pub fn median(&self, a: &str, b: &str, c: &str) -> Result<VertexId> {
        let [a, b, c] = self.distinct_taxa([a, b, c])?;
        let da = self.hops_from(self.leaf_vertex[a]);
        let db = self.hops_from(self.leaf_vertex[b]);
        let dc = self.hops_from(self.leaf_vertex[c]);
        // the median minimises the summed distance to the three leaves
        let m = (0..self.vertex_count())
            .min_by_key(|&v| da[v] + db[v] + dc[v])
            .expect("tree has vertices");
        Ok(VertexId(m))
    }

    /// Leaf sets of the three subtrees at interior vertex `v`, each sorted,
    /// ordered by smallest label.
    pub fn components_at(&self, v: VertexId) -> Result<[Vec<String>; 3]> {
        let side = self.side_table(v)?;
        let mut blocks: [Vec<String>; 3] = Default::default();
        for (i, &s) in side.iter().enumerate() {
            blocks[s as usize].push(self.taxa[i].clone());
        }
        Ok(blocks)
    }

    /// Component index (0..3) of each taxon at interior vertex `v`, blocks
    /// numbered by their smallest taxon.
    pub(crate) fn side_table(&self, v: VertexId) -> Result<Vec<u8>> {
        if self.labels.get(v.0).is_none_or(|l| l.is_some()) {
            return Err(Error::NotInterior(v));
        }
        let mut side = vec![u8::MAX; self.leaf_count()];
        let mut firsts = Vec::with_capacity(3);
        for &(start, _) in &self.adjacency[v.0] {
            let mut block = Vec::new();
            let mut stack = vec![(start, v.0)];
            while let Some((x, parent)) = stack.pop() {
                if let Some(r) = self.rank[x] {
                    block.push(r);
                }
                for &(y, _) in &self.adjacency[x] {
                    if y != parent {
                        stack.push((y, x));
                    }
                }
            }
            firsts.push((*block.iter().min().expect("nonempty subtree"), block));
        }
        firsts.sort();
        for (k, (_, block)) in firsts.into_iter().enumerate() {
            for r in block {
                side[r] = k as u8;
            }
        }
        Ok(side)
    }

    /// The topology induced on four distinct leaves.
    pub fn quartet_topology(&self, four: [&str; 4]) -> Result<Quartet> {
        let idx = self.distinct_taxa(four)?;
        let hops = self.leaf_hops(&idx);
        let d = |i: usize, j: usize| hops[i][idx[j]];
        let sums = [
            d(0, 1) + d(2, 3),
            d(0, 2) + d(1, 3),
            d(0, 3) + d(1, 2),
        ];
        let best = (0..3).min_by_key(|&k| sums[k]).unwrap();
        let [a, b, c, e] = four;
        Ok(match best {
            0 => Quartet::new(a, b, c, e),
            1 => Quartet::new(a, c, b, e),
            _ => Quartet::new(a, e, b, c),
        })
    }

    /// `T - x`: deletes leaf `x` and suppresses the resulting degree-2
    /// vertex, summing the two merged edge lengths.
    pub fn remove_leaf(&self, x: &str) -> Result<Self> {
        let xv = self.leaf(x)?.0;
        if self.leaf_count() == 3 {
            return Err(Error::TooFewLeaves(2));
        }
        let (u, xe) = self.adjacency[xv][0];
        let others: Vec<(usize, usize)> = self.adjacency[u]
            .iter()
            .copied()
            .filter(|&(w, _)| w != xv)
            .collect();
        let [(p, pe), (q, qe)] = [others[0], others[1]];

        let mut remap = vec![usize::MAX; self.vertex_count()];
        let mut labels = Vec::with_capacity(self.vertex_count() - 2);
        for v in 0..self.vertex_count() {
            if v != xv && v != u {
                remap[v] = labels.len();
                labels.push(self.labels[v].clone());
            }
        }
        let mut edges = Vec::with_capacity(self.edges.len() - 2);
        let mut lengths = self.lengths.as_ref().map(|_| Vec::new());
        let mut merged_at = None;
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if e == xe || e == qe {
                continue;
            }
            if e == pe {
                merged_at = Some(edges.len());
                edges.push((remap[p], remap[q]));
            } else {
                edges.push((remap[a], remap[b]));
            }
            if let (Some(out), Some(ls)) = (lengths.as_mut(), self.lengths.as_ref()) {
                out.push(ls[e]);
            }
        }
        if let (Some(out), Some(ls), Some(m)) = (lengths.as_mut(), self.lengths.as_ref(), merged_at)
        {
            out[m] = ls[pe] + ls[qe];
        }
        Self::from_edges(labels, edges, lengths)
    }

    /// Path lengths between the requested leaf pairs.
    pub fn leaf_distances<'a, I>(&self, pairs: I) -> Result<DistanceMap>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let lengths = self.lengths.as_ref().ok_or(Error::MissingLengths)?;
        let mut cache: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
        let mut out = DistanceMap::new();
        for (a, b) in pairs {
            let [ia, ib] = self.distinct_taxa([a, b])?;
            let from = cache
                .entry(ia)
                .or_insert_with(|| self.weighted_from(self.leaf_vertex[ia], lengths));
            out.insert(a, b, from[self.leaf_vertex[ib]])?;
        }
        Ok(out)
    }

    /// Path lengths between every pair of leaves.
    pub fn all_leaf_distances(&self) -> Result<DistanceMap> {
        let lengths = self.lengths.as_ref().ok_or(Error::MissingLengths)?;
        let mut out = DistanceMap::new();
        for (i, a) in self.taxa.iter().enumerate() {
            let from = self.weighted_from(self.leaf_vertex[i], lengths);
            for (j, b) in self.taxa.iter().enumerate().skip(i + 1) {
                out.insert(a, b, from[self.leaf_vertex[j]])?;
            }
        }
        Ok(out)
    }

    /// Every edge as the leaf split it induces, keyed by the side that
    /// avoids the smallest taxon, with the edge length if present.
    pub fn splits(&self) -> BTreeMap<Vec<String>, Option<f64>> {
        let mut out = BTreeMap::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            let mut side = vec![false; self.leaf_count()];
            let mut stack = vec![(a, b)];
            while let Some((x, parent)) = stack.pop() {
                if let Some(r) = self.rank[x] {
                    side[r] = true;
                }
                for &(y, _) in &self.adjacency[x] {
                    if y != parent {
                        stack.push((y, x));
                    }
                }
            }
            let flip = side[0];
            let key = (0..self.leaf_count())
                .filter(|&r| side[r] != flip)
                .map(|r| self.taxa[r].clone())
                .collect();
            out.insert(key, self.lengths.as_ref().map(|l| l[e]));
        }
        out
    }

    /// Same leaf set and same topology.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.taxa == other.taxa
            && self.splits().keys().eq(other.splits().keys())
    }

    /// Largest absolute difference between corresponding edge lengths, or
    /// `None` if the trees are not isomorphic or either lacks lengths.
    pub fn max_length_error(&self, other: &Self) -> Option<f64> {
        if self.taxa != other.taxa {
            return None;
        }
        let mine = self.splits();
        let theirs = other.splits();
        if !mine.keys().eq(theirs.keys()) {
            return None;
        }
        mine.values()
            .zip(theirs.values())
            .map(|(a, b)| Some((a.as_ref()? - b.as_ref()?).abs()))
            .try_fold(0.0f64, |acc, d| d.map(|d| acc.max(d)))
    }

    pub(crate) fn taxon_index(&self, label: &str) -> Result<usize> {
        self.taxa
            .binary_search_by(|t| t.as_str().cmp(label))
            .map_err(|_| Error::UnknownLabel(label.to_string()))
    }

    fn distinct_taxa<const N: usize>(&self, labels: [&str; N]) -> Result<[usize; N]> {
        let mut out = [0; N];
        for (k, l) in labels.iter().enumerate() {
            out[k] = self.taxon_index(l)?;
            if out[..k].contains(&out[k]) {
                return Err(Error::RepeatedLabel);
            }
        }
        Ok(out)
    }

    pub(crate) fn leaf_vertex_of(&self, taxon: usize) -> usize {
        self.leaf_vertex[taxon]
    }

    pub(crate) fn rank_of(&self, v: usize) -> Option<usize> {
        self.rank[v]
    }

    pub(crate) fn adjacent(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub(crate) fn raw_lengths(&self) -> Option<&[f64]> {
        self.lengths.as_deref()
    }

    pub(crate) fn hops_from(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count()];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.adjacency[v] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn weighted_from(&self, source: usize, lengths: &[f64]) -> Vec<f64> {
        let mut dist = vec![f64::NAN; self.vertex_count()];
        dist[source] = 0.0;
        let mut stack = vec![(source, usize::MAX)];
        while let Some((v, parent)) = stack.pop() {
            for &(w, e) in &self.adjacency[v] {
                if w != parent {
                    dist[w] = dist[v] + lengths[e];
                    stack.push((w, v));
                }
            }
        }
        dist
    }

    /// Edge-count distances from each requested taxon to every taxon.
    fn leaf_hops(&self, from: &[usize]) -> Vec<Vec<u32>> {
        from.iter()
            .map(|&i| {
                let d = self.hops_from(self.leaf_vertex[i]);
                self.leaf_vertex.iter().map(|&v| d[v]).collect()
            })
            .collect()
    }

    /// Edge-count distance matrix between all taxa.
    pub(crate) fn leaf_hop_matrix(&self) -> Vec<Vec<u32>> {
        let all: Vec<usize> = (0..self.leaf_count()).collect();
        self.leaf_hops(&all)
    }
}

/// A quartet topology `ab|cd`, stored canonically: labels ordered within
/// each pair and the pair holding the smallest label first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quartet {
    pair_one: (String, String),
    pair_two: (String, String),
}

impl Quartet {
    pub fn new(a: &str, b: &str, c: &str, d: &str) -> Self {
        let order = |x: &str, y: &str| {
            if x <= y {
                (x.to_string(), y.to_string())
            } else {
                (y.to_string(), x.to_string())
            }
        };
        let one = order(a, b);
        let two = order(c, d);
        if one <= two {
            Self { pair_one: one, pair_two: two }
        } else {
            Self { pair_one: two, pair_two: one }
        }
    }

    pub fn pair_one(&self) -> (&str, &str) {
        (&self.pair_one.0, &self.pair_one.1)
    }

    pub fn pair_two(&self) -> (&str, &str) {
        (&self.pair_two.0, &self.pair_two.1)
    }

    /// True when `a` and `b` sit on the same side of the split.
    pub fn groups(&self, a: &str, b: &str) -> bool {
        let has = |p: &(String, String)| {
            (p.0 == a && p.1 == b) || (p.0 == b && p.1 == a)
        };
        has(&self.pair_one) || has(&self.pair_two)
    }
}

pub(crate) fn format_quartet(x: &str, a: &str, y: &str, b: &str) -> String {
    if [x, a, y, b].iter().all(|l| l.len() == 1) {
        format!("{x}{a}|{y}{b}")
    } else {
        format!("{x},{a}|{y},{b}")
    }
}

impl fmt::Display for Quartet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_quartet(
            &self.pair_one.0,
            &self.pair_one.1,
            &self.pair_two.0,
            &self.pair_two.1,
        ))
    }
}

/// Distances between unordered pairs of leaf labels.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DistanceMap {
    entries: BTreeMap<(String, String), f64>,
}

fn ordered(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

impl DistanceMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts or replaces `d(a, b)`.
    pub fn insert(&mut self, a: &str, b: &str, distance: f64) -> Result<()> {
        if a == b {
            return Err(Error::InvalidPair(format!("{a}{a}")));
        }
        if !(distance.is_finite() && distance >= 0.0) {
            return Err(Error::InvalidDistance(a.into(), b.into(), distance));
        }
        self.entries.insert(ordered(a, b), distance);
        Ok(())
    }

    pub fn get(&self, a: &str, b: &str) -> Option<f64> {
        self.entries.get(&ordered(a, b)).copied()
    }

    pub fn contains(&self, a: &str, b: &str) -> bool {
        self.get(a, b).is_some()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in lexicographic pair order, each pair with `a < b`.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &str, f64)> {
        self.entries
            .iter()
            .map(|((a, b), &d)| (a.as_str(), b.as_str(), d))
    }

    pub fn labels(&self) -> BTreeSet<&str> {
        self.entries
            .keys()
            .flat_map(|(a, b)| [a.as_str(), b.as_str()])
            .collect()
    }

    /// The entries whose pair passes `keep`.
    pub fn restrict(&self, mut keep: impl FnMut(&str, &str) -> bool) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|((a, b), _)| keep(a, b))
                .map(|(k, &d)| (k.clone(), d))
                .collect(),
        }
    }

    /// Maximum absolute difference over a shared key set; `None` when the key
    /// sets differ.
    pub fn max_abs_difference(&self, other: &Self) -> Option<f64> {
        if !self.entries.keys().eq(other.entries.keys()) {
            return None;
        }
        Some(
            self.entries
                .values()
                .zip(other.entries.values())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        )
    }
}

/// Grows trees by attaching leaves onto edges of a 3-leaf star.
#[derive(Clone, Debug)]
pub(crate) struct Growth {
    labels: Vec<Option<String>>,
    edges: Vec<(usize, usize)>,
}

impl Growth {
    pub(crate) fn star(a: &str, b: &str, c: &str) -> Self {
        Self {
            labels: vec![None, Some(a.into()), Some(b.into()), Some(c.into())],
            edges: vec![(0, 1), (0, 2), (0, 3)],
        }
    }

    pub(crate) fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Subdivides edge `edge` and hangs a new leaf from the new vertex.
    pub(crate) fn attach(&mut self, edge: usize, label: &str) {
        let (p, q) = self.edges[edge];
        let mid = self.labels.len();
        self.labels.push(None);
        let leaf = self.labels.len();
        self.labels.push(Some(label.into()));
        self.edges[edge] = (p, mid);
        self.edges.push((mid, q));
        self.edges.push((mid, leaf));
    }

    pub(crate) fn finish(self, lengths: Option<Vec<f64>>) -> Result<PhyloTree> {
        PhyloTree::from_edges(self.labels, self.edges, lengths)
    }
}

/// `a`..`z` for up to 26 leaves, otherwise `t01`, `t02`, ... zero-padded so
/// that lexicographic and numeric order agree.
pub fn default_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        let width = n.to_string().len();
        (1..=n).map(|i| format!("t{i:0width$}")).collect()
    }
}

/// A random tree on [`default_labels`]`(n)`.
///
/// Leaf `i + 1` is attached to an edge of the `i`-leaf tree chosen uniformly
/// at random, which samples labelled topologies uniformly. Edge lengths, when
/// a range is given, are uniform on `[lo, hi]`.
pub fn random_tree(n: usize, seed: u64, length_range: Option<(f64, f64)>) -> Result<PhyloTree> {
    random_tree_on(&default_labels(n), seed, length_range)
}

/// [`random_tree`] on caller-supplied labels.
pub fn random_tree_on(
    labels: &[String],
    seed: u64,
    length_range: Option<(f64, f64)>,
) -> Result<PhyloTree> {
    if labels.len() < 3 {
        return Err(Error::TooFewLeaves(labels.len()));
    }
    if let Some((lo, hi)) = length_range {
        if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo <= hi) {
            return Err(Error::InvalidRange(lo, hi));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut growth = Growth::star(&labels[0], &labels[1], &labels[2]);
    for label in &labels[3..] {
        let edge = rng.random_range(0..growth.edge_count());
        growth.attach(edge, label);
    }
    let lengths = length_range.map(|(lo, hi)| {
        (0..growth.edge_count())
            .map(|_| rng.random_range(lo..=hi))
            .collect()
    });
    growth.finish(lengths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newick::parse_newick;

    fn fig1() -> PhyloTree {
        parse_newick("((a,b),c,(d,e));").unwrap()
    }

    fn path(tree: &PhyloTree, a: usize, b: usize) -> Vec<usize> {
        // parent pointers from a
        let mut parent = vec![usize::MAX; tree.vertex_count()];
        let mut stack = vec![a];
        parent[a] = a;
        while let Some(v) = stack.pop() {
            for &(w, _) in tree.adjacent(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        let mut out = vec![b];
        let mut v = b;
        while v != a {
            v = parent[v];
            out.push(v);
        }
        out
    }

    #[test]
    fn counts_match_leaf_number() {
        let t = fig1();
        assert_eq!(t.leaf_count(), 5);
        assert_eq!(t.interior_vertices().len(), 3);
        assert_eq!(t.edge_count(), 7);
    }

    #[test]
    fn medians_of_figure_one() {
        let t = fig1();
        let c = t.leaf("c").unwrap();
        let v = t.neighbors(c).next().unwrap();
        assert_eq!(t.median("b", "c", "e").unwrap(), v);
        let a = t.leaf("a").unwrap();
        let u = t.neighbors(a).next().unwrap();
        assert_eq!(t.median("a", "b", "c").unwrap(), u);
        for perm in [["b", "e", "c"], ["e", "c", "b"], ["c", "b", "e"]] {
            assert_eq!(t.median(perm[0], perm[1], perm[2]).unwrap(), v);
        }
        assert_eq!(t.median("a", "a", "c"), Err(Error::RepeatedLabel));
        assert!(matches!(t.median("a", "z", "c"), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn median_lies_on_all_paths() {
        for seed in 0..20 {
            let t = random_tree(7, seed, None).unwrap();
            let taxa = t.taxa().to_vec();
            for i in 0..7 {
                for j in i + 1..7 {
                    for k in j + 1..7 {
                        let m = t.median(&taxa[i], &taxa[j], &taxa[k]).unwrap().0;
                        let (a, b, c) = (t.leaf_vertex[i], t.leaf_vertex[j], t.leaf_vertex[k]);
                        let on = |x, y| path(&t, x, y).contains(&m);
                        assert!(on(a, b) && on(b, c) && on(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn components_of_figure_one() {
        let t = fig1();
        let c = t.leaf("c").unwrap();
        let v = t.neighbors(c).next().unwrap();
        let blocks = t.components_at(v).unwrap();
        assert_eq!(blocks, [vec!["a", "b"], vec!["c"], vec!["d", "e"]].map(|b| b.iter().map(|s| s.to_string()).collect::<Vec<_>>()));
        let u = t.median("a", "b", "c").unwrap();
        let blocks = t.components_at(u).unwrap();
        assert_eq!(blocks[0], ["a"]);
        assert_eq!(blocks[1], ["b"]);
        assert_eq!(blocks[2], ["c", "d", "e"]);
        assert_eq!(t.components_at(c), Err(Error::NotInterior(c)));
        let star = parse_newick("(a,b,c);").unwrap();
        let center = star.interior_vertices()[0];
        assert_eq!(star.components_at(center).unwrap(), [vec!["a".to_string()], vec!["b".into()], vec!["c".into()]]);
    }

    #[test]
    fn quartets_of_figure_one() {
        let t = fig1();
        assert_eq!(t.quartet_topology(["a", "b", "c", "e"]).unwrap(), Quartet::new("b", "a", "c", "e"));
        assert_eq!(t.quartet_topology(["e", "a", "d", "b"]).unwrap().to_string(), "ab|de");
        assert_eq!(t.quartet_topology(["a", "c", "e", "d"]).unwrap().to_string(), "ac|de");
        assert!(t.quartet_topology(["a", "b", "b", "c"]).is_err());
    }

    #[test]
    fn quartet_agrees_with_disjoint_paths() {
        for seed in 0..30 {
            let n = 4 + (seed as usize % 4);
            let t = random_tree(n, seed, None).unwrap();
            let taxa = t.taxa().to_vec();
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        for l in k + 1..n {
                            let q = t.quartet_topology([&taxa[i], &taxa[j], &taxa[k], &taxa[l]]).unwrap();
                            let v = |x: usize| t.leaf_vertex[x];
                            let disjoint = |a, b, c, d| {
                                let p = path(&t, v(a), v(b));
                                path(&t, v(c), v(d)).iter().all(|x| !p.contains(x))
                            };
                            let expected = if disjoint(i, j, k, l) {
                                Quartet::new(&taxa[i], &taxa[j], &taxa[k], &taxa[l])
                            } else if disjoint(i, k, j, l) {
                                Quartet::new(&taxa[i], &taxa[k], &taxa[j], &taxa[l])
                            } else {
                                assert!(disjoint(i, l, j, k));
                                Quartet::new(&taxa[i], &taxa[l], &taxa[j], &taxa[k])
                            };
                            assert_eq!(q, expected);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cherry_forces_quartet() {
        let t = random_tree(9, 4, None).unwrap();
        for (x, y) in t.cherries() {
            let others: Vec<&String> = t.taxa().iter().filter(|l| **l != x && **l != y).collect();
            let q = t.quartet_topology([&x, others[0], &y, others[1]]).unwrap();
            assert!(q.groups(&x, &y));
        }
    }

    #[test]
    fn remove_leaf_from_figure_one() {
        let t = fig1();
        let r = t.remove_leaf("a").unwrap();
        assert!(r.is_isomorphic(&parse_newick("(b,c,(d,e));").unwrap()));
        let q = parse_newick("((a,b),(c,d),e);").unwrap().remove_leaf("e").unwrap();
        assert_eq!(q.leaf_count(), 4);
        let small = parse_newick("(a,b,c);").unwrap();
        assert_eq!(small.remove_leaf("a").unwrap_err(), Error::TooFewLeaves(2));
        assert!(t.remove_leaf("q").is_err());
    }

    #[test]
    fn remove_leaf_merges_lengths() {
        let t = fig1().with_uniform_lengths(1.0).unwrap();
        let r = t.remove_leaf("a").unwrap();
        let b = r.leaf("b").unwrap();
        let (_, _, len) = r.edges().find(|(x, y, _)| *x == b || *y == b).unwrap();
        assert_eq!(len, Some(2.0));
        let before = t.all_leaf_distances().unwrap();
        let after = r.all_leaf_distances().unwrap();
        assert_eq!(after, before.restrict(|x, y| x != "a" && y != "a"));
    }

    #[test]
    fn unit_length_distances() {
        let t = fig1().with_uniform_lengths(1.0).unwrap();
        let d = t.all_leaf_distances().unwrap();
        assert_eq!(d.get("a", "b"), Some(2.0));
        assert_eq!(d.get("c", "a"), Some(3.0));
        assert_eq!(d.get("a", "e"), Some(4.0));
        assert_eq!(d.len(), 10);
        assert_eq!(fig1().all_leaf_distances(), Err(Error::MissingLengths));
        let some = t.leaf_distances([("a", "b"), ("d", "e")]).unwrap();
        assert_eq!(some.len(), 2);
    }

    #[test]
    fn random_trees_are_reproducible() {
        let a = random_tree(5, 7, Some((0.5, 2.0))).unwrap();
        let b = random_tree(5, 7, Some((0.5, 2.0))).unwrap();
        assert_eq!(a.splits(), b.splits());
        for seed in 0..5 {
            let t = random_tree(3, seed, None).unwrap();
            assert_eq!(t.cherries().len(), 3);
        }
        assert_eq!(random_tree(2, 0, None).unwrap_err(), Error::TooFewLeaves(2));
        assert!(random_tree(5, 0, Some((2.0, 1.0))).is_err());
        assert!(random_tree(5, 0, Some((0.0, 1.0))).is_err());
    }

    #[test]
    fn at_least_two_disjoint_cherries() {
        for seed in 0..200 {
            let t = random_tree(4 + seed as usize % 12, seed, None).unwrap();
            let cherries = t.cherries();
            let disjoint = cherries.iter().any(|(a, b)| {
                cherries.iter().any(|(c, d)| a != c && a != d && b != c && b != d)
            });
            assert!(disjoint, "seed {seed}");
        }
    }

    #[test]
    fn default_label_schemes() {
        assert_eq!(default_labels(3), ["a", "b", "c"]);
        let many = default_labels(30);
        assert_eq!(many[0], "t01");
        assert_eq!(many[29], "t30");
    }
}
