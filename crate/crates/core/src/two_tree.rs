//! Recognition of 2-trees and 2d-trees.
//!
//! A 2-tree is built from a single edge by repeatedly adding a vertex joined
//! to both ends of an existing edge. A 2d-tree relaxes this: each new vertex
//! is joined to two earlier vertices that need not be adjacent.

use std::collections::{BTreeSet, HashSet};

use fixedbitset::FixedBitSet;

use crate::cover::TripletCover;
use crate::error::{Error, Result};

/// A simple undirected graph on labelled vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertices: Vec<String>,
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new<V, E, A, B>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: AsRef<str>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let set: BTreeSet<String> = vertices.into_iter().map(|v| v.as_ref().to_string()).collect();
        let vertices: Vec<String> = set.into_iter().collect();
        let mut g = Self {
            adj: vec![BTreeSet::new(); vertices.len()],
            vertices,
        };
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let (i, j) = (g.index(a)?, g.index(b)?);
            if i == j {
                return Err(Error::InvalidPair(format!("loop at {a}")));
            }
            if !g.adj[i].insert(j) {
                return Err(Error::InvalidPair(format!("duplicate edge {a} {b}")));
            }
            g.adj[j].insert(i);
        }
        Ok(g)
    }

    /// The cover graph: vertex set the universe, edge set the pairs.
    pub fn from_cover(cover: &TripletCover) -> Self {
        let mut adj = vec![BTreeSet::new(); cover.universe().len()];
        for &(a, b) in cover.index_pairs() {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Self {
            vertices: cover.universe().to_vec(),
            adj,
        }
    }

    fn index(&self, label: &str) -> Result<usize> {
        self.vertices
            .binary_search_by(|v| v.as_str().cmp(label))
            .map_err(|_| Error::UnknownLabel(label.to_string()))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index(a), self.index(b)) {
            (Ok(i), Ok(j)) => self.adj[i].contains(&j),
            _ => false,
        }
    }

    pub fn degree(&self, v: &str) -> Result<usize> {
        Ok(self.adj[self.index(v)?].len())
    }

    /// Edges `(a, b)` with `a < b` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.adj.iter().enumerate().flat_map(move |(i, ns)| {
            ns.iter()
                .filter(move |&&j| j > i)
                .map(move |&j| (self.vertices[i].as_str(), self.vertices[j].as_str()))
        })
    }
}

/// One vertex of an elimination order with the two earlier neighbours it
/// forms its triangle with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationStep {
    pub vertex: String,
    pub neighbors: (String, String),
}

/// Certificate that a graph is a 2-tree: a starting edge followed by the
/// vertices in insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder {
    pub base: (String, String),
    pub steps: Vec<EliminationStep>,
}

impl EliminationOrder {
    /// All vertices in insertion order.
    pub fn sequence(&self) -> Vec<&str> {
        let mut out = vec![self.base.0.as_str(), self.base.1.as_str()];
        out.extend(self.steps.iter().map(|s| s.vertex.as_str()));
        out
    }

    /// Rebuilds the graph described by the order.
    pub fn replay(&self) -> Result<SimpleGraph> {
        let mut edges = vec![(self.base.0.as_str(), self.base.1.as_str())];
        for s in &self.steps {
            edges.push((s.vertex.as_str(), s.neighbors.0.as_str()));
            edges.push((s.vertex.as_str(), s.neighbors.1.as_str()));
        }
        SimpleGraph::new(self.sequence(), edges)
    }
}

/// Decides whether `g` is a 2-tree and returns an elimination order if so.
///
/// Requires `|E| = 2|V| - 3`, then repeatedly deletes the smallest-labelled
/// degree-2 vertex whose two neighbours are adjacent. Deleting such a vertex
/// from a 2-tree leaves a 2-tree, so the greedy choice never needs undoing.
pub fn is_two_tree(g: &SimpleGraph) -> Result<Option<EliminationOrder>> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices);
    }
    if g.edge_count() != 2 * n - 3 {
        return Ok(None);
    }
    let mut adj = g.adj.clone();
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut removed = Vec::with_capacity(n - 2);
    while alive.len() > 2 {
        let pick = alive.iter().copied().find(|&v| {
            adj[v].len() == 2 && {
                let mut it = adj[v].iter();
                let (p, q) = (*it.next().unwrap(), *it.next().unwrap());
                adj[p].contains(&q)
            }
        });
        let Some(v) = pick else { return Ok(None) };
        let ns: Vec<usize> = adj[v].iter().copied().collect();
        for &w in &ns {
            adj[w].remove(&v);
        }
        adj[v].clear();
        alive.remove(&v);
        removed.push((v, ns[0], ns[1]));
    }
    let mut rest = alive.into_iter();
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    let name = |i: usize| g.vertices[i].clone();
    Ok(Some(EliminationOrder {
        base: (name(a), name(b)),
        steps: removed
            .into_iter()
            .rev()
            .map(|(v, p, q)| EliminationStep {
                vertex: name(v),
                neighbors: (name(p), name(q)),
            })
            .collect(),
    }))
}

/// Decides whether `g` is a 2d-tree: some ordering starts with an edge and
/// gives every later vertex exactly two earlier neighbours. Returns such an
/// ordering. Exhaustive search with memoised dead ends.
pub fn is_two_d_tree(g: &SimpleGraph) -> Result<Option<Vec<String>>> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices);
    }
    if g.edge_count() != 2 * n - 3 {
        return Ok(None);
    }
    let mut alive = FixedBitSet::with_capacity(n);
    alive.insert_range(..);
    let mut dead_ends = HashSet::new();
    let mut removed = Vec::with_capacity(n);
    if !peel(g, &mut alive, &mut removed, &mut dead_ends) {
        return Ok(None);
    }
    let mut order: Vec<String> = alive.ones().map(|i| g.vertices[i].clone()).collect();
    order.extend(removed.iter().rev().map(|&v| g.vertices[v].clone()));
    Ok(Some(order))
}

fn peel(
    g: &SimpleGraph,
    alive: &mut FixedBitSet,
    removed: &mut Vec<usize>,
    dead_ends: &mut HashSet<FixedBitSet>,
) -> bool {
    // each peel removes two edges, so two survivors share the last edge
    if alive.count_ones(..) == 2 {
        return true;
    }
    if dead_ends.contains(alive) {
        return false;
    }
    let candidates: Vec<usize> = alive
        .ones()
        .filter(|&v| g.adj[v].iter().filter(|&&w| alive.contains(w)).count() == 2)
        .collect();
    for v in candidates {
        alive.set(v, false);
        removed.push(v);
        if peel(g, alive, removed, dead_ends) {
            return true;
        }
        removed.pop();
        alive.insert(v);
    }
    dead_ends.insert(alive.clone());
    false
}

/// Vertices of degree exactly two.
pub fn degree_two_vertices(g: &SimpleGraph) -> Vec<String> {
    g.adj
        .iter()
        .zip(&g.vertices)
        .filter(|(ns, _)| ns.len() == 2)
        .map(|(_, v)| v.clone())
        .collect()
}
