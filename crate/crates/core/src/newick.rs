//! Newick reading and canonical writing of unrooted binary trees.
//!
//! An unrooted binary tree is written with a trifurcating root, e.g.
//! `((a,b),c,(d,e));`. Either every edge carries a `:length` or none does.

use crate::error::{Error, Result};
use crate::tree::PhyloTree;

pub fn parse_newick(text: &str) -> Result<PhyloTree> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        labels: Vec::new(),
        edges: Vec::new(),
        lengths: Vec::new(),
    };
    parser.skip_ws();
    let (root, root_len, children) = parser.node()?;
    if root_len.is_some() {
        return Err(parser.syntax("the root cannot carry a length"));
    }
    parser.skip_ws();
    if !parser.eat(b';') {
        return Err(parser.syntax("expected ';'"));
    }
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.syntax("unexpected text after ';'"));
    }
    if parser.labels[root].is_some() {
        return Err(Error::TooFewLeaves(1));
    }
    if children != 3 {
        return Err(Error::NonBinary { degree: children });
    }

    let lengths = match parser.lengths.iter().filter(|l| l.is_some()).count() {
        0 => None,
        k if k == parser.lengths.len() => Some(parser.lengths.iter().map(|l| l.unwrap()).collect()),
        _ => return Err(Error::MixedLengths),
    };
    PhyloTree::from_edges(parser.labels, parser.edges, lengths)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    labels: Vec<Option<String>>,
    edges: Vec<(usize, usize)>,
    lengths: Vec<Option<f64>>,
}

fn label_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || matches!(b, b'_' | b'.' | b'-')
}

impl Parser<'_> {
    fn syntax(&self, message: &str) -> Error {
        Error::NewickSyntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    /// Parses one subtree; returns its vertex, the length of the edge above
    /// it and its number of children.
    fn node(&mut self) -> Result<(usize, Option<f64>, usize)> {
        self.skip_ws();
        let id = self.labels.len();
        self.labels.push(None);
        let mut children = 0;
        if self.eat(b'(') {
            loop {
                let (child, len, grandchildren) = self.node()?;
                if self.labels[child].is_none() && grandchildren != 2 {
                    return Err(Error::NonBinary {
                        degree: grandchildren + 1,
                    });
                }
                self.edges.push((id, child));
                self.lengths.push(len);
                children += 1;
                self.skip_ws();
                if self.eat(b',') {
                    continue;
                }
                if self.eat(b')') {
                    break;
                }
                return Err(self.syntax("expected ',' or ')'"));
            }
            self.skip_ws();
            if self.peek().is_some_and(label_byte) {
                return Err(self.syntax("interior vertices cannot be labelled"));
            }
        } else {
            let start = self.pos;
            while self.peek().is_some_and(label_byte) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.syntax("expected a label or '('"));
            }
            let label = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
            self.labels[id] = Some(label.to_string());
        }
        self.skip_ws();
        let len = if self.eat(b':') {
            self.skip_ws();
            let start = self.pos;
            while self
                .peek()
                .is_some_and(|b| b.is_ascii_digit() || matches!(b, b'.' | b'e' | b'E' | b'+' | b'-'))
            {
                self.pos += 1;
            }
            let token = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
            let value: f64 = token.parse().map_err(|_| Error::NewickSyntax {
                position: start,
                message: format!("invalid length '{token}'"),
            })?;
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::NonPositiveLength(value));
            }
            Some(value)
        } else {
            None
        };
        Ok((id, len, children))
    }
}

/// Deterministic Newick text for `tree`.
///
/// The root is placed at the leaf-centroid: the interior vertex whose largest
/// subtree holds the fewest leaves, ties going to the vertex nearer the
/// smallest label. Children are ordered by their smallest descendant label.
pub fn serialize_newick(tree: &PhyloTree) -> String {
    let root = canonical_root(tree);
    let lengths = tree.raw_lengths();
    let mut parts: Vec<(usize, String)> = tree
        .adjacent(root)
        .iter()
        .map(|&(w, e)| write_subtree(tree, w, root, lengths.map(|l| l[e])))
        .collect();
    parts.sort();
    let body: Vec<String> = parts.into_iter().map(|(_, s)| s).collect();
    format!("({});", body.join(","))
}

fn canonical_root(tree: &PhyloTree) -> usize {
    let hops = tree.hops_from(tree.leaf_vertex_of(0));
    tree.interior_vertices()
        .into_iter()
        .map(|v| {
            let side = tree.side_table(v).expect("interior");
            let largest = (0..3u8)
                .map(|k| side.iter().filter(|&&s| s == k).count())
                .max()
                .unwrap();
            (largest, hops[v.index()], v.index())
        })
        .min()
        .expect("at least one interior vertex")
        .2
}

/// Returns the smallest taxon rank below `v` and the subtree text.
fn write_subtree(tree: &PhyloTree, v: usize, parent: usize, len: Option<f64>) -> (usize, String) {
    let suffix = len.map(|l| format!(":{l}")).unwrap_or_default();
    if let Some(rank) = tree.rank_of(v) {
        return (rank, format!("{}{}", tree.taxa()[rank], suffix));
    }
    let lengths = tree.raw_lengths();
    let mut parts: Vec<(usize, String)> = tree
        .adjacent(v)
        .iter()
        .filter(|&&(w, _)| w != parent)
        .map(|&(w, e)| write_subtree(tree, w, v, lengths.map(|l| l[e])))
        .collect();
    parts.sort();
    let min = parts[0].0;
    let body: Vec<String> = parts.into_iter().map(|(_, s)| s).collect();
    (min, format!("({}){}", body.join(","), suffix))
}
