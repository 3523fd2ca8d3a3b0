//! Triplet covers of binary phylogenetic X-trees.
//!
//! A binary phylogenetic X-tree is an unrooted tree whose leaves are labelled
//! by the set X and whose other vertices all have degree three. A set of leaf
//! pairs is a *triplet cover* when every interior vertex is the median of some
//! triple of leaves whose three pairs all belong to the set.
//!
//! The crate provides:
//!
//! - [`tree`]: the tree type, Newick I/O, medians, quartets, leaf deletion,
//!   path distances and random generation.
//! - [`cover`]: supports, the support graph, multiplicities and the
//!   cover / minimal / minimum predicates.
//! - [`two_tree`]: 2-tree and 2d-tree recognition.
//! - [`construct`]: per-vertex, minimum (cherry induction) and minimalized covers.
//! - [`shelling`]: shelling closure, distance completion and exact
//!   reconstruction of a tree from an additive metric.
//! - [`oracle`]: exhaustive small-instance enumeration and property checks.
//! - [`io`]: pair-set and distance file formats.

pub mod construct;
pub mod cover;
mod error;
pub mod io;
pub mod newick;
pub mod oracle;
pub mod shelling;
pub mod tree;
pub mod two_tree;

pub use construct::{minimalize, minimum_cover, per_vertex_cover};
pub use cover::{
    is_minimal, is_minimum, is_triplet_cover, support_graph, support_set, support_sets,
    unsupported_vertices, SupportGraph, SupportSet, TripletCover,
};
pub use error::{Error, Result};
pub use newick::{parse_newick, serialize_newick};
pub use shelling::{
    complete_distances, is_shellable, reconstruct_tree, shelling_closure, ShellingOutcome,
    ShellingStep, ShellingTrace,
};
pub use tree::{random_tree, DistanceMap, PhyloTree, Quartet, VertexId};
pub use two_tree::{is_two_d_tree, is_two_tree, EliminationOrder, SimpleGraph};

/// Absolute tolerance used for every comparison of edge lengths and distances.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
