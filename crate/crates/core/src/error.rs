use thiserror::Error;

use crate::tree::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("newick syntax error at byte {position}: {message}")]
    NewickSyntax { position: usize, message: String },
    #[error("vertex of degree {degree} found; only leaves and degree-3 vertices are allowed")]
    NonBinary { degree: usize },
    #[error("duplicate leaf label '{0}'")]
    DuplicateLabel(String),
    #[error("invalid leaf label '{0}': labels are nonempty strings over [A-Za-z0-9_.-]")]
    InvalidLabel(String),
    #[error("edge length {0} is not strictly positive")]
    NonPositiveLength(f64),
    #[error("edge lengths must be given on every edge or on none")]
    MixedLengths,
    #[error("tree is malformed: {0}")]
    MalformedTree(String),
    #[error("a tree needs at least 3 leaves, got {0}")]
    TooFewLeaves(usize),
    #[error("unknown leaf label '{0}'")]
    UnknownLabel(String),
    #[error("labels must be pairwise distinct")]
    RepeatedLabel,
    #[error("vertex {0} is not an interior vertex")]
    NotInterior(VertexId),
    #[error("tree has no edge lengths")]
    MissingLengths,
    #[error("invalid length range [{0}, {1}]")]
    InvalidRange(f64, f64),
    #[error("cover universe does not match the leaf set of the tree")]
    UniverseMismatch,
    #[error("invalid pair: {0}")]
    InvalidPair(String),
    #[error("pair set is not a triplet cover of the tree")]
    NotACover,
    #[error("pair set is not shellable; {} pair(s) cannot be derived", residual.len())]
    NotShellable { residual: Vec<(String, String)> },
    #[error("distance map does not match the pair set: {0}")]
    DistanceKeys(String),
    #[error("invalid distance for {0}{1}: {2}")]
    InvalidDistance(String, String, f64),
    #[error("distances are not additive: four-point condition fails on {quartet:?} by {excess}")]
    NotAdditive { quartet: [String; 4], excess: f64 },
    #[error("implied edge length {0} is not strictly positive")]
    NonPositiveEdge(f64),
    #[error("graph needs at least 2 vertices")]
    TooFewVertices,
    #[error("instance with {n} leaves exceeds the enumeration limit of {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("parse error on line {line}: {message}")]
    Format { line: usize, message: String },
}
