//! Shelling closure of a pair set, completion of partial leaf distances and
//! exact reconstruction of a tree from a complete additive metric.
//!
//! A missing pair `ab` can be added when two further leaves `x`, `y` exist
//! such that the tree restricted to `{a, b, x, y}` is the quartet `xa|yb`
//! and the other five pairs of `{a, b, x, y}` are already known. For an
//! additive metric this fixes `d(a, b) = d(a, y) + d(b, x) - d(x, y)`.
//!
//! The closure adds derivable pairs until none is left. Derivability only
//! grows as pairs are added, so the set of pairs that are never added does not
//! depend on the scan order. The scan restarts from the first missing pair
//! after every addition.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::cover::{is_triplet_cover, TripletCover};
use crate::error::{Error, Result};
use crate::tree::{format_quartet, DistanceMap, PhyloTree};

/// One derived pair `ab` with its witnesses: the tree restricted to
/// `{a, b, x, y}` is `xa|yb`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingStep {
    pub pair: (String, String),
    pub x: String,
    pub y: String,
}

impl ShellingStep {
    /// The witnessing quartet written as `xa|yb`.
    pub fn quartet(&self) -> String {
        format_quartet(&self.x, &self.pair.0, &self.y, &self.pair.1)
    }
}

impl Serialize for ShellingStep {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ShellingStep", 4)?;
        s.serialize_field("pair", &[&self.pair.0, &self.pair.1])?;
        s.serialize_field("x", &self.x)?;
        s.serialize_field("y", &self.y)?;
        s.serialize_field("quartet", &self.quartet())?;
        s.end()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
#[serde(transparent)]
pub struct ShellingTrace {
    steps: Vec<ShellingStep>,
}

impl ShellingTrace {
    pub fn new(steps: Vec<ShellingStep>) -> Self {
        Self { steps }
    }

    pub fn steps(&self) -> &[ShellingStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Checks each step against `cover` plus the earlier steps: the five
    /// other pairs must be known, the pair itself not yet, and the quartet
    /// must match the tree.
    pub fn replay(&self, tree: &PhyloTree, cover: &TripletCover) -> Result<()> {
        let mut known = cover.clone();
        for (k, step) in self.steps.iter().enumerate() {
            let (a, b) = (step.pair.0.as_str(), step.pair.1.as_str());
            let (x, y) = (step.x.as_str(), step.y.as_str());
            let bad = |why: &str| Error::InvalidPair(format!("step {k} ({a}{b}): {why}"));
            if known.contains(a, b) {
                return Err(bad("pair already known"));
            }
            for (p, q) in [(a, x), (a, y), (b, x), (b, y), (x, y)] {
                if !known.contains(p, q) {
                    return Err(bad(&format!("prerequisite {p}{q} missing")));
                }
            }
            let q = tree.quartet_topology([a, b, x, y])?;
            if !(q.groups(x, a) && q.groups(y, b)) {
                return Err(bad("witness quartet does not match the tree"));
            }
            known = known.with_pair(a, b)?;
        }
        Ok(())
    }
}

/// Result of the shelling closure.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ShellingOutcome {
    pub shellable: bool,
    pub trace: ShellingTrace,
    /// Missing pairs that could not be derived, in lexicographic order.
    pub residual: Vec<(String, String)>,
}

impl ShellingOutcome {
    pub fn is_shellable(&self) -> bool {
        self.residual.is_empty()
    }
}

/// Shelling closure of a triplet cover. Fails with [`Error::NotACover`]
/// otherwise; see [`shelling_closure_unchecked`] to waive that.
pub fn shelling_closure(tree: &PhyloTree, cover: &TripletCover) -> Result<ShellingOutcome> {
    if !is_triplet_cover(tree, cover)? {
        return Err(Error::NotACover);
    }
    shelling_closure_unchecked(tree, cover)
}

/// Shelling closure of any pair set over the leaf set of `tree`.
pub fn shelling_closure_unchecked(tree: &PhyloTree, cover: &TripletCover) -> Result<ShellingOutcome> {
    if tree.taxa() != cover.universe() {
        return Err(Error::UniverseMismatch);
    }
    let n = tree.leaf_count();
    let scan: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let (steps, mut residual) = closure_in_order(tree, cover, &scan);
    residual.sort_unstable();
    let name = |i: usize| cover.universe()[i].clone();
    Ok(ShellingOutcome {
        shellable: residual.is_empty(),
        trace: ShellingTrace::new(
            steps
                .into_iter()
                .map(|[a, b, x, y]| ShellingStep {
                    pair: (name(a), name(b)),
                    x: name(x),
                    y: name(y),
                })
                .collect(),
        ),
        residual: residual.into_iter().map(|(a, b)| (name(a), name(b))).collect(),
    })
}

/// Whether the missing pairs of a triplet cover admit a shellable ordering.
pub fn is_shellable(tree: &PhyloTree, cover: &TripletCover) -> Result<bool> {
    Ok(shelling_closure(tree, cover)?.is_shellable())
}

/// Runs the closure visiting missing pairs in `scan` order. Returns the steps
/// as `[a, b, x, y]` and the pairs left underived.
pub(crate) fn closure_in_order(
    tree: &PhyloTree,
    cover: &TripletCover,
    scan: &[(usize, usize)],
) -> (Vec<[usize; 4]>, Vec<(usize, usize)>) {
    let n = tree.leaf_count();
    let hops = tree.leaf_hop_matrix();
    let mut known = vec![vec![false; n]; n];
    for &(a, b) in cover.index_pairs() {
        known[a][b] = true;
        known[b][a] = true;
    }
    let mut pending: Vec<(usize, usize)> = scan.iter().copied().filter(|&(a, b)| !known[a][b]).collect();
    let mut steps = Vec::new();
    'grow: loop {
        for k in 0..pending.len() {
            let (a, b) = pending[k];
            if let Some((x, y)) = witness(&known, &hops, a, b) {
                known[a][b] = true;
                known[b][a] = true;
                pending.remove(k);
                steps.push([a, b, x, y]);
                continue 'grow;
            }
        }
        break;
    }
    (steps, pending)
}

/// First `(x, y)` in lexicographic order witnessing `ab`.
fn witness(known: &[Vec<bool>], hops: &[Vec<u32>], a: usize, b: usize) -> Option<(usize, usize)> {
    let n = known.len();
    for x in (0..n).filter(|&x| x != a && x != b && known[a][x] && known[b][x]) {
        for y in 0..n {
            if y == a || y == b || y == x || !(known[a][y] && known[b][y] && known[x][y]) {
                continue;
            }
            let split = hops[x][a] + hops[y][b];
            if split < hops[x][y] + hops[a][b] && split < hops[x][b] + hops[a][y] {
                return Some((x, y));
            }
        }
    }
    None
}

/// Extends distances on the pairs of `cover` to all pairs by following the
/// shelling order: each step uses `d(a, b) = d(a, y) + d(b, x) - d(x, y)`.
///
/// `partial` must hold exactly the pairs of `cover`. The input is not checked
/// for additivity; a step that would produce a negative distance fails with
/// [`Error::InvalidDistance`].
pub fn complete_distances(
    tree: &PhyloTree,
    cover: &TripletCover,
    partial: &DistanceMap,
) -> Result<DistanceMap> {
    let outcome = shelling_closure_unchecked(tree, cover)?;
    if let Some((a, b)) = cover.pairs().find(|(a, b)| !partial.contains(a, b)) {
        return Err(Error::DistanceKeys(format!("missing distance for {a} {b}")));
    }
    if let Some((a, b, _)) = partial.iter().find(|(a, b, _)| !cover.contains(a, b)) {
        return Err(Error::DistanceKeys(format!("{a} {b} is not a pair of the cover")));
    }
    if !outcome.is_shellable() {
        return Err(Error::NotShellable {
            residual: outcome.residual,
        });
    }
    let mut full = partial.clone();
    for step in outcome.trace.steps() {
        let (a, b) = (step.pair.0.as_str(), step.pair.1.as_str());
        let (x, y) = (step.x.as_str(), step.y.as_str());
        let get = |p: &str, q: &str| full.get(p, q).expect("known by construction");
        let d = get(a, y) + get(b, x) - get(x, y);
        full.insert(a, b, d)?;
    }
    Ok(full)
}

/// Rebuilds the binary tree and its edge lengths from a complete additive
/// metric.
///
/// The metric is first checked against the four-point condition. Cherries are
/// then joined one at a time: the candidate pair minimising
/// `(r - 2) d(i, j) - R(i) - R(j)` is confirmed with four-point comparisons
/// against every other pair before joining. Every implied edge must be longer
/// than `tolerance`.
pub fn reconstruct_tree(full: &DistanceMap, tolerance: f64) -> Result<PhyloTree> {
    let labels: Vec<String> = full.labels().into_iter().map(String::from).collect();
    let n = labels.len();
    if n < 3 {
        return Err(Error::TooFewLeaves(n));
    }
    if full.len() != n * (n - 1) / 2 {
        return Err(Error::DistanceKeys("distances must be given for every pair".into()));
    }
    let mut d = vec![vec![0.0; n]; n];
    for (a, b, v) in full.iter() {
        let (i, j) = (
            labels.binary_search_by(|l| l.as_str().cmp(a)).unwrap(),
            labels.binary_search_by(|l| l.as_str().cmp(b)).unwrap(),
        );
        d[i][j] = v;
        d[j][i] = v;
    }
    four_point_check(&d, &labels, tolerance)?;

    let mut vertex_labels: Vec<Option<String>> = labels.iter().cloned().map(Some).collect();
    let mut edges = Vec::with_capacity(2 * n - 3);
    let mut lengths = Vec::with_capacity(2 * n - 3);
    let mut push_edge = |edges: &mut Vec<(usize, usize)>, a: usize, b: usize, len: f64| {
        if len <= tolerance {
            return Err(Error::NonPositiveEdge(len));
        }
        edges.push((a, b));
        lengths.push(len);
        Ok(())
    };

    // active[k] is a vertex of the tree being built; d is indexed by vertex
    let mut active: Vec<usize> = (0..n).collect();
    while active.len() > 3 {
        let r = active.len();
        let sums: Vec<f64> = active
            .iter()
            .map(|&i| active.iter().map(|&j| d[i][j]).sum())
            .collect();
        let mut candidates = Vec::with_capacity(r * (r - 1) / 2);
        for p in 0..r {
            for q in p + 1..r {
                let score = (r - 2) as f64 * d[active[p]][active[q]] - sums[p] - sums[q];
                candidates.push((score, p, q));
            }
        }
        candidates.sort_by(|x, y| x.0.total_cmp(&y.0).then((x.1, x.2).cmp(&(y.1, y.2))));
        let (p, q) = candidates
            .iter()
            .map(|&(_, p, q)| (p, q))
            .find(|&(p, q)| is_cherry(&d, &active, p, q, tolerance))
            .ok_or_else(|| Error::NotAdditive {
                quartet: [labels[0].clone(), labels[1].clone(), labels[2].clone(), labels[3].clone()],
                excess: f64::NAN,
            })?;
        let (i, j) = (active[p], active[q]);
        let len_i = d[i][j] / 2.0 + (sums[p] - sums[q]) / (2.0 * (r - 2) as f64);
        let len_j = d[i][j] - len_i;

        let u = vertex_labels.len();
        vertex_labels.push(None);
        let mut row = vec![0.0; u + 1];
        for &k in &active {
            if k != i && k != j {
                let v = (d[i][k] + d[j][k] - d[i][j]) / 2.0;
                row[k] = v;
            }
        }
        for (k, line) in d.iter_mut().enumerate() {
            line.push(row[k]);
        }
        d.push(row);
        push_edge(&mut edges, u, i, len_i)?;
        push_edge(&mut edges, u, j, len_j)?;
        active.retain(|&k| k != i && k != j);
        active.push(u);
    }

    let [p, q, s] = [active[0], active[1], active[2]];
    let center = vertex_labels.len();
    vertex_labels.push(None);
    push_edge(&mut edges, center, p, (d[p][q] + d[p][s] - d[q][s]) / 2.0)?;
    push_edge(&mut edges, center, q, (d[p][q] + d[q][s] - d[p][s]) / 2.0)?;
    push_edge(&mut edges, center, s, (d[p][s] + d[q][s] - d[p][q]) / 2.0)?;

    let tree = PhyloTree::from_edges(vertex_labels, edges, Some(lengths))?;
    let realized = tree.all_leaf_distances()?;
    for (a, b, v) in full.iter() {
        let excess = (realized.get(a, b).expect("same leaves") - v).abs();
        if excess > tolerance {
            return Err(Error::NotAdditive {
                quartet: [a.to_string(), b.to_string(), a.to_string(), b.to_string()],
                excess,
            });
        }
    }
    Ok(tree)
}

fn four_point_check(d: &[Vec<f64>], labels: &[String], tolerance: f64) -> Result<()> {
    let n = labels.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let mut sums = [
                        d[i][j] + d[k][l],
                        d[i][k] + d[j][l],
                        d[i][l] + d[j][k],
                    ];
                    sums.sort_by(f64::total_cmp);
                    let excess = sums[2] - sums[1];
                    if excess > tolerance {
                        return Err(Error::NotAdditive {
                            quartet: [i, j, k, l].map(|x| labels[x].clone()),
                            excess,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// `active[p]`, `active[q]` form a cherry when, against every other pair,
/// their joint sum is the smallest of the three pairings.
fn is_cherry(d: &[Vec<f64>], active: &[usize], p: usize, q: usize, tolerance: f64) -> bool {
    let (i, j) = (active[p], active[q]);
    let others: Vec<usize> = active.iter().copied().filter(|&k| k != i && k != j).collect();
    others.iter().enumerate().all(|(s, &k)| {
        others[s + 1..].iter().all(|&l| {
            let own = d[i][j] + d[k][l];
            own <= d[i][k] + d[j][l] + tolerance && own <= d[i][l] + d[j][k] + tolerance
        })
    })
}
