//! Exhaustive small-instance enumeration.
//!
//! Pair sets over at most 8 leaves fit in a `u32` (28 pairs), bit `k` being
//! the `k`-th pair in lexicographic order. Cover checks test, for each
//! interior vertex, whether the mask contains all three pairs of one of the
//! triples with a leaf in each component. Subsets of a given size are
//! visited in colexicographic order (Gosper's hack); the rank space is cut
//! into contiguous chunks that run in parallel and are merged in rank order,
//! so every result is deterministic.
//!
//! [`verify_theorems`] sweeps every subset for `n <= 6` and checks the
//! lower bound `2n - 3`, the 2-tree characterisation of minimum covers, their
//! shellability and multiplicity, and the support-graph properties, using
//! mask-level code written independently from the library. Minimum covers and
//! a sample of the other subsets are also fed to the library routines and
//! any disagreement is reported.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::cover::{
    is_minimal, is_minimum, is_triplet_cover, support_graph, Layout, TripletCover,
};
use crate::error::{Error, Result};
use crate::newick::serialize_newick;
use crate::shelling::{is_shellable, shelling_closure};
use crate::tree::{Growth, PhyloTree};
use crate::two_tree::is_two_tree;

/// Largest leaf count the enumeration engine accepts.
pub const MAX_LEAVES: usize = 8;
/// Default limit for [`count_minimum_covers`] and [`verify_theorems`].
pub const DEFAULT_MAX_LEAVES: usize = 7;
/// Largest leaf count for which [`verify_theorems`] visits every subset.
pub const FULL_SWEEP_MAX_LEAVES: usize = 6;
/// Counterexamples kept in a report; further ones are only counted.
const MAX_COUNTEREXAMPLES: usize = 50;
/// Every `SAMPLE_STRIDE`-th subset is cross-checked against the library.
const SAMPLE_STRIDE: u64 = 211;

/// All `(2n - 5)!!` binary trees on `labels`, for 3 to 9 labels.
pub fn all_trees(labels: &[String]) -> Result<Vec<PhyloTree>> {
    if labels.len() < 3 {
        return Err(Error::TooFewLeaves(labels.len()));
    }
    if labels.len() > 9 {
        return Err(Error::SizeLimit {
            n: labels.len(),
            limit: 9,
        });
    }
    let mut out = Vec::new();
    fn grow(g: Growth, rest: &[String], out: &mut Vec<Growth>) {
        match rest.split_first() {
            None => out.push(g),
            Some((label, tail)) => {
                for e in 0..g.edge_count() {
                    let mut next = g.clone();
                    next.attach(e, label);
                    grow(next, tail, out);
                }
            }
        }
    }
    let mut growths = Vec::new();
    grow(Growth::star(&labels[0], &labels[1], &labels[2]), &labels[3..], &mut growths);
    for g in growths {
        out.push(g.finish(None)?);
    }
    Ok(out)
}

fn check_size(n: usize, limit: usize) -> Result<()> {
    if n > limit.min(MAX_LEAVES) {
        Err(Error::SizeLimit {
            n,
            limit: limit.min(MAX_LEAVES),
        })
    } else {
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// The `rank`-th `k`-subset of `0..m` in colexicographic order.
fn unrank(mut rank: u64, k: usize, m: usize) -> u32 {
    let mut mask = 0u32;
    let mut top = m;
    for i in (1..=k).rev() {
        let mut c = i - 1;
        while c + 1 < top && binomial(c + 1, i) <= rank {
            c += 1;
        }
        rank -= binomial(c, i);
        mask |= 1 << c;
        top = c;
    }
    mask
}

/// Next mask with the same popcount (Gosper's hack).
fn next_combination(x: u32) -> u32 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Splits `0..total` into contiguous chunks for parallel work.
fn chunks(total: u64) -> Vec<(u64, u64)> {
    let size = (total / 512).max(4096);
    (0..total.div_ceil(size))
        .map(|k| (k * size, ((k + 1) * size).min(total)))
        .collect()
}

/// Visits `k`-subsets of `0..m` with ranks in `range`.
fn for_each_combination(k: usize, m: usize, range: (u64, u64), mut visit: impl FnMut(u64, u32)) {
    if range.0 >= range.1 {
        return;
    }
    if k == 0 {
        visit(0, 0);
        return;
    }
    let mut mask = unrank(range.0, k, m);
    for rank in range.0..range.1 {
        visit(rank, mask);
        if rank + 1 < range.1 {
            mask = next_combination(mask);
        }
    }
}

/// Bitmask tables for one tree.
struct Engine {
    n: usize,
    pairs: Vec<(usize, usize)>,
    bit: Vec<Vec<u32>>,
    incident: Vec<u32>,
    /// Per interior vertex: the transversal triples as (pair mask, leaf mask).
    triples: Vec<Vec<(u32, u16)>>,
    /// Interior vertex next to each leaf.
    adjacent: Vec<usize>,
    /// Per leaf `x`: transversal triple masks of every interior vertex of `T - x`.
    minus: Vec<Vec<Vec<u32>>>,
    /// Per pair: masks of the five other pairs of each witnessing quartet.
    witnesses: Vec<Vec<u32>>,
}

fn transversal_triples(side: &[Vec<u8>], bit: &dyn Fn(usize, usize) -> u32) -> Vec<Vec<(u32, u16)>> {
    side.iter()
        .map(|s| {
            let n = s.len();
            let mut out = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        if s[a] != s[b] && s[a] != s[c] && s[b] != s[c] {
                            let pm = bit(a, b) | bit(a, c) | bit(b, c);
                            out.push((pm, (1 << a) | (1 << b) | (1 << c)));
                        }
                    }
                }
            }
            out
        })
        .collect()
}

impl Engine {
    fn new(tree: &PhyloTree) -> Result<Self> {
        let n = tree.leaf_count();
        check_size(n, MAX_LEAVES)?;
        let mut pairs = Vec::new();
        let mut bit = vec![vec![0u32; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                bit[i][j] = 1 << pairs.len();
                bit[j][i] = 1 << pairs.len();
                pairs.push((i, j));
            }
        }
        let incident = (0..n).map(|i| (0..n).fold(0, |acc, j| acc | bit[i][j])).collect();
        let layout = Layout::new(tree);
        let triples = transversal_triples(&layout.side, &|a, b| bit[a][b]);

        let mut minus = Vec::with_capacity(n);
        if n > 3 {
            for x in 0..n {
                let smaller = tree.remove_leaf(&tree.taxa()[x])?;
                let back: Vec<usize> = (0..n).filter(|&i| i != x).collect();
                let sub = Layout::new(&smaller);
                let masks = transversal_triples(&sub.side, &|a, b| bit[back[a]][back[b]]);
                minus.push(masks.into_iter().map(|v| v.into_iter().map(|t| t.0).collect()).collect());
            }
        }

        let mut witnesses = vec![Vec::new(); pairs.len()];
        for (p, &(a, b)) in pairs.iter().enumerate() {
            for x in 0..n {
                for y in 0..n {
                    if [a, b].contains(&x) || [a, b, x].contains(&y) {
                        continue;
                    }
                    let (ta, tb, tx, ty) = (
                        tree.taxa()[a].as_str(),
                        tree.taxa()[b].as_str(),
                        tree.taxa()[x].as_str(),
                        tree.taxa()[y].as_str(),
                    );
                    let q = tree.quartet_topology([ta, tb, tx, ty])?;
                    if q.groups(tx, ta) && q.groups(ty, tb) {
                        witnesses[p].push(bit[a][x] | bit[b][x] | bit[a][y] | bit[b][y] | bit[x][y]);
                    }
                }
            }
        }
        Ok(Self {
            n,
            pairs,
            bit,
            incident,
            triples,
            adjacent: layout.adjacent,
            minus,
            witnesses,
        })
    }

    fn m(&self) -> usize {
        self.pairs.len()
    }

    fn full(&self) -> u32 {
        if self.m() == 32 {
            u32::MAX
        } else {
            (1u32 << self.m()) - 1
        }
    }

    /// Every leaf lies in at least two pairs; necessary for a cover since the
    /// vertex next to `x` is only supported by triples through `x`.
    fn degree_prune(&self, mask: u32) -> bool {
        self.incident.iter().all(|&inc| (mask & inc).count_ones() >= 2)
    }

    fn covers(&self, mask: u32) -> bool {
        self.triples
            .iter()
            .all(|ts| ts.iter().any(|&(pm, _)| mask & pm == pm))
    }

    /// Leaves in every supporting triple of each interior vertex, or `None`
    /// for an unsupported vertex.
    fn forced(&self, mask: u32) -> Vec<Option<u16>> {
        self.triples
            .iter()
            .map(|ts| {
                ts.iter()
                    .filter(|&&(pm, _)| mask & pm == pm)
                    .map(|&(_, lm)| lm)
                    .reduce(|a, b| a & b)
            })
            .collect()
    }

    fn multiplicity(&self, mask: u32, x: usize) -> u32 {
        (mask & self.incident[x]).count_ones()
    }

    fn covers_minus(&self, x: usize, mask: u32) -> bool {
        self.minus[x]
            .iter()
            .all(|ts| ts.iter().any(|&pm| mask & pm == pm))
    }

    /// 2-tree test by peeling degree-2 vertices with adjacent neighbours.
    fn two_tree(&self, mask: u32) -> bool {
        if mask.count_ones() as usize != 2 * self.n - 3 {
            return false;
        }
        let mut adj: Vec<u16> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .filter(|&j| j != i && mask & self.bit[i][j] != 0)
                    .fold(0u16, |acc, j| acc | (1 << j))
            })
            .collect();
        let mut alive: u16 = ((1u32 << self.n) - 1) as u16;
        while alive.count_ones() > 2 {
            let pick = (0..self.n).find(|&v| {
                alive & (1 << v) != 0 && adj[v].count_ones() == 2 && {
                    let u = adj[v].trailing_zeros() as usize;
                    let w = (adj[v] & !(1 << u)).trailing_zeros() as usize;
                    adj[u] & (1 << w) != 0
                }
            });
            let Some(v) = pick else { return false };
            for u in 0..self.n {
                adj[u] &= !(1 << v);
            }
            adj[v] = 0;
            alive &= !(1 << v);
        }
        true
    }

    /// Pairs never derived by the shelling closure.
    fn shelling_residual(&self, mask: u32) -> u32 {
        let mut known = mask;
        loop {
            let before = known;
            for p in 0..self.m() {
                if known & (1 << p) == 0 && self.witnesses[p].iter().any(|&w| known & w == w) {
                    known |= 1 << p;
                }
            }
            if known == before {
                return self.full() & !known;
            }
        }
    }

    fn to_cover(&self, tree: &PhyloTree, mask: u32) -> TripletCover {
        TripletCover::from_indices(
            tree.taxa().to_vec(),
            (0..self.m())
                .filter(|&p| mask & (1 << p) != 0)
                .map(|p| self.pairs[p])
                .collect(),
        )
    }

    fn pair_words(&self, tree: &PhyloTree, mask: u32) -> Vec<String> {
        (0..self.m())
            .filter(|&p| mask & (1 << p) != 0)
            .map(|p| {
                let (a, b) = self.pairs[p];
                format!("{} {}", tree.taxa()[a], tree.taxa()[b])
            })
            .collect()
    }

    fn count_covers(&self, size: usize) -> u64 {
        let m = self.m();
        chunks(binomial(m, size))
            .into_par_iter()
            .map(|range| {
                let mut count = 0;
                for_each_combination(size, m, range, |_, mask| {
                    if self.degree_prune(mask) && self.covers(mask) {
                        count += 1;
                    }
                });
                count
            })
            .sum()
    }
}

/// Every triplet cover of `tree` with exactly `size` pairs, in
/// colexicographic order of their pair masks. Needs `3 <= n <= 8`.
pub fn enumerate_covers(tree: &PhyloTree, size: usize) -> Result<Vec<TripletCover>> {
    let engine = Engine::new(tree)?;
    let m = engine.m();
    if size > m {
        return Ok(Vec::new());
    }
    let parts: Vec<Vec<u32>> = chunks(binomial(m, size))
        .into_par_iter()
        .map(|range| {
            let mut found = Vec::new();
            for_each_combination(size, m, range, |_, mask| {
                if engine.degree_prune(mask) && engine.covers(mask) {
                    found.push(mask);
                }
            });
            found
        })
        .collect();
    Ok(parts
        .into_iter()
        .flatten()
        .map(|mask| engine.to_cover(tree, mask))
        .collect())
}

/// Number of triplet covers of size `2n - 3`, for up to 7 leaves.
pub fn count_minimum_covers(tree: &PhyloTree) -> Result<u64> {
    count_minimum_covers_up_to(tree, DEFAULT_MAX_LEAVES)
}

/// [`count_minimum_covers`] with a caller-chosen leaf limit (at most 8).
pub fn count_minimum_covers_up_to(tree: &PhyloTree, max_leaves: usize) -> Result<u64> {
    check_size(tree.leaf_count(), max_leaves)?;
    Ok(Engine::new(tree)?.count_covers(2 * tree.leaf_count() - 3))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub property: String,
    pub pairs: Vec<String>,
}

/// Outcome of [`verify_theorems`] on one tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    /// Canonical Newick of the tree.
    pub tree: String,
    pub n: usize,
    /// `"full"` when every subset was visited, `"minimum-sizes"` when only
    /// sizes `2n - 4` and `2n - 3` were.
    pub sweep: String,
    pub subsets_examined: u64,
    pub covers_found: u64,
    pub minimum_covers: u64,
    pub min_cover_size: Option<usize>,
    pub covers_by_size: BTreeMap<usize, u64>,
    pub minimal_covers_by_size: BTreeMap<usize, u64>,
    pub two_tree_covers: u64,
    /// Covers of any size whose shelling closure reaches every pair.
    pub shellable_covers: u64,
    pub shellable_minimum_covers: u64,
    pub library_cross_checks: u64,
    pub violations: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl EnumerationReport {
    pub fn is_clean(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Default)]
struct Tally {
    subsets: u64,
    covers_by_size: BTreeMap<usize, u64>,
    minimal_by_size: BTreeMap<usize, u64>,
    two_tree: u64,
    shellable: u64,
    shellable_minimum: u64,
    cross_checks: u64,
    violations: u64,
    counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.subsets += other.subsets;
        for (k, v) in other.covers_by_size {
            *self.covers_by_size.entry(k).or_default() += v;
        }
        for (k, v) in other.minimal_by_size {
            *self.minimal_by_size.entry(k).or_default() += v;
        }
        self.two_tree += other.two_tree;
        self.shellable += other.shellable;
        self.shellable_minimum += other.shellable_minimum;
        self.cross_checks += other.cross_checks;
        self.violations += other.violations;
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples.extend(other.counterexamples.into_iter().take(room));
        self
    }
}

struct Sweep<'a> {
    tree: &'a PhyloTree,
    engine: Engine,
}

impl Sweep<'_> {
    fn flag(&self, tally: &mut Tally, property: &str, mask: u32) {
        tally.violations += 1;
        if tally.counterexamples.len() < MAX_COUNTEREXAMPLES {
            tally.counterexamples.push(Counterexample {
                property: property.to_string(),
                pairs: self.engine.pair_words(self.tree, mask),
            });
        }
    }

    fn visit(&self, tally: &mut Tally, rank: u64, mask: u32) {
        let e = &self.engine;
        let n = e.n;
        let size = mask.count_ones() as usize;
        tally.subsets += 1;
        let is_cover = e.covers(mask);
        let sampled = rank.is_multiple_of(SAMPLE_STRIDE);
        if !is_cover {
            if sampled {
                tally.cross_checks += 1;
                let c = e.to_cover(self.tree, mask);
                if is_triplet_cover(self.tree, &c) != Ok(false) {
                    self.flag(tally, "library is_triplet_cover disagrees", mask);
                }
            }
            return;
        }
        *tally.covers_by_size.entry(size).or_default() += 1;

        // deletions that keep a cover decide minimality and feed (P2)
        let forced = e.forced(mask);
        let mut minimal = true;
        for p in 0..e.m() {
            let sub = mask & !(1 << p);
            if sub != mask && e.covers(sub) {
                minimal = false;
                let sub_forced = e.forced(sub);
                let kept = forced
                    .iter()
                    .zip(&sub_forced)
                    .all(|(f, g)| f.unwrap_or(0) & !g.unwrap_or(0) == 0);
                if !kept {
                    self.flag(tally, "P2", mask);
                }
            }
        }
        if minimal {
            *tally.minimal_by_size.entry(size).or_default() += 1;
        }

        let two_tree = e.two_tree(mask);
        let minimum = size == 2 * n - 3;
        if two_tree {
            tally.two_tree += 1;
        }
        if size < 2 * n - 3 {
            self.flag(tally, "Proposition 4", mask);
        }
        if minimum != two_tree {
            self.flag(tally, "Theorem 1", mask);
        }
        if minimum && !minimal {
            self.flag(tally, "minimum implies minimal", mask);
        }

        let shellable = e.shelling_residual(mask) == 0;
        if shellable {
            tally.shellable += 1;
        }

        let mus: Vec<u32> = (0..n).map(|x| e.multiplicity(mask, x)).collect();
        let mu = *mus.iter().min().unwrap();
        let leaf_degree: Vec<usize> = (0..n)
            .map(|x| forced.iter().filter(|f| f.is_some_and(|f| f & (1 << x) != 0)).count())
            .collect();

        // (P1) and (P4)
        if forced.iter().any(|f| f.is_some_and(|f| f.count_ones() > 3))
            || leaf_degree.iter().any(|&d| d < 1 || d > n - 2)
        {
            self.flag(tally, "P1", mask);
        }
        if (0..n).any(|x| forced[e.adjacent[x]].is_none_or(|f| f & (1 << x) == 0)) {
            self.flag(tally, "P4", mask);
        }
        // (P3)
        if minimal
            && e.pairs.iter().enumerate().any(|(p, &(a, b))| {
                mask & (1 << p) != 0
                    && !forced
                        .iter()
                        .any(|f| f.is_some_and(|f| f & (1 << a) != 0 && f & (1 << b) != 0))
            })
        {
            self.flag(tally, "P3", mask);
        }
        for x in 0..n {
            let rest = mask & !e.incident[x];
            // (P5)
            if n > 3 && (leaf_degree[x] == 1) != e.covers_minus(x, rest) {
                self.flag(tally, "P5", mask);
            }
            // (P6)
            if leaf_degree[x] == 1 && size < rest.count_ones() as usize + 2 {
                self.flag(tally, "P6", mask);
            }
            // Lemma 2
            if mus[x] == 2 && leaf_degree[x] != 1 {
                self.flag(tally, "Lemma 2", mask);
            }
        }
        if minimal && !(2..=5).contains(&mu) {
            self.flag(tally, "M1", mask);
        }
        if minimal && size > 3 * (n - 2) {
            self.flag(tally, "Corollary 1", mask);
        }
        if minimum {
            if !(2..=3).contains(&mu) {
                self.flag(tally, "M2", mask);
            }
            if mu != 2 {
                self.flag(tally, "Corollary 2", mask);
            }
            if shellable {
                tally.shellable_minimum += 1;
            } else {
                self.flag(tally, "S3", mask);
            }
        }

        if minimum || sampled {
            tally.cross_checks += 1;
            self.cross_check(tally, mask, minimal, minimum, two_tree, mu, &leaf_degree);
        }
    }

    /// Compares the mask-level verdicts with the library on one cover.
    #[allow(clippy::too_many_arguments)]
    fn cross_check(
        &self,
        tally: &mut Tally,
        mask: u32,
        minimal: bool,
        minimum: bool,
        two_tree: bool,
        mu: u32,
        leaf_degree: &[usize],
    ) {
        let c = self.engine.to_cover(self.tree, mask);
        let t = self.tree;
        let agree = is_triplet_cover(t, &c) == Ok(true)
            && is_minimal(t, &c) == Ok(minimal)
            && is_minimum(t, &c) == Ok(minimum)
            && is_two_tree(&c.cover_graph()).map(|o| o.is_some()) == Ok(two_tree)
            && c.min_multiplicity() == mu as usize;
        if !agree {
            self.flag(tally, "library predicates disagree", mask);
        }
        let Ok(g) = support_graph(t, &c) else {
            return self.flag(tally, "library support_graph failed", mask);
        };
        let degrees_agree = t
            .taxa()
            .iter()
            .zip(leaf_degree)
            .all(|(x, &d)| g.leaf_degree(x) == Ok(d));
        if !degrees_agree {
            self.flag(tally, "library support graph disagrees", mask);
        }
        let residual = self.engine.shelling_residual(mask);
        match shelling_closure(t, &c) {
            Ok(out) => {
                if out.is_shellable() != (residual == 0)
                    || out.residual.len() != residual.count_ones() as usize
                    || out.trace.replay(t, &c).is_err()
                {
                    self.flag(tally, "library shelling disagrees", mask);
                }
            }
            Err(_) => self.flag(tally, "library shelling failed", mask),
        }
    }
}

/// Checks the cover theorems on every pair subset of `tree` (up to 6
/// leaves), or on every subset of sizes `2n - 4` and `2n - 3` (7 leaves).
/// Since supersets of covers are covers, finding no cover of size `2n - 4`
/// rules out every smaller cover as well.
pub fn verify_theorems(tree: &PhyloTree) -> Result<EnumerationReport> {
    verify_theorems_up_to(tree, DEFAULT_MAX_LEAVES)
}

/// [`verify_theorems`] with a caller-chosen leaf limit (at most 8).
pub fn verify_theorems_up_to(tree: &PhyloTree, max_leaves: usize) -> Result<EnumerationReport> {
    let n = tree.leaf_count();
    check_size(n, max_leaves)?;
    let sweep = Sweep {
        tree,
        engine: Engine::new(tree)?,
    };
    let m = sweep.engine.m();
    let full = n <= FULL_SWEEP_MAX_LEAVES;
    let sizes: Vec<usize> = if full {
        (0..=m).collect()
    } else {
        vec![2 * n - 4, 2 * n - 3]
    };
    let mut tally = Tally::default();
    for size in sizes {
        let parts: Vec<Tally> = chunks(binomial(m, size))
            .into_par_iter()
            .map(|range| {
                let mut t = Tally::default();
                for_each_combination(size, m, range, |rank, mask| sweep.visit(&mut t, rank, mask));
                t
            })
            .collect();
        tally = parts.into_iter().fold(tally, Tally::merge);
    }
    let minimum_covers = tally.covers_by_size.get(&(2 * n - 3)).copied().unwrap_or(0);
    Ok(EnumerationReport {
        tree: serialize_newick(&tree.topology()),
        n,
        sweep: if full { "full" } else { "minimum-sizes" }.to_string(),
        subsets_examined: tally.subsets,
        covers_found: tally.covers_by_size.values().sum(),
        minimum_covers,
        min_cover_size: tally.covers_by_size.keys().next().copied(),
        covers_by_size: tally.covers_by_size,
        minimal_covers_by_size: tally.minimal_by_size,
        two_tree_covers: tally.two_tree,
        shellable_covers: tally.shellable,
        shellable_minimum_covers: tally.shellable_minimum,
        library_cross_checks: tally.cross_checks,
        violations: tally.violations,
        counterexamples: tally.counterexamples,
    })
}

/// How a pair set relates to the cover notions for a tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverClass {
    NotACover,
    NotMinimal,
    MinimalNotMinimum,
    Minimum,
}

pub fn classify(tree: &PhyloTree, cover: &TripletCover) -> Result<CoverClass> {
    if !is_triplet_cover(tree, cover)? {
        return Ok(CoverClass::NotACover);
    }
    Ok(if is_minimum(tree, cover)? {
        CoverClass::Minimum
    } else if is_minimal(tree, cover)? {
        CoverClass::MinimalNotMinimum
    } else {
        CoverClass::NotMinimal
    })
}

/// Names of the support-graph and multiplicity properties that fail for a
/// triplet cover, computed with the library routines. An empty list means
/// every property holds.
pub fn check_properties(tree: &PhyloTree, cover: &TripletCover) -> Result<Vec<String>> {
    if !is_triplet_cover(tree, cover)? {
        return Err(Error::NotACover);
    }
    let n = tree.leaf_count();
    let size = cover.len();
    let g = support_graph(tree, cover)?;
    let minimal = is_minimal(tree, cover)?;
    let minimum = is_minimum(tree, cover)?;
    let mu = cover.min_multiplicity();
    let mut failed = Vec::new();
    let mut fail = |name: &str| {
        if !failed.iter().any(|f: &String| f == name) {
            failed.push(name.to_string());
        }
    };

    for v in tree.interior_vertices() {
        if g.vertex_degree(v)? > 3 {
            fail("P1");
        }
    }
    for x in tree.taxa() {
        let d = g.leaf_degree(x)?;
        if d < 1 || d > n - 2 {
            fail("P1");
        }
        let next = tree.neighbors(tree.leaf(x)?).next().expect("leaf has a neighbour");
        if !g.contains(x, next) {
            fail("P4");
        }
        let mu_x = cover.multiplicity(x)?;
        if n > 3 {
            let rest = cover.remove_incident(x)?;
            let covers_rest = is_triplet_cover(&tree.remove_leaf(x)?, &rest)?;
            if (d == 1) != covers_rest {
                fail("P5");
            }
            if d == 1 && size < rest.len() + 2 {
                fail("P6");
            }
        }
        if mu_x == 2 && d != 1 {
            fail("Lemma 2");
        }
    }
    for (a, b) in cover.pairs() {
        let sub = cover.without_pair(a, b)?;
        if is_triplet_cover(tree, &sub)? {
            let h = support_graph(tree, &sub)?;
            if g.edges().iter().any(|&(x, v)| !h.contains(x, v)) {
                fail("P2");
            }
        }
        if minimal && !g.joins(a, b) {
            fail("P3");
        }
    }
    if minimal && !(2..=5).contains(&mu) {
        fail("M1");
    }
    if minimal && size > 3 * (n - 2) {
        fail("Corollary 1");
    }
    if size < 2 * n - 3 {
        fail("Proposition 4");
    }
    let two_tree = is_two_tree(&cover.cover_graph())?.is_some();
    if minimum != two_tree {
        fail("Theorem 1");
    }
    if minimum {
        if !(2..=3).contains(&mu) {
            fail("M2");
        }
        if mu != 2 {
            fail("Corollary 2");
        }
        if !is_shellable(tree, cover)? {
            fail("S3");
        }
    }
    Ok(failed)
}

/// Cover test straight from the definition: every interior vertex is the
/// median of some triple, taken from its three components, whose pairs are
/// all in the set.
pub fn naive_is_cover(tree: &PhyloTree, cover: &TripletCover) -> Result<bool> {
    for v in tree.interior_vertices() {
        let [p, q, r] = tree.components_at(v)?;
        let supported = p.iter().any(|a| {
            q.iter().any(|b| {
                r.iter()
                    .any(|c| cover.contains(a, b) && cover.contains(a, c) && cover.contains(b, c))
            })
        });
        if !supported {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimality straight from the definition: no single deletion keeps a cover.
pub fn naive_is_minimal(tree: &PhyloTree, cover: &TripletCover) -> Result<bool> {
    for (a, b) in cover.pairs() {
        if naive_is_cover(tree, &cover.without_pair(a, b)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}
