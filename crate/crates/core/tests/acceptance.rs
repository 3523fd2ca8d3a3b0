//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit status
//! when any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use tripcover::io::parse_pairs;
use tripcover::oracle::{
    all_trees, check_properties, count_minimum_covers, enumerate_covers, verify_theorems,
    EnumerationReport,
};
use tripcover::shelling::shelling_closure_unchecked;
use tripcover::tree::default_labels;
use tripcover::{
    complete_distances, is_minimal, is_minimum, is_triplet_cover, is_two_tree, minimalize,
    minimum_cover, parse_newick, per_vertex_cover, random_tree, reconstruct_tree,
    shelling_closure, support_set, unsupported_vertices, Error, PhyloTree, TripletCover, VertexId,
};

/// Absolute tolerance on distances and edge lengths.
const LENGTH_TOLERANCE: f64 = 1e-9;
const FIXTURE_BUDGET: Duration = Duration::from_secs(1);
const SWEEP_BUDGET: Duration = Duration::from_secs(60);
const PIPELINE_BUDGET: Duration = Duration::from_secs(120);
const PIPELINE_TREES: u64 = 500;
const PROPERTY_INSTANCES: u64 = 200;

fn fixture(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn tree_fixture(name: &str) -> PhyloTree {
    parse_newick(&fixture(name)).unwrap()
}

fn cover_fixture(tree: &PhyloTree, name: &str) -> TripletCover {
    TripletCover::for_tree(tree, parse_pairs(&fixture(name)).unwrap()).unwrap()
}

fn next_to(tree: &PhyloTree, leaf: &str) -> VertexId {
    tree.neighbors(tree.leaf(leaf).unwrap()).next().unwrap()
}

/// Collects failed checks for one criterion.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
}

impl Checks {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn within(&mut self, start: Instant, budget: Duration) -> Duration {
        let took = start.elapsed();
        self.expect(took < budget, format!("took {took:.2?}, budget {budget:?}"));
        took
    }
}

fn criterion_1() -> (Checks, String) {
    let start = Instant::now();
    let mut c = Checks::default();
    let t = tree_fixture("fig1.nwk");
    let cover = cover_fixture(&t, "fig1.pairs");
    let n = t.leaf_count();
    c.expect(is_triplet_cover(&t, &cover) == Ok(true), "is_cover");
    c.expect(is_minimal(&t, &cover) == Ok(true), "is_minimal");
    c.expect(cover.len() == 7 && cover.len() == 2 * n - 3, "size 7 = 2n-3");
    c.expect(is_minimum(&t, &cover) == Ok(true), "is_minimum");
    c.expect(matches!(is_two_tree(&cover.cover_graph()), Ok(Some(_))), "2-tree");
    let out = shelling_closure(&t, &cover).unwrap();
    let order: Vec<String> = out
        .trace
        .steps()
        .iter()
        .map(|s| format!("{}{}", s.pair.0, s.pair.1))
        .collect();
    c.expect(out.is_shellable(), "shellable");
    c.expect(order == ["ae", "ad", "bd"], format!("order {order:?}"));
    let first = &out.trace.steps()[0];
    c.expect(first.quartet() == "ba|ce", format!("first witness {}", first.quartet()));
    c.expect(out.trace.replay(&t, &cover).is_ok(), "trace replays");
    let took = c.within(start, FIXTURE_BUDGET);
    (c, format!("order {} with witness ba|ce, {took:.2?}", order.join(",")))
}

fn criterion_2() -> (Checks, String) {
    let start = Instant::now();
    let mut c = Checks::default();
    let t = tree_fixture("fig2i.nwk");
    let cover = cover_fixture(&t, "example2.pairs");
    c.expect(cover.len() == 14, "14 pairs");
    c.expect(is_triplet_cover(&t, &cover) == Ok(true), "is_cover");
    c.expect(is_minimal(&t, &cover) == Ok(true), "is_minimal");
    c.expect(is_minimum(&t, &cover) == Ok(false), "is_minimum false");
    c.expect(matches!(is_two_tree(&cover.cover_graph()), Ok(None)), "2-tree rejected");
    // interior vertices from left to right: next to a, g, c, h, d, e
    let spine = ["a", "g", "c", "h", "d", "e"];
    let listed = [["a", "b", "c"], ["f", "g", "h"], ["c", "b", "d"], ["f", "g", "h"], ["d", "e", "c"], ["e", "d", "f"]];
    for (k, (leaf, triple)) in spine.iter().zip(listed).enumerate() {
        let s = support_set(&t, &cover, next_to(&t, leaf)).unwrap();
        if !s.contains(triple[0], triple[1], triple[2]) {
            let actual: Vec<String> = s.triples().iter().map(|x| x.concat()).collect();
            c.expect(
                false,
                format!(
                    "listed triple {} is not in the support of interior vertex {} (support: {})",
                    triple.concat(),
                    k + 1,
                    actual.join(" ")
                ),
            );
        }
    }
    let took = c.within(start, FIXTURE_BUDGET);
    (c, format!("minimal, not minimum, 2-tree rejected, listed triples found, {took:.2?}"))
}

fn criterion_3() -> (Checks, String) {
    let start = Instant::now();
    let mut c = Checks::default();
    let t = tree_fixture("fig2ii.nwk");
    let pairs = cover_fixture(&t, "l7.pairs");
    c.expect(pairs.len() == 11, "11 pairs");
    c.expect(is_triplet_cover(&t, &pairs) == Ok(false), "is_cover false");
    let unsupported = unsupported_vertices(&t, &pairs).unwrap();
    c.expect(unsupported.contains(&next_to(&t, "a")), "vertex next to cherry {a,b} unsupported");
    c.expect(shelling_closure(&t, &pairs) == Err(Error::NotACover), "closure refuses a non-cover");
    let out = shelling_closure_unchecked(&t, &pairs).unwrap();
    c.expect(!out.residual.is_empty(), "nonempty residual");
    let took = c.within(start, FIXTURE_BUDGET);
    (c, format!("{} unsupported vertices, residual of {} pairs, {took:.2?}", unsupported.len(), out.residual.len()))
}

/// Full sweeps for n = 4, 5, 6, shared by criteria 4, 5, 6 and 8.
struct Sweeps {
    reports: BTreeMap<usize, Vec<EnumerationReport>>,
    took: Duration,
}

fn run_sweeps() -> Sweeps {
    let start = Instant::now();
    let reports = (4..=6)
        .map(|n| {
            let trees = all_trees(&default_labels(n)).unwrap();
            (n, trees.iter().map(|t| verify_theorems(t).unwrap()).collect())
        })
        .collect();
    Sweeps {
        reports,
        took: start.elapsed(),
    }
}

fn counterexamples_named(reports: &[EnumerationReport], names: &[&str]) -> usize {
    reports
        .iter()
        .flat_map(|r| &r.counterexamples)
        .filter(|c| names.contains(&c.property.as_str()))
        .count()
}

fn criterion_4(sweeps: &Sweeps) -> (Checks, String) {
    let start = Instant::now();
    let mut c = Checks::default();
    let mut trees_checked = 0;
    for (n, want) in [(5, 15), (6, 105)] {
        let trees = all_trees(&default_labels(n)).unwrap();
        c.expect(trees.len() == want, format!("{} topologies on {n} leaves", trees.len()));
        for t in &trees {
            // no cover of size 2n-4 rules out every smaller size too
            let below = enumerate_covers(t, 2 * n - 4).unwrap();
            c.expect(below.is_empty(), format!("cover of size {} on {:?}", 2 * n - 4, t.taxa()));
            trees_checked += 1;
        }
        let reports = &sweeps.reports[&n];
        c.expect(
            reports.iter().all(|r| r.min_cover_size == Some(2 * n - 3)),
            format!("smallest cover size on {n} leaves"),
        );
        c.expect(counterexamples_named(reports, &["Proposition 4"]) == 0, "Proposition 4 counterexample");
    }
    let took = start.elapsed() + sweeps.took;
    c.expect(took < SWEEP_BUDGET, format!("took {took:.2?}"));
    (c, format!("{trees_checked} topologies, no cover below 2n-3, {took:.2?}"))
}

fn criterion_5(sweeps: &Sweeps) -> (Checks, String) {
    let mut c = Checks::default();
    let mut minimum = 0;
    for (n, reports) in &sweeps.reports {
        for r in reports {
            let at_bound = r.covers_by_size.get(&(2 * n - 3)).copied().unwrap_or(0);
            c.expect(at_bound > 0 && r.minimum_covers == at_bound, format!("minimum count on {}", r.tree));
            c.expect(r.two_tree_covers == r.minimum_covers, format!("2-tree covers on {}", r.tree));
            minimum += r.minimum_covers;
        }
        c.expect(counterexamples_named(reports, &["Theorem 1"]) == 0, "Theorem 1 counterexample");
    }
    c.expect(sweeps.took < SWEEP_BUDGET, format!("sweep took {:.2?}", sweeps.took));
    (c, format!("{minimum} minimum covers, all with 2-tree graphs and conversely, {:.2?}", sweeps.took))
}

fn criterion_6(sweeps: &Sweeps) -> (Checks, String) {
    let mut c = Checks::default();
    let mut minimum = 0;
    let mut cross = 0;
    for reports in sweeps.reports.values() {
        for r in reports {
            c.expect(r.shellable_minimum_covers == r.minimum_covers, format!("shellable on {}", r.tree));
            minimum += r.minimum_covers;
            cross += r.library_cross_checks;
        }
        c.expect(
            counterexamples_named(reports, &["S3", "Corollary 2", "M2"]) == 0,
            "S3 / multiplicity counterexample",
        );
        c.expect(
            reports.iter().flat_map(|r| &r.counterexamples).all(|x| !x.property.starts_with("library")),
            "library disagrees with the enumeration engine",
        );
    }
    (c, format!("{minimum} minimum covers shellable with multiplicity 2, {cross} library cross-checks"))
}

fn criterion_7() -> (Checks, String) {
    let start = Instant::now();
    let mut c = Checks::default();
    let mut worst_distance: f64 = 0.0;
    let mut worst_length: f64 = 0.0;
    for seed in 0..PIPELINE_TREES {
        let n = 4 + (seed % 9) as usize;
        let t = random_tree(n, seed, Some((0.1, 10.0))).unwrap();
        let cover = minimum_cover(&t);
        let partial = t.leaf_distances(cover.pairs().collect::<Vec<_>>()).unwrap();
        let full = match complete_distances(&t, &cover, &partial) {
            Ok(full) => full,
            Err(e) => {
                c.expect(false, format!("seed {seed}: completion failed: {e}"));
                continue;
            }
        };
        worst_distance = worst_distance.max(full.max_abs_difference(&t.all_leaf_distances().unwrap()).unwrap());
        match reconstruct_tree(&full, LENGTH_TOLERANCE) {
            Ok(back) => {
                c.expect(back.is_isomorphic(&t), format!("seed {seed}: topology differs"));
                worst_length = worst_length.max(back.max_length_error(&t).unwrap_or(f64::INFINITY));
            }
            Err(e) => c.expect(false, format!("seed {seed}: reconstruction failed: {e}")),
        }
    }
    c.expect(worst_distance <= LENGTH_TOLERANCE, format!("distance error {worst_distance:e}"));
    c.expect(worst_length <= LENGTH_TOLERANCE, format!("edge length error {worst_length:e}"));
    let took = c.within(start, PIPELINE_BUDGET);
    (
        c,
        format!("{PIPELINE_TREES} trees, max distance error {worst_distance:.1e}, max edge error {worst_length:.1e}, {took:.2?}"),
    )
}

fn criterion_8(sweeps: &Sweeps) -> (Checks, String) {
    let mut c = Checks::default();
    let mut checked = 0;
    let mut assess = |c: &mut Checks, t: &PhyloTree, cover: &TripletCover, what: &str| {
        match check_properties(t, cover) {
            Ok(failed) => c.expect(failed.is_empty(), format!("{what}: {failed:?}")),
            Err(e) => c.expect(false, format!("{what}: {e}")),
        }
        checked += 1;
    };

    let fig1 = tree_fixture("fig1.nwk");
    assess(&mut c, &fig1, &cover_fixture(&fig1, "fig1.pairs"), "Fig. 1 cover");
    let fig2 = tree_fixture("fig2i.nwk");
    assess(&mut c, &fig2, &cover_fixture(&fig2, "example2.pairs"), "Example 2 cover");
    for name in ["fig1.nwk", "fig2i.nwk", "fig2ii.nwk", "star3.nwk", "quartet.nwk"] {
        let t = tree_fixture(name);
        assess(&mut c, &t, &minimum_cover(&t), name);
        assess(&mut c, &t, &per_vertex_cover(&t), name);
    }

    for seed in 0..PROPERTY_INSTANCES {
        let n = 4 + (seed % 9) as usize;
        let t = random_tree(n, 10_000 + seed, None).unwrap();
        let cover = match seed % 4 {
            0 => minimum_cover(&t),
            1 => per_vertex_cover(&t),
            2 => minimalize(&t, &per_vertex_cover(&t)).unwrap(),
            _ => minimalize(&t, &TripletCover::full(t.taxa())).unwrap(),
        };
        assess(&mut c, &t, &cover, &format!("random seed {seed}"));
    }

    let violations: u64 = sweeps.reports.values().flatten().map(|r| r.violations).sum();
    let covers: u64 = sweeps.reports.values().flatten().map(|r| r.covers_found).sum();
    c.expect(violations == 0, format!("{violations} violations in the exhaustive sweep"));
    (c, format!("{checked} library instances and {covers} enumerated covers, zero violations"))
}

fn frozen_count(newick: &str) -> Option<u64> {
    fixture("minimum_cover_counts.tsv")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split('\t').collect::<Vec<_>>())
        .find(|cols| cols[0] == newick)
        .map(|cols| cols[2].parse().unwrap())
}

fn permutations(items: &[String]) -> Vec<Vec<String>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

fn criterion_9() -> (Checks, String) {
    let mut c = Checks::default();
    let star = tree_fixture("star3.nwk");
    let quartet = tree_fixture("quartet.nwk");
    c.expect(count_minimum_covers(&star) == Ok(1), "n=3 count");
    c.expect(count_minimum_covers(&quartet) == Ok(4), "quartet count");

    let fig1 = tree_fixture("fig1.nwk");
    let frozen = frozen_count("((a,b),c,(d,e));");
    let first = count_minimum_covers(&fig1).unwrap();
    c.expect(frozen == Some(first), format!("Fig. 1 count {first}, frozen {frozen:?}"));
    c.expect(count_minimum_covers(&fig1) == Ok(first), "stable across re-runs");

    // every relabelling by a permutation of the leaves, plus fresh names
    let labels = fig1.taxa().to_vec();
    let mut relabelled = 0;
    for p in permutations(&labels) {
        let map: BTreeMap<&str, &str> = labels.iter().map(String::as_str).zip(p.iter().map(String::as_str)).collect();
        let t = fig1.relabel(|x| map[x].to_string()).unwrap();
        c.expect(count_minimum_covers(&t) == Ok(first), format!("relabelling {p:?}"));
        relabelled += 1;
    }
    let fresh = fig1.relabel(|x| format!("taxon_{x}")).unwrap();
    c.expect(count_minimum_covers(&fresh) == Ok(first), "fresh labels");

    let mut rows = 0;
    for line in fixture("minimum_cover_counts.tsv").lines().filter(|l| !l.starts_with('#')) {
        let cols: Vec<&str> = line.split('\t').collect();
        let t = parse_newick(cols[0]).unwrap();
        c.expect(
            count_minimum_covers(&t) == Ok(cols[2].parse().unwrap()),
            format!("frozen row {}", cols[0]),
        );
        rows += 1;
    }
    (c, format!("n=3: 1, quartet: 4, Fig. 1: {first} under {relabelled} relabellings, {rows} frozen rows"))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |k: usize, (checks, detail): (Checks, String)| {
        if checks.failures.is_empty() {
            println!("criterion {k}: PASS  {detail}");
        } else {
            failed += 1;
            println!("criterion {k}: FAIL  {}", checks.failures.join("; "));
        }
    };
    report(1, criterion_1());
    report(2, criterion_2());
    report(3, criterion_3());
    let sweeps = run_sweeps();
    report(4, criterion_4(&sweeps));
    report(5, criterion_5(&sweeps));
    report(6, criterion_6(&sweeps));
    report(7, criterion_7());
    report(8, criterion_8(&sweeps));
    report(9, criterion_9());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}
