//! `tck`: command-line access to triplet-cover verification, construction,
//! shelling, distance completion, reconstruction and exhaustive checks.
//!
//! Exit status is 0 on success, 1 when the property asked about is false
//! (not a cover, not shellable, distances not a tree metric, counterexample
//! found) and 2 on bad input.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use tripcover::cover::cover_report;
use tripcover::io::{format_distances, format_pairs, parse_distances, parse_pairs};
use tripcover::oracle::{all_trees, verify_theorems_up_to, EnumerationReport, DEFAULT_MAX_LEAVES};
use tripcover::shelling::shelling_closure_unchecked;
use tripcover::tree::{default_labels, random_tree};
use tripcover::{
    complete_distances, is_triplet_cover, minimalize, minimum_cover, parse_newick,
    per_vertex_cover, reconstruct_tree, serialize_newick, shelling_closure, DistanceMap, Error,
    PhyloTree, TripletCover, DEFAULT_TOLERANCE,
};

#[derive(Parser)]
#[command(name = "tck", version, about = "Triplet covers of binary phylogenetic trees")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    PerVertex,
    Minimum,
    Minimalize,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a Newick tree and print its canonical form.
    Parse {
        #[arg(long)]
        tree: PathBuf,
    },
    /// Report the cover predicates of a pair set.
    Verify {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        pairs: PathBuf,
    },
    /// Build a triplet cover.
    Construct {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long, value_enum, default_value_t = Strategy::Minimum)]
        strategy: Strategy,
        /// Starting cover for `minimalize`; all pairs when omitted.
        #[arg(long)]
        pairs: Option<PathBuf>,
    },
    /// Run the shelling closure and print the trace or the residual.
    Shell {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        pairs: PathBuf,
        /// Run even when the pairs do not form a triplet cover.
        #[arg(long)]
        force: bool,
    },
    /// Complete distances given on the pairs of a shellable set.
    Complete {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        pairs: PathBuf,
        #[arg(long)]
        dist: PathBuf,
    },
    /// Rebuild the tree and edge lengths from a complete distance file.
    Reconstruct {
        #[arg(long)]
        dist: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Exhaustively check the cover theorems on one tree or on all trees
    /// with a given number of leaves.
    Enumerate {
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        tree: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        /// Largest leaf count accepted (at most 8).
        #[arg(long, default_value_t = DEFAULT_MAX_LEAVES)]
        max_n: usize,
    },
    /// Generate a uniformly random tree topology.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge lengths drawn uniformly from `LO,HI`.
        #[arg(long, value_parser = parse_range)]
        lengths: Option<(f64, f64)>,
    },
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s.split_once(',').ok_or("expected LO,HI")?;
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t}: {e}"));
    Ok((num(lo)?, num(hi)?))
}

/// A failed run: exit status and message for standard error.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotACover
            | Error::NotShellable { .. }
            | Error::NotAdditive { .. }
            | Error::NonPositiveEdge(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_tree(path: &Path) -> Result<PhyloTree, Failure> {
    parse_newick(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_pairs(tree: &PhyloTree, path: &Path) -> Result<TripletCover, Failure> {
    let pairs = parse_pairs(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    TripletCover::for_tree(tree, pairs).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_distances(path: &Path) -> Result<DistanceMap, Failure> {
    parse_distances(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn pair_list(cover: &TripletCover) -> Vec<[&str; 2]> {
    cover.pairs().map(|(a, b)| [a, b]).collect()
}

fn distance_list(map: &DistanceMap) -> Vec<Value> {
    map.iter().map(|(a, b, d)| json!([a, b, d])).collect()
}

/// Report plus exit status; `text` overrides the generic text rendering.
struct Outcome {
    report: Value,
    text: Option<String>,
    code: u8,
}

impl Outcome {
    fn ok(report: impl Serialize) -> Self {
        Self {
            report: serde_json::to_value(report).expect("reports serialize"),
            text: None,
            code: 0,
        }
    }

    fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }

    fn with_code(mut self, code: u8) -> Self {
        self.code = code;
        self
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Parse { tree } => {
            let t = load_tree(&tree)?;
            Ok(Outcome::ok(json!({
                "newick": serialize_newick(&t),
                "leaves": t.taxa(),
                "interior_vertices": t.interior_vertices().len(),
                "edges": t.edge_count(),
                "has_lengths": t.has_lengths(),
            })))
        }
        Command::Verify { tree, pairs } => {
            let t = load_tree(&tree)?;
            let c = load_pairs(&t, &pairs)?;
            let report = cover_report(&t, &c)?;
            let code = if report.is_cover { 0 } else { 1 };
            Ok(Outcome::ok(report).with_code(code))
        }
        Command::Construct {
            tree,
            strategy,
            pairs,
        } => {
            let t = load_tree(&tree)?;
            let (name, cover) = match strategy {
                Strategy::PerVertex => ("per-vertex", per_vertex_cover(&t)),
                Strategy::Minimum => ("minimum", minimum_cover(&t)),
                Strategy::Minimalize => {
                    let start = match pairs {
                        Some(p) => load_pairs(&t, &p)?,
                        None => TripletCover::full(t.taxa()),
                    };
                    ("minimalize", minimalize(&t, &start)?)
                }
            };
            let text = format_pairs(&cover);
            Ok(Outcome::ok(json!({
                "strategy": name,
                "cover_size": cover.len(),
                "pairs": pair_list(&cover),
            }))
            .with_text(text))
        }
        Command::Shell { tree, pairs, force } => {
            let t = load_tree(&tree)?;
            let c = load_pairs(&t, &pairs)?;
            let outcome = if force {
                shelling_closure_unchecked(&t, &c)?
            } else {
                shelling_closure(&t, &c)?
            };
            let code = if outcome.is_shellable() { 0 } else { 1 };
            let mut out = Outcome::ok(json!({
                "is_cover": is_triplet_cover(&t, &c)?,
                "shellable": outcome.is_shellable(),
                "trace": outcome.trace,
                "residual": outcome.residual.iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
            }));
            let mut text = String::new();
            for s in outcome.trace.steps() {
                let _ = writeln!(text, "{} {} via {}", s.pair.0, s.pair.1, s.quartet());
            }
            for (a, b) in &outcome.residual {
                let _ = writeln!(text, "{a} {b} underivable");
            }
            out = out.with_text(text);
            Ok(out.with_code(code))
        }
        Command::Complete { tree, pairs, dist } => {
            let t = load_tree(&tree)?;
            let c = load_pairs(&t, &pairs)?;
            let partial = load_distances(&dist)?;
            let full = complete_distances(&t, &c, &partial)?;
            Ok(Outcome::ok(json!({ "distances": distance_list(&full) })).with_text(format_distances(&full)))
        }
        Command::Reconstruct { dist, tolerance } => {
            if !(tolerance.is_finite() && tolerance > 0.0) {
                return Err(input_error(format!("tolerance must be positive, got {tolerance}")));
            }
            let full = load_distances(&dist)?;
            let t = reconstruct_tree(&full, tolerance)?;
            let newick = serialize_newick(&t);
            Ok(Outcome::ok(json!({ "newick": newick })).with_text(format!("{newick}\n")))
        }
        Command::Enumerate { tree, n, max_n } => {
            let trees = match (tree, n) {
                (Some(path), _) => vec![load_tree(&path)?],
                (None, Some(n)) => {
                    if !(3..=max_n.min(tripcover::oracle::MAX_LEAVES)).contains(&n) {
                        return Err(Error::SizeLimit {
                            n,
                            limit: max_n.min(tripcover::oracle::MAX_LEAVES),
                        }
                        .into());
                    }
                    all_trees(&default_labels(n))?
                }
                (None, None) => unreachable!("clap requires --tree or --n"),
            };
            let reports = trees
                .iter()
                .map(|t| verify_theorems_up_to(t, max_n))
                .collect::<Result<Vec<_>, _>>()?;
            let violations: u64 = reports.iter().map(|r| r.violations).sum();
            let text = enumeration_table(&reports);
            Ok(Outcome::ok(json!({
                "trees": reports.len(),
                "violations": violations,
                "reports": reports,
            }))
            .with_text(text)
            .with_code(if violations == 0 { 0 } else { 1 }))
        }
        Command::Random { n, seed, lengths } => {
            let t = random_tree(n, seed, lengths)?;
            let newick = serialize_newick(&t);
            Ok(Outcome::ok(json!({ "n": n, "seed": seed, "newick": newick })).with_text(format!("{newick}\n")))
        }
    }
}

fn enumeration_table(reports: &[EnumerationReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<40} {:>3} {:>10} {:>8} {:>8} {:>8} {:>10}",
        "tree", "n", "subsets", "covers", "minimum", "min size", "violations"
    );
    for r in reports {
        let _ = writeln!(
            out,
            "{:<40} {:>3} {:>10} {:>8} {:>8} {:>8} {:>10}",
            r.tree,
            r.n,
            r.subsets_examined,
            r.covers_found,
            r.minimum_covers,
            r.min_cover_size.map_or("-".to_string(), |s| s.to_string()),
            r.violations
        );
    }
    out
}

/// Generic text rendering: one `key: value` line per top-level field.
fn render_text(report: &Value) -> String {
    let mut out = String::new();
    match report {
        Value::Object(map) => {
            for (k, v) in map {
                let shown = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                let _ = writeln!(out, "{k}: {shown}");
            }
        }
        other => {
            let _ = writeln!(out, "{other}");
        }
    }
    out
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("TCK_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| input_error(format!("TCK_THREADS must be a positive integer, got '{raw}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| input_error(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let result = configure_threads().and_then(|()| run(cli));
    match result {
        Ok(outcome) => {
            let body = match format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&outcome.report).expect("json values serialize")
                ),
                Format::Text => outcome.text.unwrap_or_else(|| render_text(&outcome.report)),
            };
            // a closed pipe on stdout is not an error worth reporting
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(body.as_bytes()).and_then(|()| stdout.flush()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("tck: {e}");
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            eprintln!("tck: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
