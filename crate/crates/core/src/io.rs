//! Text formats for pair sets and leaf distances.
//!
//! Pair sets hold one pair per line as two whitespace-separated labels;
//! everything after `#` is a comment and blank lines are skipped. Distances
//! are CSV rows `label1,label2,distance`, also with `#` comments.

use std::collections::BTreeSet;

use crate::cover::TripletCover;
use crate::error::{Error, Result};
use crate::tree::{valid_label, DistanceMap};

/// Reads the pairs of a pair-set file. Repeating a pair, in either order, is
/// an error.
pub fn parse_pairs(text: &str) -> Result<Vec<(String, String)>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        let fail = |message: String| Error::Format { line, message };
        match words.as_slice() {
            [] => continue,
            [a, b] => {
                for w in [a, b] {
                    if !valid_label(w) {
                        return Err(fail(format!("invalid label '{w}'")));
                    }
                }
                if a == b {
                    return Err(fail(format!("pair '{a} {b}' repeats a label")));
                }
                let key = if a < b { (*a, *b) } else { (*b, *a) };
                if !seen.insert(key) {
                    return Err(fail(format!("duplicate pair '{a} {b}'")));
                }
                out.push((a.to_string(), b.to_string()));
            }
            _ => return Err(fail(format!("expected two labels, found {}", words.len()))),
        }
    }
    Ok(out)
}

/// Writes the pairs in lexicographic order, one per line.
pub fn format_pairs(cover: &TripletCover) -> String {
    cover.pairs().map(|(a, b)| format!("{a} {b}\n")).collect()
}

/// Reads a distance CSV.
pub fn parse_distances(text: &str) -> Result<DistanceMap> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut map = DistanceMap::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Format {
            line: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let fail = |message: String| Error::Format { line, message };
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        if record.len() != 3 {
            return Err(fail(format!("expected 3 fields, found {}", record.len())));
        }
        let (a, b) = (&record[0], &record[1]);
        for w in [a, b] {
            if !valid_label(w) {
                return Err(fail(format!("invalid label '{w}'")));
            }
        }
        let value: f64 = record[2]
            .parse()
            .map_err(|_| fail(format!("invalid distance '{}'", &record[2])))?;
        if map.contains(a, b) {
            return Err(fail(format!("duplicate pair '{a} {b}'")));
        }
        map.insert(a, b, value).map_err(|e| fail(e.to_string()))?;
    }
    Ok(map)
}

/// Writes distances in lexicographic pair order using the shortest text that
/// reads back to the same `f64`.
pub fn format_distances(map: &DistanceMap) -> String {
    map.iter().map(|(a, b, d)| format!("{a},{b},{d}\n")).collect()
}
