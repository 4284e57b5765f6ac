//! Deliberately naive reference computations.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use chrono::{Datelike, NaiveDate};
use rtvis_core::PaperRecord;

/// Character-at-a-time tokenizer.
pub fn tokenize(text: &str, stop: &HashSet<String>) -> Vec<String> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut flush = |current: &mut String| {
        let token = std::mem::take(current);
        let long_enough = token.chars().count() > 1;
        let has_non_digit = token.chars().any(|c| !c.is_numeric());
        if long_enough && has_non_digit && !stop.contains(&token) {
            out.push(token);
        }
    };
    for c in text.chars() {
        if c.is_alphabetic() || c.is_numeric() {
            current.extend(c.to_lowercase());
        } else {
            flush(&mut current);
        }
    }
    flush(&mut current);
    out
}

pub fn date_filter(records: &[PaperRecord], from: NaiveDate, to: NaiveDate) -> Vec<PaperRecord> {
    let mut out = Vec::new();
    for r in records {
        if r.pub_date >= from && r.pub_date <= to {
            out.push(r.clone());
        }
    }
    out
}

/// Bucket labels from the earliest to the latest record; `monthly` selects month granularity.
pub fn bucket_labels(records: &[PaperRecord], monthly: bool) -> Vec<String> {
    if records.is_empty() {
        return Vec::new();
    }
    let index = |d: NaiveDate| {
        if monthly {
            d.year() * 12 + d.month0() as i32
        } else {
            d.year()
        }
    };
    let lo = records.iter().map(|r| index(r.pub_date)).min().unwrap();
    let hi = records.iter().map(|r| index(r.pub_date)).max().unwrap();
    (lo..=hi)
        .map(|i| {
            if monthly {
                format!("{:04}-{:02}", i.div_euclid(12), i.rem_euclid(12) + 1)
            } else {
                format!("{i:04}")
            }
        })
        .collect()
}

pub fn label_of(d: NaiveDate, monthly: bool) -> String {
    if monthly {
        format!("{:04}-{:02}", d.year(), d.month())
    } else {
        format!("{:04}", d.year())
    }
}

pub struct PairOracle {
    pub edges: BTreeMap<(String, String), u64>,
    /// author → (collaborator_count, weighted_degree)
    pub nodes: BTreeMap<String, (u64, u64)>,
}

/// Enumerates every ordered author pair and counts the papers listing both.
pub fn cooccurrence(records: &[PaperRecord]) -> PairOracle {
    let mut authors: BTreeSet<String> = BTreeSet::new();
    for r in records {
        authors.extend(r.authors.iter().cloned());
    }
    let mut edges = BTreeMap::new();
    let mut nodes = BTreeMap::new();
    for a in &authors {
        let (mut distinct, mut weighted) = (0, 0);
        for b in &authors {
            if a == b {
                continue;
            }
            let joint = records
                .iter()
                .filter(|r| r.authors.contains(a) && r.authors.contains(b))
                .count() as u64;
            if joint > 0 {
                distinct += 1;
                weighted += joint;
                if a < b {
                    edges.insert((a.clone(), b.clone()), joint);
                }
            }
        }
        nodes.insert(a.clone(), (distinct, weighted));
    }
    PairOracle { edges, nodes }
}

/// Weighted degree as Σ over the author's papers of (|authors| − 1).
pub fn degree_by_paper_sizes(records: &[PaperRecord], author: &str) -> u64 {
    records
        .iter()
        .filter(|r| r.authors.iter().any(|a| a == author))
        .map(|r| r.authors.len() as u64 - 1)
        .sum()
}

/// Authors whose rank (number of authors strictly ahead of them) is below `n`.
pub fn top_n_authors(nodes: &BTreeMap<String, (u64, u64)>, n: usize) -> BTreeSet<String> {
    let ahead = |a: &String, b: &String| {
        let (ca, wa) = nodes[a];
        let (cb, wb) = nodes[b];
        cb > ca || (cb == ca && wb > wa) || (cb == ca && wb == wa && b < a)
    };
    nodes
        .keys()
        .filter(|a| nodes.keys().filter(|b| ahead(a, b)).count() < n)
        .cloned()
        .collect()
}

/// Selection-style ranking: repeatedly extract the best remaining venue.
pub fn venue_ranking(records: &[PaperRecord], n: usize) -> Vec<(String, u64)> {
    let mut remaining: Vec<(String, u64)> = Vec::new();
    for r in records {
        if !remaining.iter().any(|(v, _)| v == &r.venue) {
            let total = records
                .iter()
                .filter(|x| x.venue == r.venue)
                .map(|x| x.citation_count)
                .sum();
            remaining.push((r.venue.clone(), total));
        }
    }
    let mut out = Vec::new();
    while !remaining.is_empty() && out.len() < n {
        let mut best = 0;
        for i in 1..remaining.len() {
            let (v, t) = &remaining[i];
            let (bv, bt) = &remaining[best];
            if t > bt || (t == bt && v < bv) {
                best = i;
            }
        }
        out.push(remaining.remove(best));
    }
    out
}

/// field → counts aligned to `bucket_labels`.
pub fn field_counts(records: &[PaperRecord], monthly: bool) -> (Vec<String>, BTreeMap<String, Vec<u64>>) {
    let labels = bucket_labels(records, monthly);
    let mut names: BTreeSet<String> = BTreeSet::new();
    for r in records {
        if r.fields_of_study.is_empty() {
            names.insert("Unspecified".to_string());
        }
        names.extend(r.fields_of_study.iter().cloned());
    }
    let mut out = BTreeMap::new();
    for f in names {
        let counts = labels
            .iter()
            .map(|l| {
                records
                    .iter()
                    .filter(|r| &label_of(r.pub_date, monthly) == l)
                    .filter(|r| r.fields_of_study.contains(&f) || (r.fields_of_study.is_empty() && f == "Unspecified"))
                    .count() as u64
            })
            .collect();
        out.insert(f, counts);
    }
    (labels, out)
}

pub fn word_counts(
    records: &[PaperRecord],
    monthly: bool,
    stop: &HashSet<String>,
) -> BTreeMap<String, BTreeMap<String, u64>> {
    let mut out: BTreeMap<String, BTreeMap<String, u64>> = bucket_labels(records, monthly)
        .into_iter()
        .map(|l| (l, BTreeMap::new()))
        .collect();
    for r in records {
        let bucket = out.get_mut(&label_of(r.pub_date, monthly)).unwrap();
        for t in tokenize(&r.abstract_text, stop) {
            *bucket.entry(t).or_default() += 1;
        }
    }
    out
}
