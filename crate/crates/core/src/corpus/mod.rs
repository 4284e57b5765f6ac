//! Paper records, ingestion and time slicing.
//!
//! Every analytics module consumes `PaperRecord`s produced here. Records are
//! validated once at ingestion and never mutated afterwards.

mod csv_format;
mod semantic_scholar;
mod validate;

use std::cmp::Ordering;
use std::fmt;

use chrono::{Datelike, NaiveDate};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::CorpusError;

pub use csv_format::{parse_corpus_csv, write_corpus_csv, CSV_HEADER};
pub use semantic_scholar::parse_semantic_scholar;

/// Venue label used when a record carries none.
pub const UNKNOWN_VENUE: &str = "Unknown";

/// One validated scholarly paper.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PaperRecord {
    pub id: String,
    pub title: String,
    pub authors: Vec<String>,
    pub abstract_text: String,
    pub pub_date: NaiveDate,
    pub citation_count: u64,
    pub venue: String,
    pub fields_of_study: Vec<String>,
}

impl PaperRecord {
    /// Content-derived identifier: first 16 hex chars of a SHA-256 over the
    /// title, date, venue and author list.
    pub fn content_id(title: &str, authors: &[String], pub_date: NaiveDate, venue: &str) -> String {
        let mut hasher = Sha256::new();
        hasher.update(title.as_bytes());
        hasher.update([0x1f]);
        hasher.update(pub_date.to_string().as_bytes());
        hasher.update([0x1f]);
        hasher.update(venue.as_bytes());
        for author in authors {
            hasher.update([0x1e]);
            hasher.update(author.as_bytes());
        }
        let digest = hasher.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn year(&self) -> i32 {
        self.pub_date.year()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Warning,
    Rejected,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Severity::Warning => f.write_str("warning"),
            Severity::Rejected => f.write_str("rejected"),
        }
    }
}

/// A problem found while ingesting one input row or record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IngestIssue {
    pub locator: String,
    pub severity: Severity,
    pub reason: String,
}

impl IngestIssue {
    pub fn warning(locator: impl Into<String>, reason: impl Into<String>) -> Self {
        IngestIssue {
            locator: locator.into(),
            severity: Severity::Warning,
            reason: reason.into(),
        }
    }

    pub fn rejected(locator: impl Into<String>, reason: impl Into<String>) -> Self {
        IngestIssue {
            locator: locator.into(),
            severity: Severity::Rejected,
            reason: reason.into(),
        }
    }
}

impl fmt::Display for IngestIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] {}", self.locator, self.severity, self.reason)
    }
}

/// Supported input formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    Csv,
    SemanticScholar,
}

impl std::str::FromStr for CorpusFormat {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(CorpusFormat::Csv),
            "s2" | "semantic_scholar" | "semanticscholar" => Ok(CorpusFormat::SemanticScholar),
            other => Err(CorpusError::UnknownFormat(other.to_string())),
        }
    }
}

/// An immutable, validated collection of papers.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    records: Vec<PaperRecord>,
    source_label: String,
    ingest_report: Vec<IngestIssue>,
}

impl Corpus {
    /// Builds a corpus from already-parsed records. Records whose id repeats an
    /// earlier record are dropped with a rejected issue.
    pub fn new(records: Vec<PaperRecord>, source_label: impl Into<String>, mut issues: Vec<IngestIssue>) -> Self {
        let mut seen = std::collections::HashSet::new();
        let mut kept = Vec::with_capacity(records.len());
        for record in records {
            if seen.insert(record.id.clone()) {
                kept.push(record);
            } else {
                issues.push(IngestIssue::rejected(
                    format!("id {}", record.id),
                    format!("duplicate record \"{}\"", record.title),
                ));
            }
        }
        Corpus {
            records: kept,
            source_label: source_label.into(),
            ingest_report: issues,
        }
    }

    pub fn from_bytes(
        bytes: &[u8],
        format: CorpusFormat,
        source_label: impl Into<String>,
    ) -> Result<Self, CorpusError> {
        let (records, issues) = match format {
            CorpusFormat::Csv => parse_corpus_csv(bytes)?,
            CorpusFormat::SemanticScholar => parse_semantic_scholar(bytes)?,
        };
        Ok(Corpus::new(records, source_label, issues))
    }

    pub fn records(&self) -> &[PaperRecord] {
        &self.records
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    pub fn ingest_report(&self) -> &[IngestIssue] {
        &self.ingest_report
    }

    pub fn rejected_count(&self) -> usize {
        self.ingest_report
            .iter()
            .filter(|i| i.severity == Severity::Rejected)
            .count()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    /// Earliest and latest publication dates, `None` for an empty corpus.
    pub fn date_bounds(&self) -> Option<TimeRange> {
        let min = self.records.iter().map(|r| r.pub_date).min()?;
        let max = self.records.iter().map(|r| r.pub_date).max()?;
        Some(TimeRange { from: min, to: max })
    }

    pub fn slice(&self, range: &TimeRange) -> Vec<PaperRecord> {
        slice(&self.records, range)
    }

    /// SHA-256 of the canonical CSV serialization, hex encoded.
    pub fn fingerprint(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(write_corpus_csv(&self.records));
        hasher.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Inclusive date range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TimeRange {
    pub from: NaiveDate,
    pub to: NaiveDate,
}

impl TimeRange {
    pub fn new(from: NaiveDate, to: NaiveDate) -> Result<Self, CorpusError> {
        if from > to {
            return Err(CorpusError::InvalidRange { from, to });
        }
        Ok(TimeRange { from, to })
    }

    pub fn contains(&self, date: NaiveDate) -> bool {
        self.from <= date && date <= self.to
    }

    pub fn intersect(&self, other: &TimeRange) -> Option<TimeRange> {
        let from = self.from.max(other.from);
        let to = self.to.min(other.to);
        (from <= to).then_some(TimeRange { from, to })
    }
}

/// Records published within `range`, in their original order.
pub fn slice(records: &[PaperRecord], range: &TimeRange) -> Vec<PaperRecord> {
    records.iter().filter(|r| range.contains(r.pub_date)).cloned().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Granularity {
    #[default]
    Year,
    Month,
}

impl Granularity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Granularity::Year => "year",
            Granularity::Month => "month",
        }
    }
}

impl std::str::FromStr for Granularity {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "year" => Ok(Granularity::Year),
            "month" => Ok(Granularity::Month),
            other => Err(CorpusError::UnknownGranularity(other.to_string())),
        }
    }
}

/// Canonical time-bucket label: `YYYY` or `YYYY-MM`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct BucketId(String);

impl BucketId {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for BucketId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Zero-padded to four year digits so lexicographic order is chronological
/// for years 0..=9999.
pub fn bucket_of(date: NaiveDate, granularity: Granularity) -> BucketId {
    match granularity {
        Granularity::Year => BucketId(format!("{:04}", date.year())),
        Granularity::Month => BucketId(format!("{:04}-{:02}", date.year(), date.month())),
    }
}

/// Every bucket from the one containing `first` to the one containing `last`, inclusive.
pub fn bucket_span(first: NaiveDate, last: NaiveDate, granularity: Granularity) -> Vec<BucketId> {
    if first > last {
        return Vec::new();
    }
    match granularity {
        Granularity::Year => (first.year()..=last.year())
            .map(|y| BucketId(format!("{y:04}")))
            .collect(),
        Granularity::Month => {
            let mut out = Vec::new();
            let (mut y, mut m) = (first.year(), first.month());
            while (y, m).cmp(&(last.year(), last.month())) != Ordering::Greater {
                out.push(BucketId(format!("{y:04}-{m:02}")));
                if m == 12 {
                    y += 1;
                    m = 1;
                } else {
                    m += 1;
                }
            }
            out
        }
    }
}

/// Buckets covering the min..max publication dates of `records`.
pub fn records_bucket_span(records: &[PaperRecord], granularity: Granularity) -> Vec<BucketId> {
    let min = records.iter().map(|r| r.pub_date).min();
    let max = records.iter().map(|r| r.pub_date).max();
    match (min, max) {
        (Some(min), Some(max)) => bucket_span(min, max, granularity),
        _ => Vec::new(),
    }
}

/// Trims and collapses internal whitespace; case is preserved.
pub fn normalize_author(raw: &str) -> Result<String, CorpusError> {
    let name = raw.split_whitespace().collect::<Vec<_>>().join(" ");
    if name.is_empty() {
        return Err(CorpusError::EmptyAuthor);
    }
    Ok(name)
}

/// Accepts `YYYY-MM-DD`, `YYYY-MM` and `YYYY`; missing parts default to the
/// first month/day.
pub fn parse_date(raw: &str) -> Result<NaiveDate, CorpusError> {
    let s = raw.trim();
    let bad = || CorpusError::BadDate(raw.to_string());
    let parts: Vec<&str> = s.split('-').collect();
    let num = |p: &str, width: usize| -> Result<u32, CorpusError> {
        if p.len() != width || !p.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        p.parse().map_err(|_| bad())
    };
    let (y, m, d) = match parts.as_slice() {
        [y] => (num(y, 4)?, 1, 1),
        [y, m] => (num(y, 4)?, num(m, 2)?, 1),
        [y, m, d] => (num(y, 4)?, num(m, 2)?, num(d, 2)?),
        _ => return Err(bad()),
    };
    NaiveDate::from_ymd_opt(y as i32, m, d).ok_or_else(bad)
}
