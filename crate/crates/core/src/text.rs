//! Abstract tokenization, per-bucket word counts and bar-race frames.

use std::collections::{BTreeMap, HashSet};
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::corpus::{bucket_of, records_bucket_span, BucketId, Granularity, PaperRecord};
use crate::error::AnalyticsError;

const DEFAULT_STOPWORDS: &str = include_str!("../data/stopwords_en.txt");

/// Default number of bars in a race frame.
pub const DEFAULT_K: usize = 10;

/// Lowercase stopwords, one per line in the on-disk form.
#[derive(Debug, Clone, Default)]
pub struct StopwordSet {
    words: HashSet<String>,
    source_path: String,
}

impl StopwordSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The bundled English list.
    pub fn english() -> Self {
        Self::parse(DEFAULT_STOPWORDS, "<builtin:english>")
    }

    /// Blank lines and lines starting with `#` are skipped; entries are lowercased.
    pub fn parse(text: &str, source_path: impl Into<String>) -> Self {
        let words = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_lowercase)
            .collect();
        StopwordSet {
            words,
            source_path: source_path.into(),
        }
    }

    pub fn from_file(path: &Path) -> std::io::Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(Self::parse(&text, path.display().to_string()))
    }

    pub fn from_words<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        StopwordSet {
            words: words.into_iter().map(|w| w.as_ref().to_lowercase()).collect(),
            source_path: String::new(),
        }
    }

    pub fn contains(&self, token: &str) -> bool {
        self.words.contains(token)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn source_path(&self) -> PathBuf {
        PathBuf::from(&self.source_path)
    }
}

/// Lowercases, splits on anything that is not a letter or digit, then drops
/// short tokens, pure numbers and stopwords.
pub fn tokenize(text: &str, stop: &StopwordSet) -> Vec<String> {
    text.to_lowercase()
        .split(|c: char| !c.is_alphanumeric())
        .filter(|t| t.chars().count() >= 2)
        .filter(|t| !t.chars().all(|c| c.is_numeric()))
        .filter(|t| !stop.contains(t))
        .map(str::to_string)
        .collect()
}

/// Chronologically ordered word counts per bucket.
pub type BucketWordCounts = BTreeMap<BucketId, BTreeMap<String, u64>>;

/// Counts tokens of every abstract per bucket. Buckets between the first and
/// last paper are present even when empty.
pub fn bucket_word_counts(records: &[PaperRecord], granularity: Granularity, stop: &StopwordSet) -> BucketWordCounts {
    let mut counts: BucketWordCounts = records_bucket_span(records, granularity)
        .into_iter()
        .map(|b| (b, BTreeMap::new()))
        .collect();
    for record in records {
        let bucket = counts.entry(bucket_of(record.pub_date, granularity)).or_default();
        for token in tokenize(&record.abstract_text, stop) {
            *bucket.entry(token).or_insert(0) += 1;
        }
    }
    counts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RaceMode {
    #[default]
    Cumulative,
    PerBucket,
}

impl RaceMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            RaceMode::Cumulative => "cumulative",
            RaceMode::PerBucket => "per_bucket",
        }
    }
}

impl std::str::FromStr for RaceMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cumulative" => Ok(RaceMode::Cumulative),
            "per_bucket" => Ok(RaceMode::PerBucket),
            other => Err(format!(
                "unknown race mode \"{other}\" (expected cumulative or per_bucket)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RaceEntry {
    pub word: String,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RaceFrame {
    pub bucket: BucketId,
    pub entries: Vec<RaceEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RaceSeries {
    pub mode: RaceMode,
    pub k: usize,
    pub frames: Vec<RaceFrame>,
}

/// Top `k` words per frame, ordered by descending count then ascending word.
pub fn race_frames(counts: &BucketWordCounts, k: usize, mode: RaceMode) -> Result<RaceSeries, AnalyticsError> {
    if k < 1 {
        return Err(AnalyticsError::InvalidK(k));
    }
    let mut running: BTreeMap<&str, u64> = BTreeMap::new();
    let mut frames = Vec::with_capacity(counts.len());
    for (bucket, words) in counts {
        let source: Vec<(&str, u64)> = match mode {
            RaceMode::Cumulative => {
                for (w, c) in words {
                    *running.entry(w.as_str()).or_insert(0) += c;
                }
                running.iter().map(|(w, c)| (*w, *c)).collect()
            }
            RaceMode::PerBucket => words.iter().map(|(w, c)| (w.as_str(), *c)).collect(),
        };
        frames.push(RaceFrame {
            bucket: bucket.clone(),
            entries: top_k(source, k),
        });
    }
    Ok(RaceSeries { mode, k, frames })
}

fn top_k(mut words: Vec<(&str, u64)>, k: usize) -> Vec<RaceEntry> {
    words.retain(|(_, c)| *c > 0);
    words.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    words.truncate(k);
    words
        .into_iter()
        .map(|(w, c)| RaceEntry {
            word: w.to_string(),
            count: c,
        })
        .collect()
}
