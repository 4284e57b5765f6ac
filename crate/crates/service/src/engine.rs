//! View computation over a loaded corpus, independent of transport.

use std::collections::BTreeSet;
use std::num::NonZeroUsize;
use std::sync::Arc;

use rtvis_core::{
    bucket_word_counts, build_cooccurrence, build_stacks, field_series, race_frames, rank_venues, stream_layout,
    top_n_subgraph, Corpus, PaperRecord, StopwordSet,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cache::{CacheStats, Lookup, ViewCache};
use crate::request::{ApiError, RawParams, ViewKind, ViewRequest};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusStats {
    pub paper_count: usize,
    pub date_min: Option<String>,
    pub date_max: Option<String>,
    pub venue_count: usize,
    pub field_count: usize,
    pub author_count: usize,
}

/// Serves views for one immutable corpus. Safe to share across threads.
pub struct ViewEngine {
    corpus: Corpus,
    stopwords: StopwordSet,
    fingerprint: String,
    cache: Option<ViewCache>,
}

impl ViewEngine {
    /// `cache_capacity` of `None` disables caching.
    pub fn new(corpus: Corpus, stopwords: StopwordSet, cache_capacity: Option<NonZeroUsize>) -> Self {
        let fingerprint = corpus.fingerprint();
        ViewEngine {
            corpus,
            stopwords,
            fingerprint,
            cache: cache_capacity.map(ViewCache::new),
        }
    }

    pub fn corpus(&self) -> &Corpus {
        &self.corpus
    }

    pub fn resolve(&self, view: ViewKind, raw: &RawParams) -> Result<ViewRequest, ApiError> {
        ViewRequest::resolve(view, raw, self.corpus.date_bounds())
    }

    /// Serialized response envelope `{ view, params_echo, paper_count, data }`,
    /// served from the cache when possible.
    pub fn handle(&self, req: &ViewRequest) -> Result<(Arc<[u8]>, Lookup), ApiError> {
        let produce = || serde_json::to_vec(&self.envelope(req)?).map_err(|e| ApiError::Internal(e.to_string()));
        match &self.cache {
            Some(cache) => cache.get_or_compute(&format!("{}|{}", self.fingerprint, req.canonical_key()), produce),
            None => produce().map(|bytes| (bytes.into(), Lookup::Miss)),
        }
    }

    pub fn envelope(&self, req: &ViewRequest) -> Result<Value, ApiError> {
        let records = self.corpus.slice(&req.range);
        Ok(json!({
            "view": req.view.as_str(),
            "params_echo": req.echo(),
            "paper_count": records.len(),
            "data": self.data_for(req, &records)?,
        }))
    }

    /// The `data` member of the envelope.
    pub fn data(&self, req: &ViewRequest) -> Result<Value, ApiError> {
        self.data_for(req, &self.corpus.slice(&req.range))
    }

    fn data_for(&self, req: &ViewRequest, records: &[PaperRecord]) -> Result<Value, ApiError> {
        let internal = |e: &dyn std::fmt::Display| ApiError::Internal(e.to_string());
        let granularity = req.granularity.unwrap_or_default();
        let count = req.count.unwrap_or(1);
        let value = match req.view {
            ViewKind::ThemeRiver => serde_json::to_value(stream_layout(&field_series(records, granularity))),
            ViewKind::Coauthors => {
                let graph = top_n_subgraph(&build_cooccurrence(records), count)
                    .map_err(|_| ApiError::InvalidN(count.to_string()))?;
                serde_json::to_value(graph)
            }
            ViewKind::Venues => {
                let ranked = rank_venues(records, count).map_err(|_| ApiError::InvalidN(count.to_string()))?;
                let names: Vec<&str> = ranked.iter().map(|(v, _)| v.as_str()).collect();
                Ok(json!({ "venues": build_stacks(records, &names) }))
            }
            ViewKind::Words => {
                let counts = bucket_word_counts(records, granularity, &self.stopwords);
                let race = race_frames(&counts, count, req.mode.unwrap_or_default())
                    .map_err(|_| ApiError::InvalidK(count.to_string()))?;
                serde_json::to_value(race)
            }
        };
        value.map_err(|e| internal(&e))
    }

    pub fn stats(&self) -> CorpusStats {
        let records = self.corpus.records();
        let bounds = self.corpus.date_bounds();
        let distinct =
            |f: &dyn Fn(&PaperRecord) -> Vec<&str>| records.iter().flat_map(f).collect::<BTreeSet<_>>().len();
        CorpusStats {
            paper_count: records.len(),
            date_min: bounds.map(|b| b.from.to_string()),
            date_max: bounds.map(|b| b.to.to_string()),
            venue_count: distinct(&|r| vec![r.venue.as_str()]),
            field_count: distinct(&|r| r.fields_of_study.iter().map(String::as_str).collect()),
            author_count: distinct(&|r| r.authors.iter().map(String::as_str).collect()),
        }
    }

    pub fn cache_stats(&self) -> Option<CacheStats> {
        self.cache.as_ref().map(ViewCache::stats)
    }
}
