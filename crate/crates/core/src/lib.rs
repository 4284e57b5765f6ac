//! Research-trend analytics over scholarly paper corpora.
//!
//! The crate ingests paper records (canonical CSV or Semantic Scholar
//! exports) and computes four views over a time slice:
//!
//! - [`themeriver`]: per-field paper counts and a stream-graph layout,
//! - [`coauthor`]: the co-authorship graph and its top-n author subgraph,
//! - [`venues`]: venues ranked by citations with stacked paper boxes,
//! - [`text`]: word-frequency race frames from abstracts.

pub mod coauthor;
pub mod corpus;
pub mod error;
pub mod text;
pub mod themeriver;
pub mod venues;

pub use coauthor::{build_cooccurrence, top_n_subgraph, CoGraph, NodeMetrics};
pub use corpus::{
    bucket_of, normalize_author, parse_corpus_csv, parse_semantic_scholar, slice, BucketId, Corpus, CorpusFormat,
    Granularity, IngestIssue, PaperRecord, Severity, TimeRange,
};
pub use error::{AnalyticsError, CorpusError};
pub use text::{bucket_word_counts, race_frames, tokenize, BucketWordCounts, RaceMode, RaceSeries, StopwordSet};
pub use themeriver::{field_series, stream_layout, FieldSeries, StreamLayout};
pub use venues::{build_stacks, rank_venues, scholar_url, PaperBox, VenueStack};
