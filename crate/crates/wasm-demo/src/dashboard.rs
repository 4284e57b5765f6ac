use chrono::NaiveDate;
use rtvis_core::{
    bucket_word_counts, build_cooccurrence, field_series, race_frames, stream_layout, top_n_subgraph, Corpus,
    CorpusFormat, Granularity, RaceMode, StopwordSet, TimeRange,
};
use serde_json::json;

/// A corpus loaded in the page, answering the three interactive views as JSON text.
pub struct Dashboard {
    corpus: Corpus,
    stopwords: StopwordSet,
}

impl Dashboard {
    /// `format` is `csv` or `s2`.
    pub fn load(text: &str, format: &str) -> Result<Self, String> {
        let format: CorpusFormat = format.parse().map_err(|e: rtvis_core::CorpusError| e.to_string())?;
        let corpus = Corpus::from_bytes(text.as_bytes(), format, "browser").map_err(|e| e.to_string())?;
        Ok(Dashboard {
            corpus,
            stopwords: StopwordSet::english(),
        })
    }

    pub fn summary(&self) -> String {
        let bounds = self.corpus.date_bounds();
        json!({
            "paper_count": self.corpus.len(),
            "date_min": bounds.map(|b| b.from.to_string()),
            "date_max": bounds.map(|b| b.to.to_string()),
            "issues": self.corpus.ingest_report().iter().map(|i| i.to_string()).collect::<Vec<_>>(),
        })
        .to_string()
    }

    /// Layout over the whole corpus; the river is the range selector, so it is never sliced.
    pub fn theme_river(&self, granularity: &str) -> Result<String, String> {
        let g: Granularity = granularity
            .parse()
            .map_err(|e: rtvis_core::CorpusError| e.to_string())?;
        let layout = stream_layout(&field_series(self.corpus.records(), g));
        serde_json::to_string(&layout).map_err(|e| e.to_string())
    }

    pub fn coauthors(&self, from: &str, to: &str, n: usize) -> Result<String, String> {
        let records = self.corpus.slice(&range(from, to)?);
        let graph = top_n_subgraph(&build_cooccurrence(&records), n).map_err(|e| e.to_string())?;
        serde_json::to_string(&graph).map_err(|e| e.to_string())
    }

    pub fn word_race(&self, from: &str, to: &str, k: usize, mode: &str, granularity: &str) -> Result<String, String> {
        let g: Granularity = granularity
            .parse()
            .map_err(|e: rtvis_core::CorpusError| e.to_string())?;
        let mode: RaceMode = mode.parse()?;
        let records = self.corpus.slice(&range(from, to)?);
        let counts = bucket_word_counts(&records, g, &self.stopwords);
        let race = race_frames(&counts, k, mode).map_err(|e| e.to_string())?;
        serde_json::to_string(&race).map_err(|e| e.to_string())
    }
}

fn range(from: &str, to: &str) -> Result<TimeRange, String> {
    let parse = |s: &str| NaiveDate::parse_from_str(s, "%Y-%m-%d").map_err(|_| format!("invalid date \"{s}\""));
    TimeRange::new(parse(from)?, parse(to)?).map_err(|e| e.to_string())
}
