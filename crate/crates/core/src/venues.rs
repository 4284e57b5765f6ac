//! Venue ranking by citation totals and per-venue stacked paper boxes.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::corpus::PaperRecord;
use crate::error::AnalyticsError;

/// Default number of venues in the citation chart.
pub const DEFAULT_TOP_VENUES: usize = 5;

const SCHOLAR_SEARCH: &str = "https://scholar.google.com/scholar?q=";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PaperBox {
    pub paper_id: String,
    pub title: String,
    pub year: i32,
    pub citations: u64,
    pub link: String,
}

/// One bar: papers ordered by descending citations (ties by title), so the
/// most cited paper comes first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VenueStack {
    pub venue: String,
    pub total_citations: u64,
    pub boxes: Vec<PaperBox>,
}

/// Venues by summed citations, descending, ties by venue name.
pub fn rank_venues(records: &[PaperRecord], n: usize) -> Result<Vec<(String, u64)>, AnalyticsError> {
    if n < 1 {
        return Err(AnalyticsError::InvalidN(n));
    }
    let mut totals: BTreeMap<&str, u64> = BTreeMap::new();
    for r in records {
        *totals.entry(r.venue.as_str()).or_insert(0) += r.citation_count;
    }
    let mut ranked: Vec<(String, u64)> = totals.into_iter().map(|(v, t)| (v.to_string(), t)).collect();
    // BTreeMap iteration is already name-ascending; a stable sort keeps that for ties.
    ranked.sort_by(|a, b| b.1.cmp(&a.1));
    ranked.truncate(n);
    Ok(ranked)
}

pub fn build_stacks<S: AsRef<str>>(records: &[PaperRecord], venues: &[S]) -> Vec<VenueStack> {
    venues
        .iter()
        .map(|venue| {
            let venue = venue.as_ref();
            let mut boxes: Vec<PaperBox> = records
                .iter()
                .filter(|r| r.venue == venue)
                .map(|r| PaperBox {
                    paper_id: r.id.clone(),
                    title: r.title.clone(),
                    year: r.year(),
                    citations: r.citation_count,
                    link: scholar_url(&r.title),
                })
                .collect();
            boxes.sort_by(|a, b| b.citations.cmp(&a.citations).then_with(|| a.title.cmp(&b.title)));
            VenueStack {
                venue: venue.to_string(),
                total_citations: boxes.iter().map(|b| b.citations).sum(),
                boxes,
            }
        })
        .collect()
}

/// Scholar search link with a form-encoded title query.
pub fn scholar_url(title: &str) -> String {
    let query: String = url::form_urlencoded::byte_serialize(title.as_bytes()).collect();
    format!("{SCHOLAR_SEARCH}{query}")
}
