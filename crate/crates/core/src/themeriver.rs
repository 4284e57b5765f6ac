//! Per-field paper counts over time and their stream-graph layout.
//!
//! The layout uses a silhouette baseline, `g0(t) = -total(t) / 2`, so the
//! stacked river is symmetric about zero. Fields are stacked from the bottom
//! in order of descending overall count (ties by name), and each band's
//! thickness at `t` is exactly that field's count.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::corpus::{bucket_of, records_bucket_span, BucketId, Granularity, PaperRecord};

/// River label for papers without any field of study.
pub const UNSPECIFIED_FIELD: &str = "Unspecified";

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FieldSeries {
    pub buckets: Vec<BucketId>,
    pub series: BTreeMap<String, Vec<u64>>,
}

impl FieldSeries {
    /// Builds a series from explicit buckets and counts. Returns `None` if any
    /// count list does not align with `buckets`.
    pub fn from_parts(buckets: Vec<BucketId>, series: BTreeMap<String, Vec<u64>>) -> Option<Self> {
        series
            .values()
            .all(|c| c.len() == buckets.len())
            .then_some(FieldSeries { buckets, series })
    }

    pub fn total_at(&self, t: usize) -> u64 {
        self.series.values().map(|c| c[t]).sum()
    }
}

/// A paper adds one to every field it lists; buckets run without gaps from
/// the earliest to the latest paper.
pub fn field_series(records: &[PaperRecord], granularity: Granularity) -> FieldSeries {
    let buckets = records_bucket_span(records, granularity);
    let position: BTreeMap<&BucketId, usize> = buckets.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut series: BTreeMap<String, Vec<u64>> = BTreeMap::new();
    for record in records {
        let t = position[&bucket_of(record.pub_date, granularity)];
        let unspecified = [UNSPECIFIED_FIELD.to_string()];
        let fields = if record.fields_of_study.is_empty() {
            &unspecified[..]
        } else {
            &record.fields_of_study[..]
        };
        for field in fields {
            series.entry(field.clone()).or_insert_with(|| vec![0; buckets.len()])[t] += 1;
        }
    }
    FieldSeries { buckets, series }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Band {
    pub lower: f64,
    pub upper: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct StreamLayout {
    pub buckets: Vec<BucketId>,
    /// Stacking order, bottom first.
    pub order: Vec<String>,
    pub baseline: Vec<f64>,
    pub bands: BTreeMap<String, Vec<Band>>,
    pub counts: BTreeMap<String, Vec<u64>>,
}

impl StreamLayout {
    /// Upper edge of the topmost band (the baseline when there are no fields).
    pub fn top_envelope(&self, t: usize) -> f64 {
        self.order.last().map_or(self.baseline[t], |f| self.bands[f][t].upper)
    }
}

pub fn stream_layout(fs: &FieldSeries) -> StreamLayout {
    let mut order: Vec<(&String, u64)> = fs.series.iter().map(|(f, c)| (f, c.iter().sum())).collect();
    order.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    let order: Vec<String> = order.into_iter().map(|(f, _)| f.clone()).collect();

    let baseline: Vec<f64> = (0..fs.buckets.len()).map(|t| -0.5 * fs.total_at(t) as f64).collect();
    let mut bands: BTreeMap<String, Vec<Band>> = BTreeMap::new();
    let mut edge = baseline.clone();
    for field in &order {
        let counts = &fs.series[field];
        let band = edge
            .iter_mut()
            .zip(counts)
            .map(|(e, &c)| {
                let lower = *e;
                *e += c as f64;
                Band { lower, upper: *e }
            })
            .collect();
        bands.insert(field.clone(), band);
    }
    StreamLayout {
        buckets: fs.buckets.clone(),
        order,
        baseline,
        bands,
        counts: fs.series.clone(),
    }
}

/// `{ buckets, order, baseline, bands: {field: [[lower, upper], ...]}, counts: {field: [...]} }`
impl Serialize for StreamLayout {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let bands: BTreeMap<&str, Vec<[f64; 2]>> = self
            .bands
            .iter()
            .map(|(f, b)| (f.as_str(), b.iter().map(|b| [b.lower, b.upper]).collect()))
            .collect();
        let mut s = serializer.serialize_struct("StreamLayout", 5)?;
        s.serialize_field("buckets", &self.buckets)?;
        s.serialize_field("order", &self.order)?;
        s.serialize_field("baseline", &self.baseline)?;
        s.serialize_field("bands", &bands)?;
        s.serialize_field("counts", &self.counts)?;
        s.end()
    }
}
