use std::collections::HashSet;

use chrono::NaiveDate;

use super::{normalize_author, parse_date, IngestIssue, PaperRecord, UNKNOWN_VENUE};

/// Publication date as found in the input, before validation.
pub(super) enum RawDate {
    Text(String),
    /// Only a year was available; mapped to July 1 with a warning.
    YearOnly(i64),
    Missing,
}

pub(super) enum RawCitations {
    Count(i64),
    Text(String),
    Missing,
}

/// Format-independent view of one input row.
pub(super) struct RawRecord {
    pub locator: String,
    pub title: Option<String>,
    pub authors: Vec<String>,
    pub abstract_text: Option<String>,
    pub date: RawDate,
    pub citations: RawCitations,
    pub venue: Option<String>,
    pub fields: Vec<String>,
}

/// Validates one row. A rejected row reports only its rejection reason.
fn validate(raw: RawRecord) -> Result<(PaperRecord, Vec<IngestIssue>), IngestIssue> {
    let loc = raw.locator;
    let mut warnings = Vec::new();
    let reject = |reason: String| IngestIssue::rejected(loc.clone(), reason);

    let title = raw.title.as_deref().map(str::trim).unwrap_or_default().to_string();
    if title.is_empty() {
        return Err(reject("empty title".into()));
    }

    let mut authors: Vec<String> = Vec::with_capacity(raw.authors.len());
    let mut blank = 0usize;
    for a in &raw.authors {
        match normalize_author(a) {
            Ok(name) if authors.contains(&name) => {
                warnings.push(IngestIssue::warning(
                    &loc,
                    format!("duplicate author \"{name}\" removed"),
                ));
            }
            Ok(name) => authors.push(name),
            Err(_) => blank += 1,
        }
    }
    if authors.is_empty() {
        return Err(reject("no authors".into()));
    }
    if blank > 0 {
        warnings.push(IngestIssue::warning(
            &loc,
            format!(
                "{blank} blank author entr{} skipped",
                if blank == 1 { "y" } else { "ies" }
            ),
        ));
    }

    let pub_date = match raw.date {
        RawDate::Text(s) => parse_date(&s).map_err(|_| reject(format!("invalid date \"{s}\"")))?,
        RawDate::YearOnly(y) => {
            let date = i32::try_from(y)
                .ok()
                .and_then(|y| NaiveDate::from_ymd_opt(y, 7, 1))
                .filter(|_| (0..=9999).contains(&y))
                .ok_or_else(|| reject(format!("invalid year {y}")))?;
            warnings.push(IngestIssue::warning(&loc, format!("no publication date; using {date}")));
            date
        }
        RawDate::Missing => return Err(reject("missing date".into())),
    };

    let citation_count = match raw.citations {
        RawCitations::Count(n) if n >= 0 => n as u64,
        RawCitations::Count(n) => return Err(reject(format!("negative citation count {n}"))),
        RawCitations::Text(s) => match s.trim().parse::<i64>() {
            Ok(n) if n >= 0 => n as u64,
            Ok(n) => return Err(reject(format!("negative citation count {n}"))),
            Err(_) => return Err(reject(format!("invalid citation count \"{s}\""))),
        },
        RawCitations::Missing => {
            warnings.push(IngestIssue::warning(&loc, "missing citation count; using 0"));
            0
        }
    };

    let venue = match raw.venue.as_deref().map(str::trim) {
        Some(v) if !v.is_empty() => v.to_string(),
        _ => UNKNOWN_VENUE.to_string(),
    };

    let mut fields_of_study: Vec<String> = Vec::new();
    for f in raw.fields.iter().map(|f| f.trim()).filter(|f| !f.is_empty()) {
        if !fields_of_study.iter().any(|x| x == f) {
            fields_of_study.push(f.to_string());
        }
    }

    let abstract_text = raw.abstract_text.unwrap_or_default();
    let id = PaperRecord::content_id(&title, &authors, pub_date, &venue);
    let record = PaperRecord {
        id,
        title,
        authors,
        abstract_text,
        pub_date,
        citation_count,
        venue,
        fields_of_study,
    };
    Ok((record, warnings))
}

/// Validates every row and drops repeats of an already accepted record.
pub(super) fn collect(rows: impl IntoIterator<Item = RawRecord>) -> (Vec<PaperRecord>, Vec<IngestIssue>) {
    let mut records = Vec::new();
    let mut issues = Vec::new();
    let mut ids = HashSet::new();
    for raw in rows {
        let loc = raw.locator.clone();
        match validate(raw) {
            Ok((record, warnings)) => {
                if ids.insert(record.id.clone()) {
                    records.push(record);
                    issues.extend(warnings);
                } else {
                    issues.push(IngestIssue::rejected(
                        loc,
                        format!("duplicate of an earlier record \"{}\"", record.title),
                    ));
                }
            }
            Err(issue) => issues.push(issue),
        }
    }
    (records, issues)
}

/// Splits a `;`-separated cell.
pub(super) fn split_multi(cell: &str) -> Vec<String> {
    if cell.trim().is_empty() {
        return Vec::new();
    }
    cell.split(';').map(str::to_string).collect()
}
