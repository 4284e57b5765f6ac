use serde_json::Value;

use super::validate::{collect, RawCitations, RawDate, RawRecord};
use super::{IngestIssue, PaperRecord};
use crate::error::CorpusError;

/// Parses a Semantic Scholar export, either a JSON array of paper objects or
/// one object per line.
pub fn parse_semantic_scholar(bytes: &[u8]) -> Result<(Vec<PaperRecord>, Vec<IngestIssue>), CorpusError> {
    let text = std::str::from_utf8(bytes).map_err(|e| CorpusError::Encoding(e.valid_up_to()))?;
    let text = text.strip_prefix('\u{feff}').unwrap_or(text).trim();
    if text.is_empty() {
        return Ok((Vec::new(), Vec::new()));
    }

    let mut rows = Vec::new();
    let mut broken = Vec::new();
    if text.starts_with('[') {
        let items: Vec<Value> = serde_json::from_str(text).map_err(|e| CorpusError::Format(e.to_string()))?;
        for (i, item) in items.into_iter().enumerate() {
            match to_raw(format!("record {}", i + 1), item) {
                Ok(raw) => rows.push(raw),
                Err(issue) => broken.push(issue),
            }
        }
    } else {
        let mut parsed_any = false;
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let locator = format!("line {}", i + 1);
            match serde_json::from_str::<Value>(line) {
                Ok(value @ Value::Object(_)) => {
                    parsed_any = true;
                    match to_raw(locator, value) {
                        Ok(raw) => rows.push(raw),
                        Err(issue) => broken.push(issue),
                    }
                }
                Ok(_) => broken.push(IngestIssue::rejected(locator, "not a JSON object")),
                Err(e) => broken.push(IngestIssue::rejected(locator, format!("invalid JSON: {e}"))),
            }
        }
        if !parsed_any {
            return Err(CorpusError::Format(
                "expected a JSON array or one JSON object per line".into(),
            ));
        }
    }

    let (records, mut issues) = collect(rows);
    issues.extend(broken);
    Ok((records, issues))
}

fn to_raw(locator: String, value: Value) -> Result<RawRecord, IngestIssue> {
    let Value::Object(obj) = value else {
        return Err(IngestIssue::rejected(locator, "not a JSON object"));
    };
    let text = |key: &str| obj.get(key).and_then(Value::as_str).map(str::to_string);

    let authors = match obj.get("authors") {
        Some(Value::Array(items)) => items
            .iter()
            .map(|a| match a {
                Value::String(s) => s.clone(),
                Value::Object(o) => o.get("name").and_then(Value::as_str).unwrap_or_default().to_string(),
                _ => String::new(),
            })
            .collect(),
        _ => Vec::new(),
    };

    let date = match (obj.get("publicationDate"), obj.get("year")) {
        (Some(Value::String(s)), _) if !s.trim().is_empty() => RawDate::Text(s.clone()),
        (_, Some(Value::Number(n))) => match n.as_i64() {
            Some(y) => RawDate::YearOnly(y),
            None => return Err(IngestIssue::rejected(locator, format!("invalid year {n}"))),
        },
        _ => RawDate::Missing,
    };

    let citations = match obj.get("citationCount") {
        None | Some(Value::Null) => RawCitations::Missing,
        Some(Value::Number(n)) => match n.as_i64() {
            Some(c) => RawCitations::Count(c),
            None => RawCitations::Text(n.to_string()),
        },
        Some(other) => RawCitations::Text(other.to_string()),
    };

    let fields = match obj.get("fieldsOfStudy") {
        Some(Value::Array(items)) => items.iter().filter_map(Value::as_str).map(str::to_string).collect(),
        _ => Vec::new(),
    };

    Ok(RawRecord {
        locator,
        title: text("title"),
        authors,
        abstract_text: text("abstract"),
        date,
        citations,
        venue: text("venue"),
        fields,
    })
}
