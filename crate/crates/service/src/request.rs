//! View requests: query-parameter parsing, defaults and validation.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use chrono::NaiveDate;
use rtvis_core::coauthor::DEFAULT_TOP_AUTHORS;
use rtvis_core::text::DEFAULT_K;
use rtvis_core::venues::DEFAULT_TOP_VENUES;
use rtvis_core::{Granularity, RaceMode, TimeRange};
use serde::Serialize;
use thiserror::Error;

/// Range used when the corpus is empty and no bounds are given.
pub const EMPTY_CORPUS_RANGE: (NaiveDate, NaiveDate) =
    match (NaiveDate::from_ymd_opt(1, 1, 1), NaiveDate::from_ymd_opt(9999, 12, 31)) {
        (Some(a), Some(b)) => (a, b),
        _ => panic!("static dates"),
    };

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ViewKind {
    ThemeRiver,
    Coauthors,
    Venues,
    Words,
}

impl ViewKind {
    pub const ALL: [ViewKind; 4] = [
        ViewKind::ThemeRiver,
        ViewKind::Coauthors,
        ViewKind::Venues,
        ViewKind::Words,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ViewKind::ThemeRiver => "themeriver",
            ViewKind::Coauthors => "coauthors",
            ViewKind::Venues => "venues",
            ViewKind::Words => "words",
        }
    }

    fn default_count(&self) -> Option<usize> {
        match self {
            ViewKind::ThemeRiver => None,
            ViewKind::Coauthors => Some(DEFAULT_TOP_AUTHORS),
            ViewKind::Venues => Some(DEFAULT_TOP_VENUES),
            ViewKind::Words => Some(DEFAULT_K),
        }
    }
}

impl fmt::Display for ViewKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ViewKind {
    type Err = ApiError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ViewKind::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| ApiError::UnknownView(s.to_string()))
    }
}

/// Client-facing error with a stable machine-readable code.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ApiError {
    #[error("unknown view \"{0}\"")]
    UnknownView(String),
    #[error("invalid date for {param}: \"{value}\" (expected YYYY-MM-DD)")]
    BadDate { param: &'static str, value: String },
    #[error("range start {from} is after range end {to}")]
    InvalidRange { from: NaiveDate, to: NaiveDate },
    #[error("n must be a positive integer, got \"{0}\"")]
    InvalidN(String),
    #[error("k must be a positive integer, got \"{0}\"")]
    InvalidK(String),
    #[error("granularity must be year or month, got \"{0}\"")]
    InvalidGranularity(String),
    #[error("mode must be cumulative or per_bucket, got \"{0}\"")]
    InvalidMode(String),
    #[error("corpus is still loading")]
    NotReady,
    #[error("internal error: {0}")]
    Internal(String),
}

impl ApiError {
    pub fn code(&self) -> &'static str {
        match self {
            ApiError::UnknownView(_) => "UnknownView",
            ApiError::BadDate { .. } => "BadDate",
            ApiError::InvalidRange { .. } => "InvalidRange",
            ApiError::InvalidN(_) => "InvalidN",
            ApiError::InvalidK(_) => "InvalidK",
            ApiError::InvalidGranularity(_) => "InvalidGranularity",
            ApiError::InvalidMode(_) => "InvalidMode",
            ApiError::NotReady => "NotReady",
            ApiError::Internal(_) => "Internal",
        }
    }

    /// HTTP status code for this error.
    pub fn status(&self) -> u16 {
        match self {
            ApiError::NotReady => 503,
            ApiError::Internal(_) => 500,
            _ => 400,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "error": { "code": self.code(), "message": self.to_string() } })
    }
}

/// Raw, unvalidated parameters as they arrive in a query string or on the
/// command line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawParams {
    pub from: Option<String>,
    pub to: Option<String>,
    pub granularity: Option<String>,
    pub n: Option<String>,
    pub k: Option<String>,
    pub mode: Option<String>,
}

impl RawParams {
    pub fn from_query(query: &HashMap<String, String>) -> Self {
        let get = |k: &str| query.get(k).cloned();
        RawParams {
            from: get("from"),
            to: get("to"),
            granularity: get("granularity"),
            n: get("n"),
            k: get("k"),
            mode: get("mode"),
        }
    }
}

/// A fully resolved request: every parameter the view uses is concrete, and
/// parameters it ignores are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ViewRequest {
    pub view: ViewKind,
    pub range: TimeRange,
    pub granularity: Option<Granularity>,
    pub count: Option<usize>,
    pub mode: Option<RaceMode>,
}

impl ViewRequest {
    /// Applies defaults, then validates. `bounds` is the corpus date span.
    pub fn resolve(view: ViewKind, raw: &RawParams, bounds: Option<TimeRange>) -> Result<Self, ApiError> {
        let (default_from, default_to) = bounds.map_or(EMPTY_CORPUS_RANGE, |b| (b.from, b.to));
        let from = parse_date("from", raw.from.as_deref())?.unwrap_or(default_from);
        let to = parse_date("to", raw.to.as_deref())?.unwrap_or(default_to);
        let range = TimeRange::new(from, to).map_err(|_| ApiError::InvalidRange { from, to })?;

        let granularity = match view {
            ViewKind::ThemeRiver | ViewKind::Words => Some(match raw.granularity.as_deref() {
                None => Granularity::default(),
                Some(g) => g.parse().map_err(|_| ApiError::InvalidGranularity(g.to_string()))?,
            }),
            _ => None,
        };

        let count = match view {
            ViewKind::Words => {
                let value = raw.k.as_deref().or(raw.n.as_deref());
                Some(parse_count(value, view.default_count(), ApiError::InvalidK)?)
            }
            ViewKind::Coauthors | ViewKind::Venues => {
                Some(parse_count(raw.n.as_deref(), view.default_count(), ApiError::InvalidN)?)
            }
            ViewKind::ThemeRiver => None,
        };

        let mode = match view {
            ViewKind::Words => Some(match raw.mode.as_deref() {
                None => RaceMode::default(),
                Some(m) => m.parse().map_err(|_| ApiError::InvalidMode(m.to_string()))?,
            }),
            _ => None,
        };

        Ok(ViewRequest {
            view,
            range,
            granularity,
            count,
            mode,
        })
    }

    /// Canonical text form. Every component is drawn from a fixed alphabet
    /// without `|`, so distinct requests map to distinct keys.
    pub fn canonical_key(&self) -> String {
        format!(
            "{}|{}|{}|{}|{}|{}",
            self.view,
            self.range.from,
            self.range.to,
            self.granularity.map_or("-", |g| g.as_str()),
            self.count.map_or_else(|| "-".to_string(), |c| c.to_string()),
            self.mode.map_or("-", |m| m.as_str()),
        )
    }

    /// The resolved parameters echoed back to clients.
    pub fn echo(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("from".into(), self.range.from.to_string().into());
        map.insert("to".into(), self.range.to.to_string().into());
        if let Some(g) = self.granularity {
            map.insert("granularity".into(), g.as_str().into());
        }
        if let Some(c) = self.count {
            let name = if self.view == ViewKind::Words { "k" } else { "n" };
            map.insert(name.into(), c.into());
        }
        if let Some(m) = self.mode {
            map.insert("mode".into(), m.as_str().into());
        }
        serde_json::Value::Object(map)
    }
}

fn parse_date(param: &'static str, value: Option<&str>) -> Result<Option<NaiveDate>, ApiError> {
    let Some(value) = value else { return Ok(None) };
    let bad = || ApiError::BadDate {
        param,
        value: value.to_string(),
    };
    if value.len() != 10 {
        return Err(bad());
    }
    NaiveDate::parse_from_str(value, "%Y-%m-%d")
        .map(Some)
        .map_err(|_| bad())
}

fn parse_count(value: Option<&str>, default: Option<usize>, err: fn(String) -> ApiError) -> Result<usize, ApiError> {
    match value {
        None => Ok(default.expect("view has a default count")),
        Some(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| err(v.to_string())),
    }
}
