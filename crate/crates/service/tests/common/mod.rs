#![allow(dead_code)]

use std::num::NonZeroUsize;
use std::path::PathBuf;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use rtvis_core::{Corpus, CorpusFormat, StopwordSet};
use rtvis_service::http::{router, AppState};
use rtvis_service::ViewEngine;
use serde_json::Value;
use tower::ServiceExt;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name)
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

pub fn fixture_corpus() -> Corpus {
    let bytes = std::fs::read(fixture_path("fixture_a.csv")).unwrap();
    Corpus::from_bytes(&bytes, CorpusFormat::Csv, "fixture_a.csv").unwrap()
}

pub fn engine(corpus: Corpus, cache: Option<usize>) -> ViewEngine {
    ViewEngine::new(corpus, StopwordSet::english(), cache.and_then(NonZeroUsize::new))
}

pub fn app(corpus: Corpus, cache: Option<usize>) -> Router {
    router(AppState::ready(engine(corpus, cache)), None)
}

pub struct Reply {
    pub status: StatusCode,
    pub cache: Option<String>,
    pub body: Vec<u8>,
}

impl Reply {
    pub fn json(&self) -> Value {
        serde_json::from_slice(&self.body).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&self.body)))
    }
}

pub async fn get(app: &Router, uri: &str) -> Reply {
    let resp = app
        .clone()
        .oneshot(Request::get(uri).body(Body::empty()).unwrap())
        .await
        .unwrap();
    let status = resp.status();
    let cache = resp.headers().get("x-cache").map(|v| v.to_str().unwrap().to_string());
    let body = resp.into_body().collect().await.unwrap().to_bytes().to_vec();
    Reply { status, cache, body }
}

/// Serializes with object keys sorted at every level.
pub fn canonical(value: &Value) -> String {
    fn sort(v: &Value) -> Value {
        match v {
            Value::Object(map) => {
                let sorted: std::collections::BTreeMap<_, _> = map.iter().map(|(k, v)| (k.clone(), sort(v))).collect();
                Value::Object(sorted.into_iter().collect())
            }
            Value::Array(items) => Value::Array(items.iter().map(sort).collect()),
            other => other.clone(),
        }
    }
    serde_json::to_string_pretty(&sort(value)).unwrap() + "\n"
}

/// Golden endpoints over the five-paper fixture: (golden file, request URI).
pub const GOLDEN_CASES: [(&str, &str); 10] = [
    ("themeriver.json", "/api/themeriver"),
    (
        "themeriver_month.json",
        "/api/themeriver?granularity=month&from=2019-01-01&to=2019-12-31",
    ),
    ("coauthors.json", "/api/coauthors?n=10"),
    ("coauthors_top2.json", "/api/coauthors?n=2"),
    (
        "coauthors_2019.json",
        "/api/coauthors?from=2019-01-01&to=2019-12-31&n=10",
    ),
    ("venues_top2.json", "/api/venues?n=2"),
    ("venues_2019.json", "/api/venues?from=2019-01-01&to=2019-12-31"),
    ("words_k3.json", "/api/words?k=3"),
    ("words_per_bucket.json", "/api/words?k=2&mode=per_bucket"),
    ("corpus_stats.json", "/api/corpus/stats"),
];

/// Compares against the golden file; `UPDATE_GOLDEN=1` rewrites it instead.
pub fn check_golden(name: &str, value: &Value) -> Result<(), String> {
    let path = golden_path(name);
    let actual = canonical(value);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &actual).unwrap();
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let expected = canonical(&serde_json::from_str(&expected).map_err(|e| e.to_string())?);
    if expected == actual {
        Ok(())
    } else {
        Err(format!(
            "{name} differs from golden:\n--- expected\n{expected}\n--- actual\n{actual}"
        ))
    }
}
