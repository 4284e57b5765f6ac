//! HTTP routes.
//!
//! `GET /api/{view}` for the four views, `GET /api/corpus/stats`, `GET /healthz`,
//! and static files at `/`. Until the corpus is installed every data route
//! answers 503.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, OnceLock};

use axum::body::Body;
use axum::extract::{Path, Query, State};
use axum::http::{header, HeaderValue, StatusCode};
use axum::response::{Html, IntoResponse, Response};
use axum::routing::get;
use axum::Router;
use tower_http::services::ServeDir;

use crate::cache::Lookup;
use crate::engine::ViewEngine;
use crate::request::{ApiError, RawParams, ViewKind};

/// Shared state: the engine appears once loading completes.
#[derive(Clone, Default)]
pub struct AppState {
    engine: Arc<OnceLock<Arc<ViewEngine>>>,
}

impl AppState {
    pub fn ready(engine: ViewEngine) -> Self {
        let state = AppState::default();
        state.install(engine);
        state
    }

    /// Installs the engine; later calls are ignored.
    pub fn install(&self, engine: ViewEngine) {
        let _ = self.engine.set(Arc::new(engine));
    }

    fn engine(&self) -> Result<Arc<ViewEngine>, ApiError> {
        self.engine.get().cloned().ok_or(ApiError::NotReady)
    }
}

pub fn router(state: AppState, static_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/api/corpus/stats", get(corpus_stats))
        .route("/api/{view}", get(view))
        .route("/healthz", get(healthz))
        .with_state(state);
    match static_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api.route("/", get(landing)),
    }
}

async fn view(
    State(state): State<AppState>,
    Path(view): Path<String>,
    Query(query): Query<HashMap<String, String>>,
) -> Response {
    let result = (|| {
        let kind: ViewKind = view.parse()?;
        let engine = state.engine()?;
        let req = engine.resolve(kind, &RawParams::from_query(&query))?;
        engine.handle(&req)
    })();
    match result {
        Ok((bytes, lookup)) => {
            let mut resp = json_bytes(StatusCode::OK, bytes.to_vec());
            let tag = if lookup == Lookup::Hit { "hit" } else { "miss" };
            resp.headers_mut().insert("x-cache", HeaderValue::from_static(tag));
            resp
        }
        Err(e) => error_response(&e),
    }
}

async fn corpus_stats(State(state): State<AppState>) -> Response {
    match state.engine() {
        Ok(engine) => match serde_json::to_vec(&engine.stats()) {
            Ok(bytes) => json_bytes(StatusCode::OK, bytes),
            Err(e) => error_response(&ApiError::Internal(e.to_string())),
        },
        Err(e) => error_response(&e),
    }
}

async fn healthz(State(state): State<AppState>) -> Response {
    match state.engine() {
        Ok(_) => (StatusCode::OK, "ok").into_response(),
        Err(e) => error_response(&e),
    }
}

async fn landing() -> Html<&'static str> {
    Html(concat!(
        "<!doctype html><title>rtvis</title><h1>rtvis</h1><ul>",
        "<li><a href=\"/api/corpus/stats\">/api/corpus/stats</a></li>",
        "<li><a href=\"/api/themeriver\">/api/themeriver</a></li>",
        "<li><a href=\"/api/coauthors\">/api/coauthors</a></li>",
        "<li><a href=\"/api/venues\">/api/venues</a></li>",
        "<li><a href=\"/api/words\">/api/words</a></li></ul>",
    ))
}

fn json_bytes(status: StatusCode, bytes: Vec<u8>) -> Response {
    let mut resp = Response::new(Body::from(bytes));
    *resp.status_mut() = status;
    resp.headers_mut()
        .insert(header::CONTENT_TYPE, HeaderValue::from_static("application/json"));
    resp
}

fn error_response(err: &ApiError) -> Response {
    let status = StatusCode::from_u16(err.status()).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
    json_bytes(status, err.to_json().to_string().into_bytes())
}
