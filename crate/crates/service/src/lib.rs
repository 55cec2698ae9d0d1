//! HTTP JSON API for exploring triangulations of the ∞-gon: sessions hold a
//! cluster state and are advanced by flips, with undo and redo.

mod error;
mod openapi;
mod store;

use std::collections::BTreeMap;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, Query, State};
use axum::http::{header, HeaderMap, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use infgon::quantum::QuantumRelation;
use infgon::{
    build_exchange_quiver, component_count, l_entry, quantum_mutate, Edge, ExchangeRelation, PluckerLabel,
    TriangulationClass, TriangulationDesc,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use tower_http::cors::CorsLayer;
use uuid::Uuid;

pub use error::{ApiError, ErrorBody};
pub use store::{Session, SessionStore};

pub const DEFAULT_WINDOW: (i64, i64) = (-6, 7);
pub const DOT_MIME: &str = "text/vnd.graphviz";

#[derive(Clone, Debug)]
pub struct ServiceConfig {
    pub ttl: Duration,
    pub snapshot_dir: Option<PathBuf>,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig { ttl: Duration::from_secs(3600), snapshot_dir: None }
    }
}

#[derive(Clone)]
pub struct AppState {
    pub store: Arc<SessionStore>,
}

impl AppState {
    pub fn new(config: &ServiceConfig) -> Self {
        AppState { store: Arc::new(SessionStore::new(config.ttl, config.snapshot_dir.clone())) }
    }
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/spec", get(spec))
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", get(show_session).delete(delete_session))
        .route("/sessions/{id}/window", get(window))
        .route("/sessions/{id}/flip", post(flip))
        .route("/sessions/{id}/quiver", get(quiver))
        .route("/sessions/{id}/qcommute", get(qcommute))
        .route("/sessions/{id}/undo", post(undo))
        .route("/sessions/{id}/redo", post(redo))
        .layer(CorsLayer::permissive())
        .with_state(state)
}

/// Serves until the process is stopped, evicting idle sessions once a minute.
pub async fn serve(addr: SocketAddr, config: ServiceConfig) -> std::io::Result<()> {
    let state = AppState::new(&config);
    if let Some(dir) = &config.snapshot_dir {
        if dir.is_dir() {
            state.store.load_snapshots(dir)?;
        }
    }
    let store = state.store.clone();
    tokio::spawn(async move {
        let mut tick = tokio::time::interval(Duration::from_secs(60));
        loop {
            tick.tick().await;
            store.evict_expired(Instant::now());
        }
    });
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(state)).await
}

fn parse_id(id: &str) -> Result<Uuid, ApiError> {
    Uuid::parse_str(id).map_err(|_| ApiError::NoSession(id.to_string()))
}

fn body<T>(payload: Result<Json<T>, JsonRejection>) -> Result<T, ApiError> {
    payload.map(|Json(x)| x).map_err(|r| ApiError::BadRequest(r.body_text()))
}

#[derive(Debug, Serialize)]
struct Classification {
    classification: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<i64>,
    components: usize,
    finite_component_empty: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    bridge: Option<Edge>,
}

fn classification(t: &TriangulationDesc) -> Classification {
    let c = component_count(t);
    let (name, k, l, r) = match t.classify() {
        TriangulationClass::LocallyFinite => ("locally_finite", None, None, None),
        TriangulationClass::FountainAt(k) => ("fountain", Some(k), None, None),
        TriangulationClass::SplitFountainAt(l, r) => ("split_fountain", None, Some(l), Some(r)),
    };
    Classification {
        classification: name,
        k,
        l,
        r,
        components: c.count,
        finite_component_empty: c.finite_component_empty,
        bridge: t.bridge(),
    }
}

fn snapshot(s: &Session) -> Value {
    json!({
        "id": s.id,
        "descriptor": s.current.desc,
        "class": classification(&s.current.desc),
        "history": s.current.history,
        "undo_depth": s.undo_depth(),
        "redo_depth": s.redo_depth(),
    })
}

async fn spec() -> Json<Value> {
    Json(openapi::document())
}

async fn create_session(
    State(st): State<AppState>,
    payload: Result<Json<TriangulationDesc>, JsonRejection>,
) -> Result<impl IntoResponse, ApiError> {
    let desc = body(payload)?;
    desc.validate().map_err(ApiError::InvalidDescriptor)?;
    let session = Session::new(desc);
    let mut out = serde_json::to_value(classification(&session.current.desc)).expect("serializable");
    out["id"] = json!(session.id);
    let _ = st.store.persist(&session);
    st.store.insert(session);
    Ok((StatusCode::CREATED, Json(out)))
}

async fn show_session(State(st): State<AppState>, Path(id): Path<String>) -> Result<Json<Value>, ApiError> {
    let s = st.store.get(parse_id(&id)?)?;
    let s = s.read().await;
    Ok(Json(snapshot(&s)))
}

async fn delete_session(State(st): State<AppState>, Path(id): Path<String>) -> Result<StatusCode, ApiError> {
    let id = parse_id(&id)?;
    if st.store.remove(id) {
        Ok(StatusCode::NO_CONTENT)
    } else {
        Err(ApiError::no_session(id))
    }
}

#[derive(Debug, Deserialize)]
struct WindowQuery {
    a: Option<i64>,
    b: Option<i64>,
}

impl WindowQuery {
    fn bounds(&self) -> (i64, i64) {
        (self.a.unwrap_or(DEFAULT_WINDOW.0), self.b.unwrap_or(DEFAULT_WINDOW.1))
    }
}

fn window_query(
    q: Result<Query<WindowQuery>, axum::extract::rejection::QueryRejection>,
) -> Result<(i64, i64), ApiError> {
    q.map(|Query(w)| w.bounds()).map_err(|r| ApiError::BadRequest(r.body_text()))
}

#[derive(Debug, Serialize)]
struct ArcView {
    arc: Edge,
    variable: PluckerLabel,
    frozen: bool,
    flippable: bool,
}

async fn window(
    State(st): State<AppState>,
    Path(id): Path<String>,
    q: Result<Query<WindowQuery>, axum::extract::rejection::QueryRejection>,
) -> Result<Json<Value>, ApiError> {
    let (a, b) = window_query(q)?;
    let s = st.store.get(parse_id(&id)?)?;
    let s = s.read().await;
    let t = &s.current.desc;
    let arcs: Vec<ArcView> = t
        .arcs_in_window(a, b)?
        .into_iter()
        .map(|e| ArcView { arc: e, variable: e.into(), frozen: t.is_frozen(e), flippable: !t.is_frozen(e) })
        .collect();
    let sides: Vec<Edge> = (a..b).map(Edge::side).collect::<Result<_, _>>()?;
    let fountains: Vec<i64> = match t.classify() {
        TriangulationClass::LocallyFinite => vec![],
        TriangulationClass::FountainAt(k) => vec![k],
        TriangulationClass::SplitFountainAt(l, r) => vec![l, r],
    };
    Ok(Json(json!({
        "a": a,
        "b": b,
        "arcs": arcs,
        "sides": sides,
        "fountains": fountains,
        "class": classification(t),
    })))
}

#[derive(Debug, Deserialize)]
struct FlipRequest {
    arc: Edge,
    #[serde(default)]
    quantum: bool,
}

#[derive(Debug, Serialize)]
struct FlipResponse {
    arc: Edge,
    new_arc: Edge,
    relation: ExchangeRelation,
    relation_text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    q_relation: Option<QuantumRelation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q_relation_text: Option<String>,
    undo_depth: usize,
}

async fn flip(
    State(st): State<AppState>,
    Path(id): Path<String>,
    payload: Result<Json<FlipRequest>, JsonRejection>,
) -> Result<Json<FlipResponse>, ApiError> {
    let req = body(payload)?;
    let s = st.store.get(parse_id(&id)?)?;
    let mut s = s.write().await;
    let quantum = if req.quantum { Some(quantum_mutate(&s.current.desc, req.arc)?.relation) } else { None };
    let relation = s.flip(req.arc)?;
    let _ = st.store.persist(&s);
    Ok(Json(FlipResponse {
        arc: req.arc,
        new_arc: relation.new_label().edge()?,
        relation_text: relation.to_string(),
        relation,
        q_relation_text: quantum.map(|q| q.to_string()),
        q_relation: quantum,
        undo_depth: s.undo_depth(),
    }))
}

fn wants_dot(headers: &HeaderMap) -> bool {
    headers
        .get(header::ACCEPT)
        .and_then(|v| v.to_str().ok())
        .is_some_and(|v| v.split(',').any(|m| m.trim().starts_with(DOT_MIME)))
}

async fn quiver(
    State(st): State<AppState>,
    Path(id): Path<String>,
    headers: HeaderMap,
    q: Result<Query<WindowQuery>, axum::extract::rejection::QueryRejection>,
) -> Result<Response, ApiError> {
    let (a, b) = window_query(q)?;
    let s = st.store.get(parse_id(&id)?)?;
    let s = s.read().await;
    let q = build_exchange_quiver(&s.current.desc, a, b)?;
    Ok(if wants_dot(&headers) {
        ([(header::CONTENT_TYPE, DOT_MIME)], q.to_dot()).into_response()
    } else {
        Json(q.to_json()).into_response()
    })
}

/// Quasi-commutation exponents among the edges of a window.
async fn qcommute(
    State(st): State<AppState>,
    Path(id): Path<String>,
    q: Result<Query<WindowQuery>, axum::extract::rejection::QueryRejection>,
) -> Result<Json<Value>, ApiError> {
    let (a, b) = window_query(q)?;
    let s = st.store.get(parse_id(&id)?)?;
    let s = s.read().await;
    let edges: Vec<Edge> = s.current.desc.edges_in_window(a, b)?.into_iter().collect();
    let mut l: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
    for (n, &x) in edges.iter().enumerate() {
        let row = edges.iter().map(|&y| l_entry(x.into(), y.into())).collect::<Result<_, _>>()?;
        l.insert(n, row);
    }
    Ok(Json(json!({ "edges": edges, "l": l.into_values().collect::<Vec<_>>() })))
}

async fn undo(State(st): State<AppState>, Path(id): Path<String>) -> Result<Json<Value>, ApiError> {
    let s = st.store.get(parse_id(&id)?)?;
    let mut s = s.write().await;
    s.undo()?;
    let _ = st.store.persist(&s);
    Ok(Json(snapshot(&s)))
}

async fn redo(State(st): State<AppState>, Path(id): Path<String>) -> Result<Json<Value>, ApiError> {
    let s = st.store.get(parse_id(&id)?)?;
    let mut s = s.write().await;
    s.redo()?;
    let _ = st.store.persist(&s);
    Ok(Json(snapshot(&s)))
}
