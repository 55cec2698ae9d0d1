//! Drives the HTTP API in-process: create a fountain session, flip twice,
//! undo once, and print each response.

use axum::body::Body;
use axum::http::{Method, Request};
use http_body_util::BodyExt;
use infgon_service::{router, AppState, ServiceConfig};
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(app: &axum::Router, method: Method, uri: &str, body: Option<Value>) -> Value {
    let req = Request::builder().method(method).uri(uri).header("content-type", "application/json");
    let req = req.body(body.map_or_else(Body::empty, |b| Body::from(b.to_string()))).unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value: Value = serde_json::from_slice(&bytes).unwrap_or(Value::Null);
    println!("{status} {uri}\n{}\n", serde_json::to_string_pretty(&value).unwrap());
    value
}

#[tokio::main]
async fn main() {
    let app = router(AppState::new(&ServiceConfig::default()));
    let created = call(&app, Method::POST, "/sessions", Some(json!({"base": {"kind": "fountain", "vertex": 0}}))).await;
    let id = created["id"].as_str().unwrap().to_string();

    call(&app, Method::GET, &format!("/sessions/{id}/window?a=-2&b=3"), None).await;
    call(&app, Method::POST, &format!("/sessions/{id}/flip"), Some(json!({"arc": [0, 2], "quantum": true}))).await;
    call(&app, Method::POST, &format!("/sessions/{id}/flip"), Some(json!({"arc": [0, 3]}))).await;
    // A second flip of the same arc is a conflict.
    call(&app, Method::POST, &format!("/sessions/{id}/flip"), Some(json!({"arc": [0, 3]}))).await;
    call(&app, Method::POST, &format!("/sessions/{id}/undo"), None).await;
    call(&app, Method::GET, &format!("/sessions/{id}/window?a=-2&b=4"), None).await;
}
