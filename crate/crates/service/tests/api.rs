use std::collections::BTreeSet;
use std::time::Duration;

use axum::body::Body;
use axum::http::{header, Method, Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use infgon::{build_exchange_quiver, Edge, IceQuiver, TriangulationDesc};
use infgon_service::{router, AppState, ServiceConfig};
use serde_json::{json, Value};
use tower::ServiceExt;

fn app() -> Router {
    router(AppState::new(&ServiceConfig::default()))
}

async fn send(app: &Router, method: Method, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let (status, bytes) = send_raw(app, method, uri, body, None).await;
    let value = if bytes.is_empty() { Value::Null } else { serde_json::from_slice(&bytes).unwrap() };
    (status, value)
}

async fn send_raw(
    app: &Router,
    method: Method,
    uri: &str,
    body: Option<Value>,
    accept: Option<&str>,
) -> (StatusCode, Vec<u8>) {
    let mut req = Request::builder().method(method).uri(uri);
    if let Some(a) = accept {
        req = req.header(header::ACCEPT, a);
    }
    let req = match body {
        Some(v) => req.header(header::CONTENT_TYPE, "application/json").body(Body::from(v.to_string())),
        None => req.body(Body::empty()),
    }
    .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    (status, resp.into_body().collect().await.unwrap().to_bytes().to_vec())
}

async fn session(app: &Router, base: Value) -> String {
    let (status, body) = send(app, Method::POST, "/sessions", Some(json!({ "base": base }))).await;
    assert_eq!(status, StatusCode::CREATED, "{body}");
    body["id"].as_str().unwrap().to_string()
}

fn arcs_of(window: &Value) -> BTreeSet<(i64, i64)> {
    window["arcs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| (a["arc"][0].as_i64().unwrap(), a["arc"][1].as_i64().unwrap()))
        .collect()
}

#[tokio::test]
async fn create_reports_classification() {
    let app = app();
    let (s, body) =
        send(&app, Method::POST, "/sessions", Some(json!({"base": {"kind": "fountain", "vertex": 0}}))).await;
    assert_eq!(s, StatusCode::CREATED);
    assert_eq!(body["classification"], "fountain");
    assert_eq!(body["k"], 0);
    assert_eq!(body["components"], 2);
    let (_, body) =
        send(&app, Method::POST, "/sessions", Some(json!({"base": {"kind": "leapfrog", "center": 0}}))).await;
    assert_eq!(body["components"], 1);
    let (_, body) =
        send(&app, Method::POST, "/sessions", Some(json!({"base": {"kind": "split", "l": 0, "r": 3}}))).await;
    assert_eq!(body["classification"], "split_fountain");
    assert_eq!(body["components"], 3);
    assert_eq!(body["bridge"], json!([0, 3]));
}

#[tokio::test]
async fn invalid_descriptors_are_rejected() {
    let app = app();
    // (1,4) crosses the fountain arc (0,2).
    let crossing = json!({"base": {"kind": "fountain", "vertex": 0}, "added": [[1, 4]]});
    let (s, body) = send(&app, Method::POST, "/sessions", Some(crossing)).await;
    assert_eq!(s, StatusCode::BAD_REQUEST);
    assert!(body["code"].is_string() && body["message"].is_string(), "{body}");
    let holed = json!({"base": {"kind": "fountain", "vertex": 0}, "removed": [[0, 2]]});
    assert_eq!(send(&app, Method::POST, "/sessions", Some(holed)).await.0, StatusCode::BAD_REQUEST);
    let garbage = json!({"base": {"kind": "spiral"}});
    assert_eq!(send(&app, Method::POST, "/sessions", Some(garbage)).await.0, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn window_snapshot() {
    let app = app();
    let id = session(&app, json!({"kind": "fountain", "vertex": 0})).await;
    let (s, w) = send(&app, Method::GET, &format!("/sessions/{id}/window?a=-2&b=3"), None).await;
    assert_eq!(s, StatusCode::OK);
    let expected: BTreeSet<(i64, i64)> = TriangulationDesc::fountain(0)
        .arcs_in_window(-2, 3)
        .unwrap()
        .into_iter()
        .map(|e| (e.left(), e.right()))
        .collect();
    assert_eq!(arcs_of(&w), expected);
    assert_eq!(arcs_of(&w), [(-2, 0), (0, 2), (0, 3)].into());
    assert!(w["arcs"].as_array().unwrap().iter().all(|a| a["flippable"] == true));
    assert_eq!(w["sides"].as_array().unwrap().len(), 5);
    assert_eq!(w["fountains"], json!([0]));

    let id = session(&app, json!({"kind": "split", "l": 0, "r": 3})).await;
    let (_, w) = send(&app, Method::GET, &format!("/sessions/{id}/window?a=0&b=3"), None).await;
    let bridge = w["arcs"].as_array().unwrap().iter().find(|a| a["arc"] == json!([0, 3])).unwrap().clone();
    assert_eq!(bridge["frozen"], true);
    assert_eq!(bridge["flippable"], false);

    let (s, body) = send(&app, Method::GET, &format!("/sessions/{id}/window?a=3&b=1"), None).await;
    assert_eq!(s, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(body["code"], "EmptyWindow");
    let (s, body) = send(&app, Method::GET, &format!("/sessions/{id}/window?a=-5000&b=5000"), None).await;
    assert_eq!(s, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(body["code"], "WindowTooLarge");
}

#[tokio::test]
async fn flips_and_errors() {
    let app = app();
    let id = session(&app, json!({"kind": "fountain", "vertex": 0})).await;
    let flip = |arc: Value, quantum: bool| json!({"arc": arc, "quantum": quantum});
    let uri = format!("/sessions/{id}/flip");
    let (s, body) = send(&app, Method::POST, &uri, Some(flip(json!([0, 2]), false))).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(body["new_arc"], json!([1, 3]));
    assert_eq!(body["relation"], json!({"lhs": [[1, 3], [0, 2]], "rhs": [[[0, 1], [2, 3]], [[0, 3], [1, 2]]]}));
    assert_eq!(body["relation_text"], "Δ^{13}Δ^{02} = Δ^{01}Δ^{23} + Δ^{03}Δ^{12}");
    assert!(body.get("q_relation").is_none());

    let (s, body) = send(&app, Method::POST, &uri, Some(flip(json!([0, 2]), false))).await;
    assert_eq!(s, StatusCode::CONFLICT);
    assert_eq!(body["code"], "NotInTriangulation");
    assert_eq!(body["arc"], json!([0, 2]));

    let (s, body) = send(&app, Method::POST, &uri, Some(flip(json!([0, 3]), true))).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(body["new_arc"], json!([1, 4]));
    assert_eq!(body["q_relation"]["qpow"], json!([-1, 1]));

    let (s, body) = send(&app, Method::POST, &uri, Some(flip(json!([0, 1]), false))).await;
    assert_eq!(s, StatusCode::CONFLICT);
    assert_eq!(body["code"], "SideNotFlippable");
    assert_eq!(body["message"], "side (0,1) is not flippable");

    let split = session(&app, json!({"kind": "split", "l": 0, "r": 3})).await;
    let (s, body) = send(&app, Method::POST, &format!("/sessions/{split}/flip"), Some(flip(json!([0, 3]), true))).await;
    assert_eq!(s, StatusCode::CONFLICT);
    assert_eq!(body["code"], "FrozenArc");

    let (s, _) = send(&app, Method::POST, &uri, Some(json!({"arc": [3, 1]}))).await;
    assert_eq!(s, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn quantum_flip_payload() {
    let app = app();
    let id = session(&app, json!({"kind": "fountain", "vertex": 0})).await;
    let (_, body) =
        send(&app, Method::POST, &format!("/sessions/{id}/flip"), Some(json!({"arc": [0, 2], "quantum": true}))).await;
    assert_eq!(
        body["q_relation"],
        json!({"lhs": [[0, 2], [1, 3]], "rhs": [[[0, 1], [2, 3]], [[0, 3], [1, 2]]], "qpow": [-1, 1]})
    );
    assert_eq!(body["q_relation_text"], "Δ^{02}Δ^{13} = q^{-1}Δ^{01}Δ^{23} + qΔ^{03}Δ^{12}");
}

#[tokio::test]
async fn quiver_json_and_dot() {
    let app = app();
    let id = session(&app, json!({"kind": "leapfrog", "center": 0})).await;
    let (s, body) = send(&app, Method::GET, &format!("/sessions/{id}/quiver?a=-6&b=7"), None).await;
    assert_eq!(s, StatusCode::OK);
    let q: IceQuiver = serde_json::from_value(body).unwrap();
    let arrows: BTreeSet<(Edge, Edge)> = q.arrows().into_iter().map(|(u, v, _)| (u, v)).collect();
    assert_eq!(arrows, infgon::verify::leapfrog_golden_arrows());

    let (s, dot) =
        send_raw(&app, Method::GET, &format!("/sessions/{id}/quiver?a=-6&b=7"), None, Some("text/vnd.graphviz")).await;
    assert_eq!(s, StatusCode::OK);
    let dot = String::from_utf8(dot).unwrap();
    assert!(dot.starts_with("digraph {"));
    assert_eq!(dot.matches(" -> ").count(), arrows.len());

    let (s, _) = send(&app, Method::GET, &format!("/sessions/{id}/quiver?a=-900&b=900"), None).await;
    assert_eq!(s, StatusCode::UNPROCESSABLE_ENTITY);
}

#[tokio::test]
async fn quiver_after_flip_is_the_mutation() {
    let app = app();
    let id = session(&app, json!({"kind": "fountain", "vertex": 0})).await;
    let get = |id: String| {
        let app = app.clone();
        async move {
            let (_, body) = send(&app, Method::GET, &format!("/sessions/{id}/quiver?a=-6&b=7"), None).await;
            serde_json::from_value::<IceQuiver>(body).unwrap()
        }
    };
    let before = get(id.clone()).await;
    send(&app, Method::POST, &format!("/sessions/{id}/flip"), Some(json!({"arc": [0, 3]}))).await;
    let after = get(id.clone()).await;
    let e = |l, r| Edge::new(l, r).unwrap();
    let mut mutated = before.mutate_at(e(0, 3)).unwrap();
    mutated.relabel(e(0, 3), e(2, 4)).unwrap();
    let interior: BTreeSet<Edge> =
        after.vertices().iter().map(|v| v.label).filter(|x| x.left() >= -3 && x.right() <= 5).collect();
    assert!(interior.contains(&e(2, 4)));
    assert!(mutated.agrees_on(&after, &interior));
    let (t, _) = TriangulationDesc::fountain(0).flip(e(0, 3)).unwrap();
    assert_eq!(after, build_exchange_quiver(&t, -6, 7).unwrap());
}

#[tokio::test]
async fn undo_and_redo() {
    let app = app();
    let id = session(&app, json!({"kind": "fountain", "vertex": 0})).await;
    let window = |app: Router, id: String| async move {
        arcs_of(&send(&app, Method::GET, &format!("/sessions/{id}/window?a=-4&b=6"), None).await.1)
    };
    let initial = window(app.clone(), id.clone()).await;
    let (s, body) = send(&app, Method::POST, &format!("/sessions/{id}/undo"), None).await;
    assert_eq!(s, StatusCode::CONFLICT);
    assert_eq!(body["code"], "EmptyUndoStack");

    send(&app, Method::POST, &format!("/sessions/{id}/flip"), Some(json!({"arc": [0, 2]}))).await;
    let flipped = window(app.clone(), id.clone()).await;
    assert_ne!(flipped, initial);

    let (s, snap) = send(&app, Method::POST, &format!("/sessions/{id}/undo"), None).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(snap["redo_depth"], 1);
    assert_eq!(window(app.clone(), id.clone()).await, initial);

    let (s, _) = send(&app, Method::POST, &format!("/sessions/{id}/redo"), None).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(window(app.clone(), id.clone()).await, flipped);
    let (s, body) = send(&app, Method::POST, &format!("/sessions/{id}/redo"), None).await;
    assert_eq!(s, StatusCode::CONFLICT);
    assert_eq!(body["code"], "EmptyRedoStack");
}

#[tokio::test]
async fn unknown_sessions_are_404() {
    let app = app();
    for uri in ["/sessions/not-a-uuid/window", "/sessions/00000000-0000-0000-0000-000000000000/quiver"] {
        let (s, body) = send(&app, Method::GET, uri, None).await;
        assert_eq!(s, StatusCode::NOT_FOUND);
        assert_eq!(body["code"], "NoSession");
    }
    let (s, _) = send(&app, Method::POST, "/sessions/00000000-0000-0000-0000-000000000000/undo", None).await;
    assert_eq!(s, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn session_state_equals_library_fold() {
    let app = app();
    let id = session(&app, json!({"kind": "split", "l": -1, "r": 4})).await;
    let e = |l, r| Edge::new(l, r).unwrap();
    let flips = [e(-1, 2), e(-1, 3), e(4, 6), e(-3, -1)];
    let mut t = TriangulationDesc::split(-1, 4);
    for f in flips {
        let (s, body) = send(&app, Method::POST, &format!("/sessions/{id}/flip"), Some(json!({"arc": f}))).await;
        assert_eq!(s, StatusCode::OK, "{body}");
        t = t.flip(f).unwrap().0;
    }
    let (_, snap) = send(&app, Method::GET, &format!("/sessions/{id}"), None).await;
    let desc: TriangulationDesc = serde_json::from_value(snap["descriptor"].clone()).unwrap();
    assert_eq!(desc, t);
    assert_eq!(snap["history"].as_array().unwrap().len(), 4);
}

#[tokio::test]
async fn concurrent_flips_are_serialized() {
    let app = app();
    let id = session(&app, json!({"kind": "fountain", "vertex": 0})).await;
    let tasks: Vec<_> = (0..8)
        .map(|_| {
            let (app, uri) = (app.clone(), format!("/sessions/{id}/flip"));
            tokio::spawn(async move { send(&app, Method::POST, &uri, Some(json!({"arc": [0, 2]}))).await.0 })
        })
        .collect();
    let mut ok = 0;
    for t in tasks {
        match t.await.unwrap() {
            StatusCode::OK => ok += 1,
            s => assert_eq!(s, StatusCode::CONFLICT),
        }
    }
    // Only the first flip of (0,2) succeeds; afterwards the arc is gone.
    assert_eq!(ok, 1);
}

#[tokio::test]
async fn qcommute_matrix() {
    let app = app();
    let id = session(&app, json!({"kind": "fountain", "vertex": 0})).await;
    let (s, body) = send(&app, Method::GET, &format!("/sessions/{id}/qcommute?a=0&b=3"), None).await;
    assert_eq!(s, StatusCode::OK);
    let edges: Vec<Edge> = serde_json::from_value(body["edges"].clone()).unwrap();
    let l: Vec<Vec<i64>> = serde_json::from_value(body["l"].clone()).unwrap();
    assert_eq!(edges.len(), 5);
    for (n, x) in edges.iter().enumerate() {
        for (m, y) in edges.iter().enumerate() {
            assert_eq!(l[n][m], infgon::l_entry((*x).into(), (*y).into()).unwrap());
            assert_eq!(l[n][m], -l[m][n]);
        }
    }
}

#[tokio::test]
async fn openapi_and_cors() {
    let app = app();
    let (s, doc) = send(&app, Method::GET, "/spec", None).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(doc["openapi"], "3.0.3");
    for path in [
        "/sessions",
        "/sessions/{id}/window",
        "/sessions/{id}/flip",
        "/sessions/{id}/quiver",
        "/sessions/{id}/undo",
        "/sessions/{id}/redo",
    ] {
        assert!(doc["paths"].get(path).is_some(), "{path}");
    }
    let req = Request::builder()
        .method(Method::OPTIONS)
        .uri("/sessions")
        .header(header::ORIGIN, "http://localhost:5173")
        .header(header::ACCESS_CONTROL_REQUEST_METHOD, "POST")
        .body(Body::empty())
        .unwrap();
    let resp = app.oneshot(req).await.unwrap();
    assert!(resp.headers().contains_key(header::ACCESS_CONTROL_ALLOW_ORIGIN));
}

#[tokio::test]
async fn snapshots_survive_restart() {
    let dir = tempfile::tempdir().unwrap();
    let config = ServiceConfig { ttl: Duration::from_secs(60), snapshot_dir: Some(dir.path().to_path_buf()) };
    let app = router(AppState::new(&config));
    let id = session(&app, json!({"kind": "fountain", "vertex": 0})).await;
    send(&app, Method::POST, &format!("/sessions/{id}/flip"), Some(json!({"arc": [0, 2]}))).await;
    send(&app, Method::POST, &format!("/sessions/{id}/flip"), Some(json!({"arc": [0, 3]}))).await;
    send(&app, Method::POST, &format!("/sessions/{id}/undo"), None).await;

    let state = AppState::new(&config);
    assert_eq!(state.store.load_snapshots(dir.path()).unwrap(), 1);
    let restarted = router(state);
    let (s, snap) = send(&restarted, Method::GET, &format!("/sessions/{id}"), None).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(snap["undo_depth"], 1);
    assert_eq!(snap["redo_depth"], 1);
    let (_, body) = send(&restarted, Method::POST, &format!("/sessions/{id}/redo"), None).await;
    assert_eq!(body["history"].as_array().unwrap().len(), 2);
}
