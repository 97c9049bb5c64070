use std::sync::Arc;
use std::time::{Duration, Instant};

use axum::body::Body;
use axum::http::{header, Method, Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use lotopt_core::io::{generate_instance, instance_to_json, GeneratorProfile};
use lotopt_service::api::router;
use lotopt_service::session::Store;
use serde_json::{json, Value};
use tower::ServiceExt;

const MICRO: &str = include_str!("../../core/tests/fixtures/micro.json");

/// Three branches, each matching one lot-type exactly.
const THREE_SHAPES: &str = r#"{
  "sizes": ["S", "M", "L"],
  "branches": [
    {"id": "a", "demand": [3, 1, 0]},
    {"id": "b", "demand": [0, 2, 2]},
    {"id": "c", "demand": [1, 1, 3]}
  ],
  "lot_universe": [[3, 1, 0], [0, 2, 2], [1, 1, 3]],
  "kappa": 1,
  "m_max": 2,
  "card_lo": 0,
  "card_hi": 40,
  "branch_norm": {"type": "L1"}
}"#;

fn app() -> Router {
    router(Arc::new(Store::default()))
}

async fn call(app: &Router, method: Method, uri: &str, body: Option<String>) -> (StatusCode, Value) {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header(header::CONTENT_TYPE, "application/json")
        .body(body.map(Body::from).unwrap_or_else(Body::empty))
        .unwrap();
    let res = app.clone().oneshot(req).await.unwrap();
    let status = res.status();
    let bytes = res.into_body().collect().await.unwrap().to_bytes();
    let value = if bytes.is_empty() { Value::Null } else { serde_json::from_slice(&bytes).unwrap() };
    (status, value)
}

async fn upload(app: &Router, text: &str) -> String {
    let (status, body) = call(app, Method::POST, "/instances", Some(text.into())).await;
    assert_eq!(status, StatusCode::CREATED, "{body}");
    body["instance_id"].as_str().unwrap().to_string()
}

async fn start(app: &Router, req: Value) -> String {
    let (status, body) = call(app, Method::POST, "/solve", Some(req.to_string())).await;
    assert_eq!(status, StatusCode::ACCEPTED, "{body}");
    body["session_id"].as_str().unwrap().to_string()
}

async fn wait_finished(app: &Router, sid: &str) -> Value {
    let deadline = Instant::now() + Duration::from_secs(30);
    loop {
        let (status, body) = call(app, Method::GET, &format!("/sessions/{sid}"), None).await;
        assert_eq!(status, StatusCode::OK);
        if body["status"] != "running" {
            return body;
        }
        assert!(Instant::now() < deadline, "session did not finish");
        tokio::time::sleep(Duration::from_millis(5)).await;
    }
}

#[tokio::test]
async fn schema_and_validation_errors_are_422() {
    let app = app();
    let bad = MICRO.replace("\"kappa\": 1,\n", "");
    let (status, body) = call(&app, Method::POST, "/instances", Some(bad)).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert!(body["error"].as_str().unwrap().contains("kappa"), "{body}");

    let bad = MICRO.replace("[2, 3]", "[2, \"x\"]");
    let (status, body) = call(&app, Method::POST, "/instances", Some(bad)).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(body["path"], "branches[0].demand[1]");

    let bad = MICRO.replace("\"card_lo\": 5", "\"card_lo\": 9");
    let (status, _) = call(&app, Method::POST, "/instances", Some(bad)).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);

    let id = upload(&app, MICRO).await;
    let (status, _) = call(&app, Method::POST, "/solve", Some(json!({"instance_id": id, "k": 0}).to_string())).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    let (status, _) =
        call(&app, Method::POST, "/solve", Some(json!({"instance_id": id, "kappa": 0}).to_string())).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
}

#[tokio::test]
async fn unknown_ids_are_404() {
    let app = app();
    let ghost = "00000000-0000-4000-8000-000000000000";
    for uri in [
        format!("/sessions/{ghost}"),
        format!("/sessions/{ghost}/plan"),
        format!("/instances/{ghost}"),
        "/sessions/not-a-uuid".to_string(),
    ] {
        let (status, _) = call(&app, Method::GET, &uri, None).await;
        assert_eq!(status, StatusCode::NOT_FOUND, "{uri}");
    }
    let (status, _) = call(&app, Method::POST, &format!("/sessions/{ghost}/cancel"), None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    let (status, _) = call(&app, Method::POST, "/solve", Some(json!({"instance_id": ghost}).to_string())).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn micro_session_finishes_with_optimal_plan() {
    let app = app();
    let id = upload(&app, MICRO).await;
    let sid = start(&app, json!({"instance_id": id, "k": 2, "deterministic_subsets": 10})).await;
    let view = wait_finished(&app, &sid).await;
    assert_eq!(view["status"], "done");
    let last = view["history"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["objective"], 1.0);
    assert_eq!(last["total_items"], 6);
    assert_eq!(last["lot_types"], json!([{"lot": [1, 1], "branches": 2}]));
    assert_eq!(last["multipliers"], json!({"1": 1, "2": 1}));

    let (status, plan) = call(&app, Method::GET, &format!("/sessions/{sid}/plan"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(plan["objective"], 1.0);
    assert_eq!(plan["feasible"], true);
    assert_eq!(plan["assignment"]["b1"]["m"], 2);
}

#[tokio::test]
async fn kappa_override_applies_without_touching_the_instance() {
    let app = app();
    let id = upload(&app, THREE_SHAPES).await;
    let mut objective = Vec::new();
    for kappa in [1, 3] {
        let sid = start(&app, json!({"instance_id": id, "kappa": kappa, "deterministic_subsets": 1000})).await;
        let view = wait_finished(&app, &sid).await;
        assert_eq!(view["status"], "done");
        assert_eq!(view["params"]["kappa"], kappa);
        let last = view["history"].as_array().unwrap().last().unwrap().clone();
        assert!(last["lot_types"].as_array().unwrap().len() <= kappa);
        objective.push(last["objective"].as_f64().unwrap());
    }
    assert!(objective[0] > 0.0);
    assert_eq!(objective[1], 0.0);

    let (_, stored) = call(&app, Method::GET, &format!("/instances/{id}"), None).await;
    assert_eq!(stored["kappa"], 1);
}

#[tokio::test]
async fn infeasible_window_and_missing_plan() {
    let app = app();
    let id = upload(&app, MICRO).await;
    let sid = start(
        &app,
        json!({"instance_id": id, "card_lo": 100, "card_hi": 100, "deterministic_subsets": 10}),
    )
    .await;
    let view = wait_finished(&app, &sid).await;
    assert_eq!(view["status"], "infeasible");
    assert_eq!(view["history"], json!([]));
    let (status, _) = call(&app, Method::GET, &format!("/sessions/{sid}/plan"), None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn cancel_is_immediate_and_idempotent() {
    let app = app();
    let inst = generate_instance(2024, &GeneratorProfile::retail_scale()).unwrap();
    let id = upload(&app, &instance_to_json(&inst)).await;
    let sid = start(&app, json!({"instance_id": id, "budget_ms": 120_000})).await;

    // let the sweep produce at least one incumbent
    let deadline = Instant::now() + Duration::from_secs(30);
    loop {
        let (_, view) = call(&app, Method::GET, &format!("/sessions/{sid}"), None).await;
        if !view["history"].as_array().unwrap().is_empty() {
            break;
        }
        assert!(Instant::now() < deadline, "no incumbent");
        tokio::time::sleep(Duration::from_millis(10)).await;
    }

    let (status, view) = call(&app, Method::POST, &format!("/sessions/{sid}/cancel"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(view["status"], "cancelled");
    let frozen = view["history"].clone();

    tokio::time::sleep(Duration::from_millis(100)).await;
    let (_, again) = call(&app, Method::POST, &format!("/sessions/{sid}/cancel"), None).await;
    assert_eq!(again["status"], "cancelled");
    let (_, polled) = call(&app, Method::GET, &format!("/sessions/{sid}"), None).await;
    assert_eq!(polled["status"], "cancelled");
    assert_eq!(polled["history"], frozen);

    // the best plan found before cancelling stays available
    let (status, plan) = call(&app, Method::GET, &format!("/sessions/{sid}/plan"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(plan["objective"], frozen.as_array().unwrap().last().unwrap()["objective"]);
}

#[tokio::test]
async fn cancelling_a_finished_session_keeps_its_status() {
    let app = app();
    let id = upload(&app, MICRO).await;
    let sid = start(&app, json!({"instance_id": id, "deterministic_subsets": 10})).await;
    wait_finished(&app, &sid).await;
    let (status, view) = call(&app, Method::POST, &format!("/sessions/{sid}/cancel"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(view["status"], "done");
}

#[tokio::test]
async fn estimate_produces_an_instance_fragment() {
    let app = app();
    let sales = "branch_id,product_id,size,day,cumulative_sold\n\
                 b1,p1,S,1,2\nb1,p1,S,2,4\nb1,p1,M,1,1\nb1,p1,M,2,6\n\
                 b2,p1,S,1,1\nb2,p1,S,2,1\nb2,p1,M,1,3\nb2,p1,M,2,5\n";
    let req = json!({
        "sales_csv": sales,
        "config": {"similar_products": ["p1"], "target_total": 100.0},
        "scope": {"branches": ["b1", "b2"], "sizes": ["S", "M"]},
    });
    let (status, body) = call(&app, Method::POST, "/estimate", Some(req.to_string())).await;
    assert_eq!(status, StatusCode::OK, "{body}");
    let branches = body["instance"]["branches"].as_array().unwrap();
    assert_eq!(branches.len(), 2);
    let total: f64 = branches
        .iter()
        .flat_map(|b| b["demand"].as_array().unwrap())
        .map(|v| v.as_f64().unwrap())
        .sum();
    assert!((total - 100.0).abs() < 1e-9, "{total}");

    // the fragment completes into an instance the API accepts
    let mut doc = body["instance"].clone();
    doc["lot_bounds"] = json!({"per_size_lo": [0, 0], "per_size_hi": [3, 3], "total_lo": 1, "total_hi": 4});
    doc["kappa"] = json!(2);
    doc["m_max"] = json!(30);
    doc["card_lo"] = json!(0);
    doc["card_hi"] = json!(200);
    doc["branch_norm"] = json!({"type": "L1"});
    upload(&app, &doc.to_string()).await;

    let bad = json!({
        "sales_csv": sales,
        "config": {"similar_products": ["nope"], "target_total": 100.0},
        "scope": {"branches": ["b1"], "sizes": ["S"]},
    });
    let (status, _) = call(&app, Method::POST, "/estimate", Some(bad.to_string())).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
}
