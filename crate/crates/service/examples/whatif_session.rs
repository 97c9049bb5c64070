//! Drives the HTTP API in-process: upload a generated instance, run two
//! what-if solves with different lot-type limits, cancel a long one, and
//! print the incumbent histories.

use std::sync::Arc;
use std::time::Duration;

use axum::body::Body;
use axum::http::{header, Method, Request};
use axum::Router;
use http_body_util::BodyExt;
use lotopt_core::io::{generate_instance, instance_to_json, GeneratorProfile};
use lotopt_service::api::router;
use lotopt_service::session::Store;
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(app: &Router, method: Method, uri: &str, body: Option<Value>) -> Value {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header(header::CONTENT_TYPE, "application/json")
        .body(body.map(|b| Body::from(b.to_string())).unwrap_or_else(Body::empty))
        .expect("valid request");
    let res = app.clone().oneshot(req).await.expect("infallible");
    let bytes = res.into_body().collect().await.expect("body").to_bytes();
    serde_json::from_slice(&bytes).expect("json response")
}

async fn until_done(app: &Router, sid: &str) -> Value {
    loop {
        let view = call(app, Method::GET, &format!("/sessions/{sid}"), None).await;
        if view["status"] != "running" {
            return view;
        }
        tokio::time::sleep(Duration::from_millis(20)).await;
    }
}

fn print_history(label: &str, view: &Value) {
    println!("{label}: status={} subsets={}", view["status"], view["subsets_visited"]);
    for h in view["history"].as_array().into_iter().flatten() {
        println!(
            "  {:>9.3} ms  subset #{:<5} objective={:.2} items={} lot_types={}",
            h["elapsed_ms"].as_f64().unwrap_or(0.0),
            h["subset_number"],
            h["objective"].as_f64().unwrap_or(f64::NAN),
            h["total_items"],
            h["lot_types"].as_array().map_or(0, Vec::len),
        );
    }
}

#[tokio::main]
async fn main() -> Result<(), Box<dyn std::error::Error>> {
    let app = router(Arc::new(Store::default()));

    let mut profile = GeneratorProfile::small(60, 4);
    profile.kappa = 3;
    let inst = generate_instance(7, &profile)?;
    let uploaded = call(&app, Method::POST, "/instances", Some(serde_json::from_str(&instance_to_json(&inst))?)).await;
    let id = uploaded["instance_id"].as_str().ok_or("upload failed")?.to_string();
    println!("instance {id}: {}", uploaded["summary"]);

    for kappa in [1, 3] {
        let started = call(&app, Method::POST, "/solve", Some(json!({"instance_id": id, "kappa": kappa, "budget_ms": 300}))).await;
        let sid = started["session_id"].as_str().ok_or("solve failed")?.to_string();
        print_history(&format!("kappa={kappa}"), &until_done(&app, &sid).await);
    }

    let big = generate_instance(2024, &GeneratorProfile::retail_scale())?;
    let uploaded = call(&app, Method::POST, "/instances", Some(serde_json::from_str(&instance_to_json(&big))?)).await;
    let big_id = uploaded["instance_id"].as_str().ok_or("upload failed")?.to_string();
    let started = call(&app, Method::POST, "/solve", Some(json!({"instance_id": big_id, "budget_ms": 60_000}))).await;
    let sid = started["session_id"].as_str().ok_or("solve failed")?.to_string();
    tokio::time::sleep(Duration::from_millis(500)).await;
    let view = call(&app, Method::POST, &format!("/sessions/{sid}/cancel"), None).await;
    print_history("large instance, cancelled after 0.5 s", &view);

    let plan = call(&app, Method::GET, &format!("/sessions/{sid}/plan"), None).await;
    println!("retained plan: objective={} lot_types={}", plan["objective"], plan["lot_types"]);
    Ok(())
}
