//! HTTP routes.
//!
//! | method | path                    | body / result                          |
//! |--------|-------------------------|----------------------------------------|
//! | POST   | `/instances`            | instance JSON → `{instance_id}`        |
//! | GET    | `/instances/{id}`       | stored instance JSON                   |
//! | POST   | `/solve`                | [`SolveRequest`] → `{session_id}`      |
//! | GET    | `/sessions/{id}`        | [`SessionView`]                        |
//! | POST   | `/sessions/{id}/cancel` | [`SessionView`]                        |
//! | GET    | `/sessions/{id}/plan`   | best plan so far                       |
//! | POST   | `/estimate`             | [`EstimateRequest`] → demand table     |

use std::collections::BTreeMap;
use std::net::SocketAddr;
use std::sync::Arc;
use std::time::Duration;

use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::routing::{get, post};
use axum::{Json, Router};
use lotopt_core::demand::{estimate_demand, EstimationConfig, SalesHistory, Scope};
use lotopt_core::heuristic::{sweep, Budget, HeuristicOptions, DEFAULT_K};
use lotopt_core::io::{instance_from_json, BranchEntry, InstanceFile, PlanFile};
use lotopt_core::Overrides;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use uuid::Uuid;

use crate::error::{Result, ServiceError};
use crate::session::{Session, SessionView, SolveParams, Store};

pub const DEFAULT_BUDGET_MS: u64 = 1000;

pub fn router(store: Arc<Store>) -> Router {
    Router::new()
        .route("/instances", post(create_instance))
        .route("/instances/{id}", get(get_instance))
        .route("/solve", post(solve))
        .route("/sessions/{id}", get(get_session))
        .route("/sessions/{id}/cancel", post(cancel_session))
        .route("/sessions/{id}/plan", get(get_plan))
        .route("/estimate", post(estimate))
        .with_state(store)
}

/// Serves the API until the process is stopped.
pub async fn serve(addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(Arc::new(Store::default()))).await
}

fn parse_id(kind: &str, raw: &str) -> Result<Uuid> {
    Uuid::parse_str(raw).map_err(|_| ServiceError::NotFound(format!("{kind} `{raw}`")))
}

fn session(store: &Store, raw: &str) -> Result<Arc<Session>> {
    let id = parse_id("session", raw)?;
    store
        .session(&id)
        .ok_or_else(|| ServiceError::NotFound(format!("session `{raw}`")))
}

async fn create_instance(State(store): State<Arc<Store>>, body: String) -> Result<(StatusCode, Json<Value>)> {
    let inst = instance_from_json(&body)?;
    let summary = json!({
        "branches": inst.num_branches(),
        "sizes": inst.sizes().len(),
        "lot_types": inst.num_lots(),
    });
    let id = store.add_instance(inst);
    Ok((StatusCode::CREATED, Json(json!({ "instance_id": id, "summary": summary }))))
}

async fn get_instance(State(store): State<Arc<Store>>, Path(raw): Path<String>) -> Result<Json<InstanceFile>> {
    let id = parse_id("instance", &raw)?;
    let inst = store
        .instance(&id)
        .ok_or_else(|| ServiceError::NotFound(format!("instance `{raw}`")))?;
    Ok(Json(InstanceFile::from_instance(&inst)))
}

/// Starts an anytime solve. Omitted knobs keep the stored instance's values.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveRequest {
    pub instance_id: String,
    pub kappa: Option<usize>,
    pub card_lo: Option<u64>,
    pub card_hi: Option<u64>,
    pub m_max: Option<u32>,
    pub k: Option<usize>,
    pub budget_ms: Option<u64>,
    /// Visit exactly this many subsets instead of running on the clock.
    pub deterministic_subsets: Option<u64>,
}

async fn solve(State(store): State<Arc<Store>>, Json(req): Json<SolveRequest>) -> Result<(StatusCode, Json<Value>)> {
    let instance_id = parse_id("instance", &req.instance_id)?;
    let base = store
        .instance(&instance_id)
        .ok_or_else(|| ServiceError::NotFound(format!("instance `{}`", req.instance_id)))?;
    let inst = base.with_overrides(&Overrides {
        kappa: req.kappa,
        m_max: req.m_max,
        card_lo: req.card_lo,
        card_hi: req.card_hi,
    })?;
    let k = req.k.unwrap_or(DEFAULT_K);
    if k == 0 {
        return Err(lotopt_core::Error::InvalidParameter("k must be at least 1".into()).into());
    }
    let params = SolveParams {
        kappa: inst.kappa(),
        card_lo: inst.card_lo(),
        card_hi: inst.card_hi(),
        m_max: inst.m_max(),
        k,
        budget_ms: req.budget_ms.unwrap_or(DEFAULT_BUDGET_MS),
        deterministic_subsets: req.deterministic_subsets,
    };
    let session = Arc::new(Session::new(instance_id, Arc::new(inst), params));
    store.add_session(session.clone());
    let id = session.id;
    tokio::task::spawn_blocking(move || run_session(&session));
    Ok((StatusCode::ACCEPTED, Json(json!({ "session_id": id }))))
}

fn run_session(session: &Session) {
    let p = &session.params;
    let budget = match p.deterministic_subsets {
        Some(n) => Budget::Subsets(n),
        None => Budget::WallClock(Duration::from_millis(p.budget_ms)),
    };
    let opts = HeuristicOptions { k: p.k, budget };
    match sweep(&session.instance, &opts, Some(session.cancel_flag()), |inc| session.record(inc)) {
        Ok(report) => session.finish(report.visited, None),
        Err(e) => session.finish(0, Some(e.to_string())),
    }
}

async fn get_session(State(store): State<Arc<Store>>, Path(raw): Path<String>) -> Result<Json<SessionView>> {
    Ok(Json(session(&store, &raw)?.view()))
}

async fn cancel_session(State(store): State<Arc<Store>>, Path(raw): Path<String>) -> Result<Json<SessionView>> {
    let s = session(&store, &raw)?;
    s.cancel();
    Ok(Json(s.view()))
}

async fn get_plan(State(store): State<Arc<Store>>, Path(raw): Path<String>) -> Result<Json<PlanFile>> {
    let s = session(&store, &raw)?;
    let plan = s
        .best_plan()
        .ok_or_else(|| ServiceError::NotFound(format!("plan for session `{raw}`")))?;
    Ok(Json(PlanFile::from_plan(&s.instance, &plan)))
}

/// Sales history as CSV text plus the estimation settings.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EstimateRequest {
    pub sales_csv: String,
    pub placements_csv: Option<String>,
    pub config: EstimationConfig,
    pub scope: Scope,
}

#[derive(Debug, Clone, Serialize)]
pub struct EstimateResponse {
    pub scale: f64,
    pub sellout_days: BTreeMap<String, u32>,
    pub missing: Vec<Vec<bool>>,
    pub dropped: Vec<(String, String, String)>,
    /// `sizes` and `branches` in instance-file layout.
    pub instance: Value,
}

async fn estimate(Json(req): Json<EstimateRequest>) -> Result<Json<EstimateResponse>> {
    let history = SalesHistory::from_csv(req.sales_csv.as_bytes(), req.placements_csv.as_ref().map(|p| p.as_bytes()))?;
    let est = estimate_demand(&history, &req.config, &req.scope)?;
    let branches: Vec<BranchEntry> = est
        .branches
        .iter()
        .map(|b| BranchEntry {
            id: b.id.clone(),
            demand: b.demand.values().to_vec(),
        })
        .collect();
    Ok(Json(EstimateResponse {
        scale: est.scale,
        sellout_days: est.raw.sellout_days,
        missing: est.raw.missing,
        dropped: est.raw.dropped,
        instance: json!({ "sizes": est.sizes.labels(), "branches": branches }),
    }))
}
