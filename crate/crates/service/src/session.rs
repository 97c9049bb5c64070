//! In-memory solve sessions with LRU eviction.

use std::collections::BTreeMap;
use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use lotopt_core::heuristic::Incumbent;
use lotopt_core::{DeliveryPlan, Instance};
use lru::LruCache;
use serde::Serialize;
use uuid::Uuid;

/// Most sessions kept in memory; the least recently used one is dropped
/// (and cancelled if still running) when a new session exceeds the cap.
pub const SESSION_CAP: usize = 64;
/// Most stored instances.
pub const INSTANCE_CAP: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Running,
    Done,
    Cancelled,
    Infeasible,
}

/// Parameters a session was started with, after overrides were applied.
#[derive(Debug, Clone, Serialize)]
pub struct SolveParams {
    pub kappa: usize,
    pub card_lo: u64,
    pub card_hi: u64,
    pub m_max: u32,
    pub k: usize,
    pub budget_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deterministic_subsets: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LotUsage {
    pub lot: Vec<u32>,
    pub branches: usize,
}

/// One improving plan as reported to clients.
#[derive(Debug, Clone, Serialize)]
pub struct IncumbentSummary {
    pub objective: f64,
    pub total_items: u64,
    pub elapsed_ms: f64,
    pub subset_number: u64,
    pub lot_types: Vec<LotUsage>,
    /// Number of branches per multiplier value.
    pub multipliers: BTreeMap<u32, usize>,
}

impl IncumbentSummary {
    fn new(inst: &Instance, inc: &Incumbent) -> Self {
        let mut multipliers = BTreeMap::new();
        for a in inc.plan.assignment() {
            *multipliers.entry(a.multiplier).or_insert(0) += 1;
        }
        Self {
            objective: inc.objective,
            total_items: inc.plan.total_items(),
            elapsed_ms: inc.found_at.as_secs_f64() * 1e3,
            subset_number: inc.subset_number,
            lot_types: inc
                .plan
                .branches_per_lot()
                .into_iter()
                .map(|(lot, branches)| LotUsage {
                    lot: inst.lot_universe()[lot].counts().to_vec(),
                    branches,
                })
                .collect(),
            multipliers,
        }
    }
}

#[derive(Debug)]
struct Progress {
    status: Status,
    history: Vec<IncumbentSummary>,
    best: Option<DeliveryPlan>,
    visited: Option<u64>,
    finished_after: Option<Duration>,
    error: Option<String>,
}

/// One anytime solve over an immutable instance snapshot.
#[derive(Debug)]
pub struct Session {
    pub id: Uuid,
    pub instance_id: Uuid,
    pub instance: Arc<Instance>,
    pub params: SolveParams,
    cancel: AtomicBool,
    started: Instant,
    progress: Mutex<Progress>,
}

/// Point-in-time view of a session.
#[derive(Debug, Clone, Serialize)]
pub struct SessionView {
    pub session_id: Uuid,
    pub instance_id: Uuid,
    pub status: Status,
    pub params: SolveParams,
    pub elapsed_ms: f64,
    /// Final count, reported once the worker has stopped.
    pub subsets_visited: Option<u64>,
    pub history: Vec<IncumbentSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Session {
    pub fn new(instance_id: Uuid, instance: Arc<Instance>, params: SolveParams) -> Self {
        Self {
            id: Uuid::new_v4(),
            instance_id,
            instance,
            params,
            cancel: AtomicBool::new(false),
            started: Instant::now(),
            progress: Mutex::new(Progress {
                status: Status::Running,
                history: Vec::new(),
                best: None,
                visited: None,
                finished_after: None,
                error: None,
            }),
        }
    }

    pub fn cancel_flag(&self) -> &AtomicBool {
        &self.cancel
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, Progress> {
        self.progress.lock().unwrap_or_else(|e| e.into_inner())
    }

    /// Records a strictly improving incumbent. Ignored once the session has
    /// left the running state.
    pub fn record(&self, inc: &Incumbent) {
        let mut p = self.lock();
        if p.status != Status::Running {
            return;
        }
        if p.best.as_ref().is_some_and(|b| inc.objective >= b.objective()) {
            return;
        }
        p.history.push(IncumbentSummary::new(&self.instance, inc));
        p.best = Some(inc.plan.clone());
    }

    /// Moves a running session to `cancelled`. Idempotent; finished
    /// sessions keep their status.
    pub fn cancel(&self) -> Status {
        self.cancel.store(true, Ordering::Relaxed);
        let mut p = self.lock();
        if p.status == Status::Running {
            p.status = Status::Cancelled;
            p.finished_after = Some(self.started.elapsed());
        }
        p.status
    }

    /// Called once by the worker when the sweep returns.
    pub fn finish(&self, visited: u64, error: Option<String>) {
        let mut p = self.lock();
        p.visited = Some(visited);
        if p.status == Status::Running {
            p.status = if p.best.is_some() { Status::Done } else { Status::Infeasible };
            p.finished_after = Some(self.started.elapsed());
            p.error = error;
        }
    }

    pub fn status(&self) -> Status {
        self.lock().status
    }

    pub fn best_plan(&self) -> Option<DeliveryPlan> {
        self.lock().best.clone()
    }

    pub fn view(&self) -> SessionView {
        let p = self.lock();
        SessionView {
            session_id: self.id,
            instance_id: self.instance_id,
            status: p.status,
            params: self.params.clone(),
            elapsed_ms: p.finished_after.unwrap_or_else(|| self.started.elapsed()).as_secs_f64() * 1e3,
            subsets_visited: p.visited,
            history: p.history.clone(),
            error: p.error.clone(),
        }
    }
}

/// Instances and sessions shared by all request handlers.
#[derive(Debug)]
pub struct Store {
    instances: Mutex<LruCache<Uuid, Arc<Instance>>>,
    sessions: Mutex<LruCache<Uuid, Arc<Session>>>,
}

impl Default for Store {
    fn default() -> Self {
        Self::with_caps(INSTANCE_CAP, SESSION_CAP)
    }
}

impl Store {
    pub fn with_caps(instances: usize, sessions: usize) -> Self {
        let cap = |n: usize| NonZeroUsize::new(n.max(1)).expect("non-zero");
        Self {
            instances: Mutex::new(LruCache::new(cap(instances))),
            sessions: Mutex::new(LruCache::new(cap(sessions))),
        }
    }

    pub fn add_instance(&self, inst: Instance) -> Uuid {
        let id = Uuid::new_v4();
        lock(&self.instances).put(id, Arc::new(inst));
        id
    }

    pub fn instance(&self, id: &Uuid) -> Option<Arc<Instance>> {
        lock(&self.instances).get(id).cloned()
    }

    pub fn add_session(&self, session: Arc<Session>) {
        if let Some((_, evicted)) = lock(&self.sessions).push(session.id, session) {
            evicted.cancel();
        }
    }

    pub fn session(&self, id: &Uuid) -> Option<Arc<Session>> {
        lock(&self.sessions).get(id).cloned()
    }

    pub fn session_count(&self) -> usize {
        lock(&self.sessions).len()
    }
}

fn lock<T>(m: &Mutex<T>) -> std::sync::MutexGuard<'_, T> {
    m.lock().unwrap_or_else(|e| e.into_inner())
}
