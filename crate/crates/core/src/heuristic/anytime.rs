//! The anytime sweep: score, enumerate promising subsets, assign, repair.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use super::repair::{repair_assignment, Repair};
use super::scores::{score_table_from_fits, FitTable};
use super::subsets::subset_iterator;
use crate::error::{Error, Result};
use crate::model::{items_of, Assignment, DeliveryPlan, Instance};

/// Default depth of the best-fit ranking.
pub const DEFAULT_K: usize = 5;

/// When the sweep stops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Budget {
    /// Wall-clock limit measured from the start of the solve.
    WallClock(Duration),
    /// Deterministic mode: number of subsets to visit.
    Subsets(u64),
}

impl Budget {
    /// Visit every subset.
    pub const EXHAUSTIVE: Budget = Budget::Subsets(u64::MAX);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeuristicOptions {
    pub k: usize,
    pub budget: Budget,
}

impl Default for HeuristicOptions {
    fn default() -> Self {
        Self {
            k: DEFAULT_K,
            budget: Budget::WallClock(Duration::from_secs(1)),
        }
    }
}

/// A feasible plan found during the sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct Incumbent {
    pub plan: DeliveryPlan,
    pub objective: f64,
    pub found_at: Duration,
    /// Lot indices of the subset that produced the plan, in rank order.
    pub subset: Vec<usize>,
    /// Number of subsets visited when the plan was found (1-based).
    pub subset_number: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    Budget,
    Exhausted,
    Cancelled,
}

/// Everything the sweep learned, feasible or not.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub best: Option<Incumbent>,
    pub visited: u64,
    pub discarded: u64,
    pub stop: StopReason,
    pub elapsed: Duration,
}

/// Each branch takes its best (lot, multiplier) among `subset`.
/// Ties: smaller deviation, then smaller lot index, then smaller multiplier.
pub fn assign_within_subset(inst: &Instance, subset: &[usize]) -> Result<DeliveryPlan> {
    if subset.is_empty() {
        return Err(Error::ContractViolation("subset must not be empty".into()));
    }
    if let Some(&l) = subset.iter().find(|&&l| l >= inst.num_lots()) {
        return Err(Error::ContractViolation(format!("lot index {l} out of range")));
    }
    let fits = FitTable::build(inst);
    DeliveryPlan::evaluate(inst, assign_with_table(&fits, inst.num_branches(), subset))
}

pub(crate) fn assign_with_table(fits: &FitTable, num_branches: usize, subset: &[usize]) -> Vec<Assignment> {
    (0..num_branches)
        .map(|b| {
            let mut best: Option<(f64, usize, u32)> = None;
            for &lot in subset {
                let (m, sigma) = fits.get(b, lot);
                let cand = (sigma, lot, m);
                let better = match best {
                    None => true,
                    Some(cur) => sigma.total_cmp(&cur.0).then(lot.cmp(&cur.1)).is_lt(),
                };
                if better {
                    best = Some(cand);
                }
            }
            let (_, lot, multiplier) = best.expect("non-empty subset");
            Assignment { lot, multiplier }
        })
        .collect()
}

/// Runs the sweep and returns the full report.
///
/// `on_incumbent` is called, in order, for every strict improvement.
/// `cancel` is polled between subsets.
pub fn sweep(
    inst: &Instance,
    opts: &HeuristicOptions,
    cancel: Option<&AtomicBool>,
    mut on_incumbent: impl FnMut(&Incumbent),
) -> Result<SweepReport> {
    if opts.k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let start = Instant::now();
    let out_of_budget = |visited: u64| match opts.budget {
        Budget::WallClock(limit) => start.elapsed() >= limit,
        Budget::Subsets(n) => visited >= n,
    };

    let fits = FitTable::build(inst);
    let table = score_table_from_fits(&fits, opts.k);
    let mut subsets = subset_iterator(&table, inst.kappa());

    let mut best: Option<Incumbent> = None;
    let (mut visited, mut discarded) = (0u64, 0u64);
    let stop = loop {
        if cancel.is_some_and(|c| c.load(Ordering::Relaxed)) {
            break StopReason::Cancelled;
        }
        if out_of_budget(visited) {
            break StopReason::Budget;
        }
        let Some(subset) = subsets.next() else {
            break StopReason::Exhausted;
        };
        visited += 1;

        let assignment = assign_with_table(&fits, inst.num_branches(), &subset);
        let items = items_of(inst, &assignment);
        // TODO: a swap-based improvement pass would slot in here, before the
        // incumbent comparison.
        match repair_assignment(inst, assignment, items) {
            Repair::Discarded => discarded += 1,
            Repair::Repaired { plan, .. } => {
                let improves = best.as_ref().is_none_or(|b| plan.objective() < b.objective);
                if improves {
                    let inc = Incumbent {
                        objective: plan.objective(),
                        plan,
                        found_at: start.elapsed(),
                        subset,
                        subset_number: visited,
                    };
                    on_incumbent(&inc);
                    best = Some(inc);
                }
            }
        }
    };

    Ok(SweepReport {
        best,
        visited,
        discarded,
        stop,
        elapsed: start.elapsed(),
    })
}

/// Anytime heuristic: the best plan found within the budget.
pub fn solve_anytime(
    inst: &Instance,
    opts: &HeuristicOptions,
    cancel: Option<&AtomicBool>,
    on_incumbent: impl FnMut(&Incumbent),
) -> Result<Incumbent> {
    sweep(inst, opts, cancel, on_incumbent)?
        .best
        .ok_or(Error::NoFeasiblePlan)
}
