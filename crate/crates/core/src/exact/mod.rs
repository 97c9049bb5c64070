//! Exact optimum for desk-scale instances, the brute-force oracle, and LP
//! model emission for larger ones.
//!
//! [`exact_solve`] enumerates every κ-subset of the lot universe and runs
//! [`dp_fixed_subset`] on each; a subset DP is exact for the model with the
//! used-lot indicators fixed, so the best subset is the global optimum.

mod brute;
mod dp;
mod milp;

use std::cmp::Ordering;

use rayon::prelude::*;

pub use brute::{brute_force, brute_force_subset, BRUTE_FORCE_LIMIT};
pub use dp::{dp_fixed_subset, dp_fixed_subset_with};
pub use milp::{emit_milp, Formulation, LpRow, MilpModel, Sense};

use crate::error::{Error, Result};
use crate::model::{DeliveryPlan, Instance};

/// Guards for the exact methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    /// Longest admissible item-count axis of a subset DP.
    pub max_items: u64,
    /// Largest DP table (branches × item axis).
    pub max_cells: u64,
    /// Cap on `C(|L|, κ) · |B| · items · κ · m_max`.
    pub max_work: u128,
}

impl Default for ExactOptions {
    fn default() -> Self {
        Self {
            max_items: 100_000,
            max_cells: 20_000_000,
            max_work: 20_000_000_000,
        }
    }
}

/// `σ(b, l, m)` for all branches, lots and multipliers.
#[derive(Debug, Clone)]
pub(crate) struct SigmaCube {
    lots: usize,
    m_max: usize,
    values: Vec<f64>,
}

impl SigmaCube {
    pub(crate) fn build(inst: &Instance) -> Self {
        let (lots, m_max) = (inst.num_lots(), inst.m_max() as usize);
        let values = (0..inst.num_branches())
            .into_par_iter()
            .flat_map_iter(|b| {
                (0..lots).flat_map(move |l| (1..=m_max as u32).map(move |m| inst.sigma(b, l, m)))
            })
            .collect();
        Self { lots, m_max, values }
    }

    #[inline]
    pub(crate) fn get(&self, b: usize, lot: usize, m: u32) -> f64 {
        self.values[(b * self.lots + lot) * self.m_max + (m as usize - 1)]
    }
}

/// Total order used to pick among optimal plans: objective, then item
/// count, then the per-branch `(lot, multiplier)` sequence.
pub fn canonical_cmp(a: &DeliveryPlan, b: &DeliveryPlan) -> Ordering {
    a.objective()
        .total_cmp(&b.objective())
        .then(a.total_items().cmp(&b.total_items()))
        .then_with(|| a.assignment().cmp(b.assignment()))
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k.min(n));
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Globally optimal plan, or [`Error::Infeasible`].
pub fn exact_solve(inst: &Instance) -> Result<DeliveryPlan> {
    exact_solve_with(inst, &ExactOptions::default())
}

pub fn exact_solve_with(inst: &Instance, opts: &ExactOptions) -> Result<DeliveryPlan> {
    let n = inst.num_lots();
    let kappa = inst.kappa().min(n);
    let all: Vec<usize> = (0..n).collect();
    let cap = dp::item_axis(inst, &all, opts)?;

    let subsets = binomial(n, kappa);
    let work = subsets
        .saturating_mul(inst.num_branches() as u128)
        .saturating_mul(cap as u128 + 1)
        .saturating_mul(kappa as u128)
        .saturating_mul(u128::from(inst.m_max()));
    if work > opts.max_work {
        return Err(Error::TooLarge {
            method: "exact_solve",
            detail: format!(
                "{subsets} lot-type subsets × DP cost = {work} steps exceed the cap of {}; \
                 emit the MILP model instead",
                opts.max_work
            ),
        });
    }

    let cube = SigmaCube::build(inst);
    combinations(n, kappa)
        .into_par_iter()
        .filter_map(|subset| dp::solve(inst, &cube, &subset, cap))
        .min_by(canonical_cmp)
        .ok_or(Error::Infeasible)
}
