use crate::error::{Error, Result};
use crate::model::{Assignment, DeliveryPlan, Instance};

use super::{ExactOptions, SigmaCube};

/// One (lot, multiplier) choice for a branch.
#[derive(Clone, Copy)]
struct Move {
    items: usize,
    sigma: f64,
    lot: usize,
    multiplier: u32,
}

/// Exact optimum restricted to the lot-types in `subset`.
///
/// Dynamic program over branches and the cumulative item count. Among
/// optimal plans the one with the fewest items wins, then the
/// lexicographically smallest per-branch `(lot, multiplier)` sequence.
pub fn dp_fixed_subset(inst: &Instance, subset: &[usize]) -> Result<DeliveryPlan> {
    dp_fixed_subset_with(inst, subset, &ExactOptions::default())
}

pub fn dp_fixed_subset_with(inst: &Instance, subset: &[usize], opts: &ExactOptions) -> Result<DeliveryPlan> {
    if subset.is_empty() {
        return Err(Error::ContractViolation("subset must not be empty".into()));
    }
    if subset.len() > inst.kappa() {
        return Err(Error::ContractViolation(format!(
            "subset has {} lot-types but kappa is {}",
            subset.len(),
            inst.kappa()
        )));
    }
    if let Some(&l) = subset.iter().find(|&&l| l >= inst.num_lots()) {
        return Err(Error::ContractViolation(format!("lot index {l} out of range")));
    }
    let cap = item_axis(inst, subset, opts)?;
    let cube = SigmaCube::build(inst);
    solve(inst, &cube, subset, cap).ok_or(Error::Infeasible)
}

/// Length of the item-count axis: items above `card_hi` can never become
/// feasible, nor can more than the largest reachable total.
pub(crate) fn item_axis(inst: &Instance, subset: &[usize], opts: &ExactOptions) -> Result<usize> {
    let biggest = subset
        .iter()
        .map(|&l| inst.lot_universe()[l].size())
        .max()
        .unwrap_or(0);
    let reachable = (inst.num_branches() as u64)
        .saturating_mul(u64::from(inst.m_max()))
        .saturating_mul(biggest);
    let cap = inst.card_hi().min(reachable);
    if cap > opts.max_items {
        return Err(Error::TooLarge {
            method: "dp_fixed_subset",
            detail: format!(
                "item axis of {cap} exceeds the cap of {}; use the MILP emitter",
                opts.max_items
            ),
        });
    }
    let cells = (inst.num_branches() as u64 + 1).saturating_mul(cap + 1);
    if cells > opts.max_cells {
        return Err(Error::TooLarge {
            method: "dp_fixed_subset",
            detail: format!(
                "{cells} table cells exceed the cap of {}; use the MILP emitter",
                opts.max_cells
            ),
        });
    }
    Ok(cap as usize)
}

pub(crate) fn solve(inst: &Instance, cube: &SigmaCube, subset: &[usize], cap: usize) -> Option<DeliveryPlan> {
    let lo = inst.card_lo();
    if lo > cap as u64 {
        return None;
    }
    let nb = inst.num_branches();

    let mut lots: Vec<usize> = subset.to_vec();
    lots.sort_unstable();
    let moves: Vec<Vec<Move>> = (0..nb)
        .map(|b| {
            lots.iter()
                .flat_map(|&lot| {
                    let size = inst.lot_universe()[lot].size() as usize;
                    (1..=inst.m_max()).map(move |m| (lot, m, size * m as usize))
                })
                .filter(|&(_, _, items)| items <= cap)
                .map(|(lot, multiplier, items)| Move {
                    items,
                    sigma: cube.get(b, lot, multiplier),
                    lot,
                    multiplier,
                })
                .collect()
        })
        .collect();

    // best[b][c]: cheapest way to supply branches b.. with exactly c items
    let width = cap + 1;
    let mut best = vec![f64::INFINITY; (nb + 1) * width];
    best[nb * width] = 0.0;
    for b in (0..nb).rev() {
        let (head, tail) = best.split_at_mut((b + 1) * width);
        let row = &mut head[b * width..];
        let next = &tail[..width];
        for mv in &moves[b] {
            for c in mv.items..width {
                let rest = next[c - mv.items];
                if rest.is_finite() {
                    let v = mv.sigma + rest;
                    if v < row[c] {
                        row[c] = v;
                    }
                }
            }
        }
    }

    let mut target = None;
    let mut target_value = f64::INFINITY;
    for (c, &v) in best.iter().enumerate().take(width).skip(lo as usize) {
        if v < target_value {
            target_value = v;
            target = Some(c);
        }
    }
    let mut rem = target?;

    let mut assignment = Vec::with_capacity(nb);
    for b in 0..nb {
        let here = best[b * width + rem];
        let next = &best[(b + 1) * width..(b + 2) * width];
        let mv = moves[b]
            .iter()
            .find(|mv| mv.items <= rem && mv.sigma + next[rem - mv.items] == here)
            .expect("optimal value has a witness");
        assignment.push(Assignment {
            lot: mv.lot,
            multiplier: mv.multiplier,
        });
        rem -= mv.items;
    }
    Some(DeliveryPlan::evaluate(inst, assignment).expect("assignment built from the instance"))
}
