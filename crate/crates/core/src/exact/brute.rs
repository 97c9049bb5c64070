use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::{Assignment, DeliveryPlan, Instance};

use super::SigmaCube;

/// Largest number of complete assignments the brute force will visit.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

/// Exhaustive optimum over every (lot, multiplier) map. Test oracle.
///
/// Uses the same tie rules as the dynamic program: fewest items, then the
/// lexicographically smallest `(lot, multiplier)` sequence in branch order.
pub fn brute_force(inst: &Instance) -> Result<DeliveryPlan> {
    let all: Vec<usize> = (0..inst.num_lots()).collect();
    search(inst, &all)
}

/// Brute force with lot-types restricted to `subset`.
pub fn brute_force_subset(inst: &Instance, subset: &[usize]) -> Result<DeliveryPlan> {
    if subset.is_empty() || subset.iter().any(|&l| l >= inst.num_lots()) {
        return Err(Error::ContractViolation("subset must be non-empty and in range".into()));
    }
    let lots: BTreeSet<usize> = subset.iter().copied().collect();
    search(inst, &lots.into_iter().collect::<Vec<_>>())
}

fn search(inst: &Instance, lots: &[usize]) -> Result<DeliveryPlan> {
    let choices: Vec<Assignment> = lots
        .iter()
        .flat_map(|&lot| (1..=inst.m_max()).map(move |multiplier| Assignment { lot, multiplier }))
        .collect();
    let nb = inst.num_branches();
    let space = (choices.len() as u128).checked_pow(nb as u32).unwrap_or(u128::MAX);
    if space > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            method: "brute_force",
            detail: format!("{space} assignments exceed the limit of {BRUTE_FORCE_LIMIT}"),
        });
    }
    let cube = SigmaCube::build(inst);
    let sizes: Vec<u64> = inst.lot_universe().iter().map(|l| l.size()).collect();

    let mut digits = vec![0usize; nb];
    let mut best: Option<(f64, u64, Vec<usize>)> = None;
    loop {
        let mut objective = 0.0;
        let mut items = 0u64;
        let mut used = BTreeSet::new();
        for (b, &d) in digits.iter().enumerate() {
            let a = choices[d];
            objective += cube.get(b, a.lot, a.multiplier);
            items += u64::from(a.multiplier) * sizes[a.lot];
            used.insert(a.lot);
        }
        if used.len() <= inst.kappa() && inst.window_contains(items) {
            // lexicographic enumeration: the first of equal (objective, items) wins
            let better = match &best {
                None => true,
                Some((o, i, _)) => objective < *o || (objective == *o && items < *i),
            };
            if better {
                best = Some((objective, items, digits.clone()));
            }
        }

        // odometer with branch 0 as the most significant digit
        let mut b = nb;
        loop {
            if b == 0 {
                let (_, _, digits) = best.ok_or(Error::Infeasible)?;
                let assignment = digits.into_iter().map(|d| choices[d]).collect();
                return DeliveryPlan::evaluate(inst, assignment);
            }
            b -= 1;
            digits[b] += 1;
            if digits[b] < choices.len() {
                break;
            }
            digits[b] = 0;
        }
    }
}
