//! Greedy multiplier adjustment towards the cardinality window.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::error::Result;
use crate::model::{Assignment, DeliveryPlan, Instance};

/// Outcome of [`repair_cardinality`].
#[derive(Debug, Clone, PartialEq)]
pub enum Repair {
    /// Plan whose item count lies in the window, with the number of single
    /// multiplier steps applied (0 when the input was already inside).
    Repaired { plan: DeliveryPlan, moves: usize },
    /// The greedy walk jumped over the window or ran out of moves.
    Discarded,
}

#[derive(Clone, Copy, PartialEq)]
struct Step {
    cost: f64,
    branch: usize,
}

impl Eq for Step {}

impl Ord for Step {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cost
            .total_cmp(&other.cost)
            .then(self.branch.cmp(&other.branch))
    }
}

impl PartialOrd for Step {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Down,
    Up,
}

/// Moves multipliers one step at a time, always taking the step with the
/// smallest deviation increase, until the item count enters the window.
/// Lot-type choices are never changed; multipliers stay in `1..=m_max`.
pub fn repair_cardinality(inst: &Instance, plan: &DeliveryPlan) -> Result<Repair> {
    // re-validates the plan against the instance
    let plan = DeliveryPlan::evaluate(inst, plan.assignment().to_vec())?;
    Ok(repair_assignment(inst, plan.assignment().to_vec(), plan.total_items()))
}

pub(crate) fn repair_assignment(inst: &Instance, mut assignment: Vec<Assignment>, items: u64) -> Repair {
    let (lo, hi) = (inst.card_lo(), inst.card_hi());
    if inst.window_contains(items) {
        let plan = DeliveryPlan::evaluate(inst, assignment).expect("assignment built from the instance");
        return Repair::Repaired { plan, moves: 0 };
    }
    let dir = if items > hi { Direction::Down } else { Direction::Up };
    let m_max = inst.m_max();

    let step_cost = |b: usize, a: Assignment| -> Option<f64> {
        let next = match dir {
            Direction::Down if a.multiplier >= 2 => a.multiplier - 1,
            Direction::Up if a.multiplier < m_max => a.multiplier + 1,
            _ => return None,
        };
        Some(inst.sigma(b, a.lot, next) - inst.sigma(b, a.lot, a.multiplier))
    };

    let mut heap: BinaryHeap<Reverse<Step>> = assignment
        .iter()
        .enumerate()
        .filter_map(|(b, &a)| step_cost(b, a).map(|cost| Reverse(Step { cost, branch: b })))
        .collect();

    let mut items = items;
    let mut moves = 0;
    loop {
        let Some(Reverse(Step { branch, .. })) = heap.pop() else {
            return Repair::Discarded;
        };
        let a = &mut assignment[branch];
        let lot_size = inst.lot_universe()[a.lot].size();
        match dir {
            Direction::Down => {
                a.multiplier -= 1;
                items -= lot_size;
            }
            Direction::Up => {
                a.multiplier += 1;
                items += lot_size;
            }
        }
        moves += 1;
        let overshot = match dir {
            Direction::Down => items < lo,
            Direction::Up => items > hi,
        };
        if overshot {
            return Repair::Discarded;
        }
        if inst.window_contains(items) {
            let plan = DeliveryPlan::evaluate(inst, assignment).expect("assignment built from the instance");
            return Repair::Repaired { plan, moves };
        }
        if let Some(cost) = step_cost(branch, assignment[branch]) {
            heap.push(Reverse(Step { cost, branch }));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::tests::instance;
    use proptest::prelude::*;

    fn a(lot: usize, multiplier: u32) -> Assignment {
        Assignment { lot, multiplier }
    }

    #[test]
    fn inside_window_unchanged() {
        let inst = instance(&[&[2.0, 2.0]], &[&[1, 1]], 1, 5, (2, 6));
        let plan = DeliveryPlan::evaluate(&inst, vec![a(0, 2)]).unwrap();
        assert_eq!(
            repair_cardinality(&inst, &plan).unwrap(),
            Repair::Repaired { plan, moves: 0 }
        );
    }

    #[test]
    fn single_decrement_enters_window() {
        let inst = instance(&[&[3.0, 3.0]], &[&[1, 1]], 1, 5, (2, 4));
        let plan = DeliveryPlan::evaluate(&inst, vec![a(0, 3)]).unwrap();
        let Repair::Repaired { plan, moves } = repair_cardinality(&inst, &plan).unwrap() else {
            panic!("expected a repaired plan");
        };
        assert_eq!(moves, 1);
        assert_eq!(plan.total_items(), 4);
        assert_eq!(plan.assignment()[0].multiplier, 2);
    }

    #[test]
    fn no_decrement_below_one() {
        let inst = instance(&[&[3.0, 2.0]], &[&[3, 2]], 1, 5, (2, 4));
        let plan = DeliveryPlan::evaluate(&inst, vec![a(0, 1)]).unwrap();
        assert_eq!(repair_cardinality(&inst, &plan).unwrap(), Repair::Discarded);
    }

    #[test]
    fn overshoot_below_window_discards() {
        // I = 8, window [7,7]; the cheapest decrement (b1, 3 items) jumps to 5
        // although decrementing b0 would have landed on 7
        let inst = instance(&[&[2.0, 0.0], &[0.0, 3.0]], &[&[1, 0], &[0, 3]], 2, 3, (7, 7));
        let plan = DeliveryPlan::evaluate(&inst, vec![a(0, 2), a(1, 2)]).unwrap();
        assert_eq!(plan.total_items(), 8);
        assert_eq!(repair_cardinality(&inst, &plan).unwrap(), Repair::Discarded);
    }

    #[test]
    fn increments_pick_cheapest_branch() {
        let inst = instance(&[&[2.6], &[1.0]], &[&[1]], 1, 5, (5, 6));
        let plan = DeliveryPlan::evaluate(&inst, vec![a(0, 3), a(0, 1)]).unwrap();
        // I = 4; b0: 3→4 costs |2.6-4|-|2.6-3| = 1.0, b1: 1→2 costs 1.0; tie → lower branch
        let Repair::Repaired { plan, moves } = repair_cardinality(&inst, &plan).unwrap() else {
            panic!();
        };
        assert_eq!(moves, 1);
        assert_eq!(plan.assignment(), &[a(0, 4), a(0, 1)]);
    }

    #[test]
    fn increment_respects_m_max() {
        let inst = instance(&[&[1.0]], &[&[1]], 1, 2, (3, 9));
        let plan = DeliveryPlan::evaluate(&inst, vec![a(0, 1)]).unwrap();
        assert_eq!(repair_cardinality(&inst, &plan).unwrap(), Repair::Discarded);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn window_or_discard(
            rows in prop::collection::vec((0.0f64..12.0, 0.0f64..12.0, 0usize..3, 1u32..6), 1..7),
            lo in 0u64..80,
            width in 0u64..20,
        ) {
            let lots: [&[u32]; 3] = [&[1, 1], &[2, 1], &[0, 3]];
            let demands: Vec<[f64; 2]> = rows.iter().map(|r| [r.0, r.1]).collect();
            let drefs: Vec<&[f64]> = demands.iter().map(|d| d.as_slice()).collect();
            let inst = instance(&drefs, &lots, 3, 5, (lo, lo + width));
            let start: Vec<Assignment> = rows.iter().map(|r| a(r.2, r.3)).collect();
            let plan = DeliveryPlan::evaluate(&inst, start.clone()).unwrap();
            let before = plan.total_items();
            match repair_cardinality(&inst, &plan).unwrap() {
                Repair::Repaired { plan: out, moves } => {
                    prop_assert!(inst.window_contains(out.total_items()));
                    prop_assert!(moves <= rows.len() * 4);
                    for (x, y) in start.iter().zip(out.assignment()) {
                        prop_assert_eq!(x.lot, y.lot);
                        // all steps go the same direction
                        if before > inst.card_hi() {
                            prop_assert!(y.multiplier <= x.multiplier);
                        } else {
                            prop_assert!(y.multiplier >= x.multiplier);
                        }
                    }
                }
                Repair::Discarded => prop_assert!(!inst.window_contains(before)),
            }
        }
    }
}
