//! The two-branch, two-lot toy instance solved three ways: brute force,
//! the exact subset DP, and the anytime heuristic.

use lotopt_core::exact::{brute_force, exact_solve};
use lotopt_core::heuristic::{solve_anytime, Budget, HeuristicOptions};
use lotopt_core::io::{instance_from_json, plan_to_json};

const MICRO: &str = r#"{
  "sizes": ["S", "M"],
  "branches": [
    {"id": "b1", "demand": [2, 3]},
    {"id": "b2", "demand": [1, 1]}
  ],
  "lot_universe": [[1, 1], [1, 2]],
  "kappa": 1,
  "m_max": 2,
  "card_lo": 5,
  "card_hi": 7,
  "branch_norm": {"type": "L1"}
}"#;

fn main() -> lotopt_core::Result<()> {
    let inst = instance_from_json(MICRO)?;

    let oracle = brute_force(&inst)?;
    let exact = exact_solve(&inst)?;
    let opts = HeuristicOptions { k: 2, budget: Budget::EXHAUSTIVE };
    let heuristic = solve_anytime(&inst, &opts, None, |_| {})?;

    println!("brute force  objective={} items={}", oracle.objective(), oracle.total_items());
    println!("exact DP     objective={} items={}", exact.objective(), exact.total_items());
    println!("heuristic    objective={} items={}", heuristic.objective, heuristic.plan.total_items());
    assert_eq!(oracle, exact);

    print!("{}", plan_to_json(&inst, &exact));
    Ok(())
}
