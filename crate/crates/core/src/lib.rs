//! Lot-type design: approximate fractional branch-and-size demand by integral
//! multiples of at most κ distinct lot-types, subject to a window on the
//! total number of shipped items.
//!
//! The crate works on the abstract model (a cardinality-constrained
//! p-median problem with multipliers):
//!
//! * [`model`] holds instances and delivery plans,
//! * [`lots`] enumerates the lot-type universe from bounds,
//! * [`heuristic`] is the anytime score-rank-sweep-repair solver,
//! * [`exact`] has the subset DP, a brute-force oracle and LP emission,
//! * [`demand`] estimates branch/size demand from sales of similar products,
//! * [`io`] reads and writes instance and plan JSON and generates instances.
//!
//! ```
//! use lotopt_core::{exact::exact_solve, io::instance_from_json};
//!
//! let inst = instance_from_json(r#"{
//!     "sizes": ["S", "M"],
//!     "branches": [{"id": "b1", "demand": [2, 3]}, {"id": "b2", "demand": [1, 1]}],
//!     "lot_universe": [[1, 1], [1, 2]],
//!     "kappa": 1, "m_max": 2, "card_lo": 5, "card_hi": 7,
//!     "branch_norm": {"type": "L1"}
//! }"#).unwrap();
//! let plan = exact_solve(&inst).unwrap();
//! assert_eq!(plan.objective(), 1.0);
//! assert_eq!(plan.total_items(), 6);
//! ```

pub mod demand;
pub mod error;
pub mod exact;
pub mod heuristic;
pub mod io;
pub mod lots;
pub mod model;
pub mod norm;

pub use error::{Error, Result};
pub use model::{
    plan_objective, plan_total_items, Assignment, Branch, DeliveryPlan, DemandVector, Instance, InstanceParams,
    LotType, Overrides, SizeSet,
};
pub use norm::{best_multiplier, deviation, norm_eval, Norm};
