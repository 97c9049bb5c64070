//! Anytime primal heuristic.
//!
//! Lot-types are scored by how often they are among the `k` best fits of a
//! branch, ranked lexicographically by those scores, and κ-subsets are swept
//! in order of increasing rank sum. Within a subset every branch takes its
//! best fit; a greedy multiplier walk then repairs the cardinality window or
//! discards the subset.

mod anytime;
mod repair;
mod scores;
mod subsets;

pub use anytime::{
    assign_within_subset, solve_anytime, sweep, Budget, HeuristicOptions, Incumbent, StopReason, SweepReport,
    DEFAULT_K,
};
pub use repair::{repair_cardinality, Repair};
pub use scores::{build_score_table, k_best_fits, Fit, FitTable, ScoreTable};
pub use subsets::{subset_iterator, RankSubsets, SubsetIter};
