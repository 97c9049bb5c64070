//! Runs the anytime heuristic on a generated instance of realistic scale and
//! prints every improving incumbent as it is found.
//!
//! ```text
//! cargo run --release -p lotopt-core --example anytime_sweep -- [seed] [budget_ms]
//! ```

use std::time::Duration;

use lotopt_core::heuristic::{sweep, Budget, HeuristicOptions};
use lotopt_core::io::{generate_instance, GeneratorProfile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1);
    let budget_ms: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1000);

    let inst = generate_instance(seed, &GeneratorProfile::retail_scale())?;
    println!(
        "{} branches, {} sizes, {} lot-types, kappa={}, window=[{}, {}], total demand {:.1}",
        inst.num_branches(),
        inst.sizes().len(),
        inst.num_lots(),
        inst.kappa(),
        inst.card_lo(),
        inst.card_hi(),
        inst.total_demand()
    );

    let opts = HeuristicOptions {
        budget: Budget::WallClock(Duration::from_millis(budget_ms)),
        ..Default::default()
    };
    let report = sweep(&inst, &opts, None, |inc| {
        println!(
            "{:>8.1} ms  subset #{:<6} objective {:>10.3}  items {}",
            inc.found_at.as_secs_f64() * 1e3,
            inc.subset_number,
            inc.objective,
            inc.plan.total_items()
        );
    })?;

    println!(
        "stopped ({:?}) after {} subsets, {} discarded, {:.1} ms",
        report.stop,
        report.visited,
        report.discarded,
        report.elapsed.as_secs_f64() * 1e3
    );
    if let Some(best) = report.best {
        for (lot, branches) in best.plan.branches_per_lot() {
            println!("  lot {:?} supplies {branches} branches", inst.lot_universe()[lot].counts());
        }
    }
    Ok(())
}
