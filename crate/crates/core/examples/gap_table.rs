//! Optimality gap of the heuristic against the exact optimum for κ = 1..=5
//! on a small generated instance, printed as a gap CSV.
//!
//! ```text
//! cargo run --release -p lotopt-core --example gap_table -- [seed]
//! ```

use lotopt_core::exact::exact_solve;
use lotopt_core::heuristic::{solve_anytime, Budget, HeuristicOptions};
use lotopt_core::io::{generate_instance, GapReport, GeneratorProfile, WindowPolicy};
use lotopt_core::Overrides;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(1);
    let profile = GeneratorProfile {
        branches: 25,
        sizes: 4,
        lot_bounds: lotopt_core::lots::LotBounds {
            per_size_lo: vec![0; 4],
            per_size_hi: vec![2; 4],
            total_lo: 4,
            total_hi: 4,
        },
        m_max: 4,
        window: WindowPolicy::Relative { fraction: 0.01 },
        ..GeneratorProfile::small(25, 4)
    };
    let base = generate_instance(seed, &profile)?;
    eprintln!("{} branches, {} lot-types", base.num_branches(), base.num_lots());

    let opts = HeuristicOptions {
        k: 5,
        budget: Budget::Subsets(50),
    };
    let mut report = GapReport::default();
    for kappa in 1..=5 {
        let inst = base.with_overrides(&Overrides {
            kappa: Some(kappa),
            ..Default::default()
        })?;
        let exact = exact_solve(&inst)?;
        let heuristic = solve_anytime(&inst, &opts, None, |_| {})?;
        report.push(format!("kappa={kappa}"), exact.objective(), heuristic.objective);
    }
    print!("{}", report.to_csv()?);
    Ok(())
}
