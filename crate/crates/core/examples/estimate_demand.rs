//! Estimates branch/size demand for a new product from the sales of two
//! similar products, then turns the estimate into a solvable instance.

use lotopt_core::demand::{estimate_demand, EstimationConfig, SalesHistory, Scope};
use lotopt_core::heuristic::{solve_anytime, HeuristicOptions};
use lotopt_core::lots::{enumerate_lot_types, LotBounds};
use lotopt_core::norm::Norm;
use lotopt_core::{Instance, InstanceParams};

const SALES: &str = "\
branch_id,product_id,size,day,cumulative_sold
north,jacket,S,1,1
north,jacket,S,3,2
north,jacket,M,1,2
north,jacket,M,2,4
north,jacket,M,4,6
north,jacket,L,2,1
south,jacket,S,1,2
south,jacket,M,1,1
south,jacket,M,3,3
south,jacket,L,1,2
south,jacket,L,4,5
north,parka,S,1,1
north,parka,M,2,3
north,parka,L,3,1
south,parka,M,1,2
south,parka,L,2,4
";

const PLACEMENTS: &str = "\
branch_id,product_id,size
north,jacket,S
north,jacket,M
north,jacket,L
south,jacket,S
south,jacket,M
south,jacket,L
north,parka,S
north,parka,M
north,parka,L
south,parka,S
south,parka,M
south,parka,L
";

fn main() -> lotopt_core::Result<()> {
    let history = SalesHistory::from_csv(SALES.as_bytes(), Some(PLACEMENTS.as_bytes()))?;
    let config = EstimationConfig::new(vec!["jacket".into(), "parka".into()], 60.0);
    let scope = Scope {
        branches: vec!["north".into(), "south".into()],
        sizes: vec!["S".into(), "M".into(), "L".into()],
    };
    let est = estimate_demand(&history, &config, &scope)?;

    println!("sell-out days: {:?}", est.raw.sellout_days);
    println!("scale factor {:.4}", est.scale);
    for b in &est.branches {
        let cells: Vec<String> = b.demand.values().iter().map(|v| format!("{v:6.2}")).collect();
        println!("  {:<6} {}", b.id, cells.join(" "));
    }

    let lot_universe = enumerate_lot_types(
        &LotBounds {
            per_size_lo: vec![0; 3],
            per_size_hi: vec![3; 3],
            total_lo: 3,
            total_hi: 6,
        },
        &est.sizes,
    )?;
    let inst = Instance::new(InstanceParams {
        sizes: est.sizes,
        branches: est.branches,
        lot_universe,
        kappa: 2,
        m_max: 6,
        card_lo: 57,
        card_hi: 63,
        branch_norm: Norm::L1,
    })?;
    let best = solve_anytime(&inst, &HeuristicOptions::default(), None, |_| {})?;
    println!("plan: objective {:.3}, {} items", best.objective, best.plan.total_items());
    for (b, a) in inst.branches().iter().zip(best.plan.assignment()) {
        println!("  {:<6} {} × {:?}", b.id, a.multiplier, inst.lot_universe()[a.lot].counts());
    }
    Ok(())
}
