//! Command-line interface of the `lotopt` binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use lotopt_core::exact::{emit_milp, exact_solve, Formulation};
use lotopt_core::heuristic::{solve_anytime, Budget, HeuristicOptions, DEFAULT_K};
use lotopt_core::io::{plan_to_json, read_instance};
use lotopt_core::{DeliveryPlan, Error, Overrides};

use crate::error::Result;

#[derive(Debug, Parser)]
#[command(name = "lotopt", version, about = "Lot-type design for multi-branch deliveries")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance file with the anytime heuristic or the exact method.
    Solve(SolveArgs),
    /// Run the HTTP what-if service.
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Instance JSON file.
    pub instance: PathBuf,
    /// Override the number of distinct lot-types.
    #[arg(long)]
    pub kappa: Option<usize>,
    #[arg(long)]
    pub card_lo: Option<u64>,
    #[arg(long)]
    pub card_hi: Option<u64>,
    #[arg(long)]
    pub m_max: Option<u32>,
    /// Wall-clock budget of the heuristic.
    #[arg(long, default_value_t = 1000)]
    pub budget_ms: u64,
    /// Depth of the best-fit ranking.
    #[arg(long, default_value_t = DEFAULT_K)]
    pub k: usize,
    /// Visit exactly N subsets instead of running on the clock.
    #[arg(long, value_name = "N")]
    pub deterministic_subsets: Option<u64>,
    /// Solve to optimality with the subset DP.
    #[arg(long, conflicts_with = "emit_lp")]
    pub exact: bool,
    /// Write the integer program in LP format instead of solving.
    #[arg(long, value_name = "strong|weak")]
    pub emit_lp: Option<Formulation>,
    /// Where to write the plan JSON (or the LP file with --emit-lp).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long, env = "LOTOPT_PORT", default_value_t = 8080)]
    pub port: u16,
}

/// How a `solve` run ended.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Solved(DeliveryPlan),
    Emitted,
    /// The instance is infeasible or the heuristic found no feasible plan.
    NoPlan(Error),
}

impl Outcome {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Outcome::Solved(_) | Outcome::Emitted => ExitCode::SUCCESS,
            Outcome::NoPlan(_) => ExitCode::from(2),
        }
    }
}

/// Objective with at most six decimals, trailing zeros trimmed.
fn format_objective(x: f64) -> String {
    let s = format!("{x:.6}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Runs `solve`, printing the summary line (or the LP text) to `stdout`.
pub fn run_solve(args: &SolveArgs, stdout: &mut impl Write) -> Result<Outcome> {
    let inst = read_instance(&args.instance)?.with_overrides(&Overrides {
        kappa: args.kappa,
        m_max: args.m_max,
        card_lo: args.card_lo,
        card_hi: args.card_hi,
    })?;

    if let Some(formulation) = args.emit_lp {
        let lp = emit_milp(&inst, formulation)?.to_lp_string();
        match &args.out {
            Some(path) => std::fs::write(path, lp)?,
            None => stdout.write_all(lp.as_bytes())?,
        }
        return Ok(Outcome::Emitted);
    }

    let solved = if args.exact {
        exact_solve(&inst)
    } else {
        let budget = match args.deterministic_subsets {
            Some(n) => Budget::Subsets(n),
            None => Budget::WallClock(Duration::from_millis(args.budget_ms)),
        };
        let opts = HeuristicOptions { k: args.k, budget };
        solve_anytime(&inst, &opts, None, |_| {}).map(|inc| inc.plan)
    };
    let plan = match solved {
        Ok(plan) => plan,
        Err(e @ (Error::Infeasible | Error::NoFeasiblePlan)) => return Ok(Outcome::NoPlan(e)),
        Err(e) => return Err(e.into()),
    };

    writeln!(
        stdout,
        "objective={} items={} lot_types={}",
        format_objective(plan.objective()),
        plan.total_items(),
        plan.used_lot_indices().len()
    )?;
    if let Some(path) = &args.out {
        std::fs::write(path, plan_to_json(&inst, &plan))?;
    }
    Ok(Outcome::Solved(plan))
}
