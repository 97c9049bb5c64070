//! Writes the strong or weak integer program of an instance in LP format,
//! ready for any MILP solver that reads CPLEX LP files.
//!
//! ```text
//! cargo run -p lotopt-core --example emit_lp -- instance.json [strong|weak]
//! ```
//!
//! Without arguments the bundled toy instance is used.

use lotopt_core::exact::{emit_milp, Formulation};
use lotopt_core::io::{instance_from_json, read_instance};

const MICRO: &str = include_str!("../tests/fixtures/micro.json");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let inst = match args.next() {
        Some(path) => read_instance(path)?,
        None => instance_from_json(MICRO)?,
    };
    let formulation: Formulation = args.next().as_deref().unwrap_or("strong").parse()?;

    let model = emit_milp(&inst, formulation)?;
    eprintln!(
        "{} variables ({} binary), {} constraints",
        model.num_variables(),
        model.binaries.len(),
        model.num_constraints()
    );
    print!("{}", model.to_lp_string());
    Ok(())
}
