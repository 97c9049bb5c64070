//! Generates a seeded synthetic instance and writes it as JSON.
//!
//! ```text
//! cargo run -p lotopt-core --example generate_instance -- [seed] [branches] [out.json]
//! ```

use lotopt_core::io::{generate_instance, instance_to_json, write_instance, GeneratorProfile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(42);
    let branches: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(12);
    let out = args.next();

    let profile = GeneratorProfile {
        branches,
        ..GeneratorProfile::retail_scale()
    };
    let inst = generate_instance(seed, &profile)?;
    eprintln!(
        "seed {seed}: {} branches, {} lot-types, total demand {:.2}, window [{}, {}]",
        inst.num_branches(),
        inst.num_lots(),
        inst.total_demand(),
        inst.card_lo(),
        inst.card_hi()
    );
    match out {
        Some(path) => write_instance(&inst, path)?,
        None => {
            // the universe is long; show the head of the document only
            for line in instance_to_json(&inst).lines().take(40) {
                println!("{line}");
            }
            println!("  ...");
        }
    }
    Ok(())
}
