//! Instance and plan documents, synthetic instances and gap tables.

mod gap;
mod generate;
mod instance;
mod plan;

pub use gap::{gap_percent, gap_report, GapReport, GapRow};
pub use generate::{generate_instance, GeneratorProfile, WindowPolicy};
pub use instance::{
    instance_from_json, instance_to_json, parse_instance_file, read_instance, write_instance, BranchEntry,
    InstanceFile,
};
pub use plan::{plan_from_json, plan_to_json, PlanEntry, PlanFile};
