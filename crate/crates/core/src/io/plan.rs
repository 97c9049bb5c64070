use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::model::{Assignment, DeliveryPlan, Instance};

/// Per-branch entry of a plan document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanEntry {
    pub lot: Vec<u32>,
    pub m: u32,
}

/// Plan document: per-branch lot and multiplier keyed by branch id, in
/// instance order, plus the derived totals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanFile {
    pub objective: f64,
    pub total_items: u64,
    pub feasible: bool,
    /// Distinct lot-types in use, in universe order.
    pub lot_types: Vec<Vec<u32>>,
    pub assignment: Map<String, Value>,
}

impl PlanFile {
    pub fn from_plan(inst: &Instance, plan: &DeliveryPlan) -> Self {
        let universe = inst.lot_universe();
        let assignment = inst
            .branches()
            .iter()
            .zip(plan.assignment())
            .map(|(b, a)| {
                let entry = PlanEntry {
                    lot: universe[a.lot].counts().to_vec(),
                    m: a.multiplier,
                };
                (b.id.clone(), serde_json::to_value(entry).expect("entry serializes"))
            })
            .collect();
        Self {
            objective: plan.objective(),
            total_items: plan.total_items(),
            feasible: plan.is_feasible(),
            lot_types: plan
                .used_lot_indices()
                .into_iter()
                .map(|l| universe[l].counts().to_vec())
                .collect(),
            assignment,
        }
    }

    /// Maps the document back onto `inst`; totals are recomputed.
    pub fn to_plan(&self, inst: &Instance) -> Result<DeliveryPlan> {
        let mut assignment = Vec::with_capacity(inst.num_branches());
        for b in inst.branches() {
            let value = self
                .assignment
                .get(&b.id)
                .ok_or_else(|| Error::validation(format!("assignment.{}", b.id), "branch missing from plan"))?;
            let entry: PlanEntry = serde_json::from_value(value.clone())
                .map_err(|e| Error::validation(format!("assignment.{}", b.id), e.to_string()))?;
            let lot = inst
                .lot_universe()
                .iter()
                .position(|l| l.counts() == entry.lot.as_slice())
                .ok_or_else(|| Error::validation(format!("assignment.{}.lot", b.id), "lot-type not in the universe"))?;
            assignment.push(Assignment {
                lot,
                multiplier: entry.m,
            });
        }
        if self.assignment.len() != inst.num_branches() {
            return Err(Error::validation("assignment", "plan names branches unknown to the instance"));
        }
        DeliveryPlan::evaluate(inst, assignment)
    }
}

pub fn plan_to_json(inst: &Instance, plan: &DeliveryPlan) -> String {
    let mut s = serde_json::to_string_pretty(&PlanFile::from_plan(inst, plan)).expect("plan serializes");
    s.push('\n');
    s
}

pub fn plan_from_json(inst: &Instance, text: &str) -> Result<DeliveryPlan> {
    let file: PlanFile = serde_json::from_str(text).map_err(|e| Error::Schema {
        path: ".".into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.to_plan(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::tests::instance;

    #[test]
    fn round_trip_keeps_branch_order() {
        let inst = instance(&[&[2.0, 3.0], &[1.0, 1.0], &[0.0, 2.0]], &[&[1, 1], &[1, 2]], 2, 2, (5, 9));
        let plan = DeliveryPlan::evaluate(
            &inst,
            vec![
                Assignment { lot: 1, multiplier: 1 },
                Assignment { lot: 0, multiplier: 1 },
                Assignment { lot: 0, multiplier: 1 },
            ],
        )
        .unwrap();
        let text = plan_to_json(&inst, &plan);
        let value: Value = serde_json::from_str(&text).unwrap();
        let keys: Vec<&String> = value["assignment"].as_object().unwrap().keys().collect();
        assert_eq!(keys, ["b0", "b1", "b2"]);
        assert_eq!(value["assignment"]["b0"]["lot"], serde_json::json!([1, 2]));
        assert_eq!(value["lot_types"], serde_json::json!([[1, 1], [1, 2]]));
        assert_eq!(value["total_items"], 7);
        assert_eq!(plan_from_json(&inst, &text).unwrap(), plan);
    }

    #[test]
    fn unknown_lot_rejected() {
        let inst = instance(&[&[2.0, 3.0]], &[&[1, 1]], 1, 2, (0, 9));
        let text = r#"{"objective":0,"total_items":0,"feasible":true,"lot_types":[],
                       "assignment":{"b0":{"lot":[9,9],"m":1}}}"#;
        assert!(matches!(plan_from_json(&inst, text), Err(Error::Validation { .. })));
    }
}
