//! Domain types shared by every solver: sizes, demand vectors, lot-types,
//! instances and delivery plans.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::norm::{deviation_unchecked, Norm};

/// Ordered, duplicate-free list of size labels. Its order fixes the
/// component order of every demand vector and lot-type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeSet {
    labels: Vec<String>,
}

impl SizeSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::validation("sizes", "at least one size is required"));
        }
        let mut seen = HashSet::new();
        for (i, label) in labels.iter().enumerate() {
            if !seen.insert(label.as_str()) {
                return Err(Error::validation(format!("sizes[{i}]"), format!("duplicate size `{label}`")));
            }
        }
        Ok(Self { labels })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Mean demand per size for one branch.
#[derive(Debug, Clone, PartialEq)]
pub struct DemandVector(Vec<f64>);

impl DemandVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(i) = values.iter().position(|v| !(v.is_finite() && *v >= 0.0)) {
            return Err(Error::validation(
                format!("demand[{i}]"),
                format!("demand must be a finite non-negative number, got {}", values[i]),
            ));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.0.iter().sum()
    }
}

/// Items per size in one lot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LotType(Vec<u32>);

impl LotType {
    pub fn new(counts: Vec<u32>) -> Result<Self> {
        if counts.iter().all(|&c| c == 0) {
            return Err(Error::validation("lot", "a lot-type must contain at least one item"));
        }
        Ok(Self(counts))
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `‖l‖₁`, the number of items in one lot.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Branch {
    pub id: String,
    pub demand: DemandVector,
}

impl Branch {
    pub fn new(id: impl Into<String>, demand: Vec<f64>) -> Result<Self> {
        Ok(Self {
            id: id.into(),
            demand: DemandVector::new(demand)?,
        })
    }
}

/// Raw instance data; validated into an [`Instance`] by [`Instance::new`].
#[derive(Debug, Clone)]
pub struct InstanceParams {
    pub sizes: SizeSet,
    pub branches: Vec<Branch>,
    pub lot_universe: Vec<LotType>,
    pub kappa: usize,
    pub m_max: u32,
    pub card_lo: u64,
    pub card_hi: u64,
    pub branch_norm: Norm,
}

/// A validated lot-type design instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    sizes: SizeSet,
    branches: Vec<Branch>,
    lot_universe: Vec<LotType>,
    kappa: usize,
    m_max: u32,
    card_lo: u64,
    card_hi: u64,
    branch_norm: Norm,
}

/// What-if knobs applied on top of a stored instance.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Overrides {
    pub kappa: Option<usize>,
    pub m_max: Option<u32>,
    pub card_lo: Option<u64>,
    pub card_hi: Option<u64>,
}

impl Instance {
    pub fn new(p: InstanceParams) -> Result<Self> {
        let r = p.sizes.len();
        if p.branches.is_empty() {
            return Err(Error::validation("branches", "at least one branch is required"));
        }
        let mut ids = HashSet::new();
        for (i, b) in p.branches.iter().enumerate() {
            if !ids.insert(b.id.as_str()) {
                return Err(Error::validation(format!("branches[{i}].id"), format!("duplicate branch id `{}`", b.id)));
            }
            if b.demand.len() != r {
                return Err(Error::validation(
                    format!("branches[{i}].demand"),
                    format!("expected {r} sizes, got {}", b.demand.len()),
                ));
            }
        }
        if p.lot_universe.is_empty() {
            return Err(Error::validation("lot_universe", "the lot-type universe is empty"));
        }
        let mut seen = HashSet::new();
        for (i, l) in p.lot_universe.iter().enumerate() {
            if l.len() != r {
                return Err(Error::validation(
                    format!("lot_universe[{i}]"),
                    format!("expected {r} sizes, got {}", l.len()),
                ));
            }
            if l.size() == 0 {
                return Err(Error::validation(format!("lot_universe[{i}]"), "empty lot-type"));
            }
            if !seen.insert(l) {
                return Err(Error::validation(format!("lot_universe[{i}]"), "duplicate lot-type"));
            }
        }
        if p.kappa == 0 || p.kappa > p.lot_universe.len() {
            return Err(Error::validation(
                "kappa",
                format!("kappa must lie in 1..={}, got {}", p.lot_universe.len(), p.kappa),
            ));
        }
        if p.m_max == 0 {
            return Err(Error::validation("m_max", "m_max must be at least 1"));
        }
        if p.card_lo > p.card_hi {
            return Err(Error::validation(
                "card_lo",
                format!("card_lo ({}) exceeds card_hi ({})", p.card_lo, p.card_hi),
            ));
        }
        p.branch_norm
            .validate()
            .map_err(|e| Error::validation("branch_norm", e.to_string()))?;
        Ok(Self {
            sizes: p.sizes,
            branches: p.branches,
            lot_universe: p.lot_universe,
            kappa: p.kappa,
            m_max: p.m_max,
            card_lo: p.card_lo,
            card_hi: p.card_hi,
            branch_norm: p.branch_norm,
        })
    }

    pub fn into_params(self) -> InstanceParams {
        InstanceParams {
            sizes: self.sizes,
            branches: self.branches,
            lot_universe: self.lot_universe,
            kappa: self.kappa,
            m_max: self.m_max,
            card_lo: self.card_lo,
            card_hi: self.card_hi,
            branch_norm: self.branch_norm,
        }
    }

    /// A new instance with the given knobs replaced. `self` is untouched.
    pub fn with_overrides(&self, o: &Overrides) -> Result<Self> {
        let mut p = self.clone().into_params();
        if let Some(k) = o.kappa {
            p.kappa = k;
        }
        if let Some(m) = o.m_max {
            p.m_max = m;
        }
        if let Some(lo) = o.card_lo {
            p.card_lo = lo;
        }
        if let Some(hi) = o.card_hi {
            p.card_hi = hi;
        }
        Self::new(p)
    }

    pub fn sizes(&self) -> &SizeSet {
        &self.sizes
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn lot_universe(&self) -> &[LotType] {
        &self.lot_universe
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn m_max(&self) -> u32 {
        self.m_max
    }

    pub fn card_lo(&self) -> u64 {
        self.card_lo
    }

    pub fn card_hi(&self) -> u64 {
        self.card_hi
    }

    pub fn branch_norm(&self) -> Norm {
        self.branch_norm
    }

    pub fn num_branches(&self) -> usize {
        self.branches.len()
    }

    pub fn num_lots(&self) -> usize {
        self.lot_universe.len()
    }

    pub fn total_demand(&self) -> f64 {
        self.branches.iter().map(|b| b.demand.total()).sum()
    }

    /// Deviation of branch `b` supplied with `m` lots of lot-type `l`.
    pub fn sigma(&self, b: usize, l: usize, m: u32) -> f64 {
        deviation_unchecked(
            self.branches[b].demand.values(),
            self.lot_universe[l].counts(),
            m,
            self.branch_norm,
        )
    }

    pub fn window_contains(&self, items: u64) -> bool {
        self.card_lo <= items && items <= self.card_hi
    }
}

/// One branch's delivery: `multiplier` lots of lot-type `lot`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment {
    pub lot: usize,
    pub multiplier: u32,
}

/// Per-branch assignment (in instance branch order) with derived totals.
#[derive(Debug, Clone, PartialEq)]
pub struct DeliveryPlan {
    assignment: Vec<Assignment>,
    objective: f64,
    total_items: u64,
    feasible: bool,
}

impl DeliveryPlan {
    /// Checks `assignment` against `inst` and derives objective, item count
    /// and the feasibility flag.
    pub fn evaluate(inst: &Instance, assignment: Vec<Assignment>) -> Result<Self> {
        check_assignment(inst, &assignment)?;
        let objective = objective_of(inst, &assignment);
        let total_items = items_of(inst, &assignment);
        let used = used_lots(&assignment).len();
        let feasible = used <= inst.kappa() && inst.window_contains(total_items);
        Ok(Self {
            assignment,
            objective,
            total_items,
            feasible,
        })
    }

    pub fn assignment(&self) -> &[Assignment] {
        &self.assignment
    }

    pub fn objective(&self) -> f64 {
        self.objective
    }

    pub fn total_items(&self) -> u64 {
        self.total_items
    }

    pub fn is_feasible(&self) -> bool {
        self.feasible
    }

    pub fn used_lot_indices(&self) -> BTreeSet<usize> {
        used_lots(&self.assignment)
    }

    /// Number of branches supplied with each used lot-type, by lot index.
    pub fn branches_per_lot(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for a in &self.assignment {
            *counts.entry(a.lot).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }
}

fn used_lots(assignment: &[Assignment]) -> BTreeSet<usize> {
    assignment.iter().map(|a| a.lot).collect()
}

fn check_assignment(inst: &Instance, assignment: &[Assignment]) -> Result<()> {
    if assignment.len() != inst.num_branches() {
        return Err(Error::ContractViolation(format!(
            "plan covers {} branches, instance has {}",
            assignment.len(),
            inst.num_branches()
        )));
    }
    for (b, a) in assignment.iter().enumerate() {
        if a.lot >= inst.num_lots() {
            return Err(Error::ContractViolation(format!(
                "branch {b}: lot index {} out of range",
                a.lot
            )));
        }
        if a.multiplier == 0 || a.multiplier > inst.m_max() {
            return Err(Error::ContractViolation(format!(
                "branch {b}: multiplier {} outside 1..={}",
                a.multiplier,
                inst.m_max()
            )));
        }
    }
    Ok(())
}

pub(crate) fn objective_of(inst: &Instance, assignment: &[Assignment]) -> f64 {
    assignment
        .iter()
        .enumerate()
        .map(|(b, a)| inst.sigma(b, a.lot, a.multiplier))
        .sum()
}

pub(crate) fn items_of(inst: &Instance, assignment: &[Assignment]) -> u64 {
    assignment
        .iter()
        .map(|a| u64::from(a.multiplier) * inst.lot_universe()[a.lot].size())
        .sum()
}

/// Summed per-branch deviation of `plan` under the instance's branch norm.
pub fn plan_objective(plan: &DeliveryPlan, inst: &Instance) -> Result<f64> {
    check_assignment(inst, &plan.assignment)?;
    Ok(objective_of(inst, &plan.assignment))
}

/// Total number of shipped items `Σ m·‖l‖₁`.
pub fn plan_total_items(plan: &DeliveryPlan, inst: &Instance) -> Result<u64> {
    check_assignment(inst, &plan.assignment)?;
    Ok(items_of(inst, &plan.assignment))
}
