use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lots::{enumerate_lot_types, LotBounds};
use crate::model::{Branch, Instance, InstanceParams, LotType, SizeSet};
use crate::norm::Norm;

/// On-disk instance document. Exactly one of `lot_universe` and
/// `lot_bounds` is present.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub sizes: Vec<String>,
    pub branches: Vec<BranchEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lot_universe: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lot_bounds: Option<LotBounds>,
    pub kappa: usize,
    pub m_max: u32,
    pub card_lo: u64,
    pub card_hi: u64,
    pub branch_norm: Norm,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchEntry {
    pub id: String,
    pub demand: Vec<f64>,
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance) -> Self {
        Self {
            sizes: inst.sizes().labels().to_vec(),
            branches: inst
                .branches()
                .iter()
                .map(|b| BranchEntry {
                    id: b.id.clone(),
                    demand: b.demand.values().to_vec(),
                })
                .collect(),
            lot_universe: Some(inst.lot_universe().iter().map(|l| l.counts().to_vec()).collect()),
            lot_bounds: None,
            kappa: inst.kappa(),
            m_max: inst.m_max(),
            card_lo: inst.card_lo(),
            card_hi: inst.card_hi(),
            branch_norm: inst.branch_norm(),
        }
    }

    /// Validates the document and builds the instance, enumerating the
    /// universe when it is given by bounds.
    pub fn into_instance(self) -> Result<Instance> {
        let sizes = SizeSet::new(self.sizes).map_err(|e| Error::validation("sizes", e.to_string()))?;
        let branches = self
            .branches
            .into_iter()
            .enumerate()
            .map(|(i, b)| {
                Branch::new(b.id, b.demand).map_err(|e| Error::validation(format!("branches[{i}].demand"), e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        let lot_universe = match (self.lot_universe, self.lot_bounds) {
            (Some(_), Some(_)) => {
                return Err(Error::validation("lot_universe", "give either lot_universe or lot_bounds, not both"))
            }
            (None, None) => return Err(Error::validation("lot_universe", "one of lot_universe or lot_bounds is required")),
            (Some(list), None) => list
                .into_iter()
                .enumerate()
                .map(|(i, c)| LotType::new(c).map_err(|e| Error::validation(format!("lot_universe[{i}]"), e.to_string())))
                .collect::<Result<Vec<_>>>()?,
            (None, Some(bounds)) => enumerate_lot_types(&bounds, &sizes)?,
        };
        Instance::new(InstanceParams {
            sizes,
            branches,
            lot_universe,
            kappa: self.kappa,
            m_max: self.m_max,
            card_lo: self.card_lo,
            card_hi: self.card_hi,
            branch_norm: self.branch_norm,
        })
    }
}

fn schema_error(path: String, err: &serde_json::Error) -> Error {
    // serde_json appends " at line L column C"; the position has its own fields
    let message = err.to_string();
    let message = match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message,
    };
    Error::Schema {
        path: if path.is_empty() { ".".into() } else { path },
        line: err.line(),
        column: err.column(),
        message,
    }
}

/// Parses an instance document, reporting schema errors with field path and
/// position.
pub fn parse_instance_file(text: &str) -> Result<InstanceFile> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let file: InstanceFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        schema_error(path, e.inner())
    })?;
    Ok(file)
}

pub fn instance_from_json(text: &str) -> Result<Instance> {
    parse_instance_file(text)?.into_instance()
}

/// Pretty-printed JSON with an explicit lot universe.
pub fn instance_to_json(inst: &Instance) -> String {
    let mut s = serde_json::to_string_pretty(&InstanceFile::from_instance(inst)).expect("instance serializes");
    s.push('\n');
    s
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<Instance> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    instance_from_json(&text)
}

pub fn write_instance(inst: &Instance, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path.as_ref(), instance_to_json(inst))
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))
}
