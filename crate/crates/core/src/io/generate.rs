//! Seeded synthetic instances shaped like retail lot-type design data.
//!
//! Branch volumes are log-normal with a median of ten items. Size profiles
//! mix two or three unimodal archetype curves per instance, so branches
//! differ in how they lean towards small or large sizes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, LogNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lots::{enumerate_lot_types, LotBounds};
use crate::model::{Branch, Instance, InstanceParams, SizeSet};
use crate::norm::Norm;

const SIZE_LABELS: [&str; 8] = ["XS", "S", "M", "L", "XL", "XXL", "3XL", "4XL"];

/// How the cardinality window is derived from the total demand `T`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WindowPolicy {
    /// `[⌊0.95·T⌋, ⌈1.05·T⌉]`.
    FivePercent,
    /// `[⌊(1−f)·T⌋, ⌈(1+f)·T⌉]`.
    Relative { fraction: f64 },
    Fixed { lo: u64, hi: u64 },
    /// `[0, u64::MAX]`.
    Unbounded,
}

impl WindowPolicy {
    fn window(self, total: f64) -> Result<(u64, u64)> {
        match self {
            WindowPolicy::FivePercent => Ok(((0.95 * total).floor() as u64, (1.05 * total).ceil() as u64)),
            WindowPolicy::Relative { fraction } if (0.0..=1.0).contains(&fraction) => {
                Ok((((1.0 - fraction) * total).floor() as u64, ((1.0 + fraction) * total).ceil() as u64))
            }
            WindowPolicy::Relative { fraction } => Err(Error::validation(
                "window.fraction",
                format!("fraction must lie in [0, 1], got {fraction}"),
            )),
            WindowPolicy::Fixed { lo, hi } => Ok((lo, hi)),
            WindowPolicy::Unbounded => Ok((0, u64::MAX)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorProfile {
    pub branches: usize,
    pub sizes: usize,
    pub lot_bounds: LotBounds,
    pub kappa: usize,
    pub m_max: u32,
    pub window: WindowPolicy,
    /// Median items per branch.
    pub median_volume: f64,
    /// Standard deviation of the log volume.
    pub volume_spread: f64,
}

impl GeneratorProfile {
    /// Small instance with lot-types of 1..=`r`+1 items and at most two per size.
    pub fn small(branches: usize, sizes: usize) -> Self {
        Self {
            branches,
            sizes,
            lot_bounds: LotBounds {
                per_size_lo: vec![0; sizes],
                per_size_hi: vec![2; sizes],
                total_lo: 1,
                total_hi: sizes as u64 + 1,
            },
            kappa: 2,
            m_max: 3,
            window: WindowPolicy::FivePercent,
            median_volume: 10.0,
            volume_spread: 0.6,
        }
    }

    /// 1119 branches, five sizes, 511 lot-types, `m_max = 5`, `κ = 5`.
    pub fn retail_scale() -> Self {
        Self {
            branches: 1119,
            sizes: 5,
            lot_bounds: LotBounds {
                per_size_lo: vec![1; 5],
                per_size_hi: vec![4; 5],
                total_lo: 6,
                total_hi: 12,
            },
            kappa: 5,
            m_max: 5,
            window: WindowPolicy::FivePercent,
            median_volume: 10.0,
            volume_spread: 0.6,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.branches == 0 {
            return Err(Error::validation("branches", "at least one branch is required"));
        }
        if self.sizes == 0 {
            return Err(Error::validation("sizes", "at least one size is required"));
        }
        if !(self.median_volume.is_finite() && self.median_volume > 0.0) {
            return Err(Error::validation("median_volume", "must be positive"));
        }
        if !(self.volume_spread.is_finite() && self.volume_spread >= 0.0) {
            return Err(Error::validation("volume_spread", "must be non-negative"));
        }
        Ok(())
    }
}

fn size_labels(r: usize) -> Vec<String> {
    if r <= SIZE_LABELS.len() {
        let start = (SIZE_LABELS.len() - r) / 2;
        SIZE_LABELS[start..start + r].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=r).map(|i| format!("size{i}")).collect()
    }
}

/// Normalized bell curve over `r` sizes.
fn archetype(rng: &mut ChaCha8Rng, r: usize) -> Vec<f64> {
    let peak = rng.random_range(0.0..=(r as f64 - 1.0).max(0.0));
    let width = rng.random_range(0.7..2.0);
    let curve: Vec<f64> = (0..r)
        .map(|s| (-0.5 * ((s as f64 - peak) / width).powi(2)).exp())
        .collect();
    let total: f64 = curve.iter().sum();
    curve.into_iter().map(|v| v / total).collect()
}

fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}

/// Deterministic in `seed`: equal seeds give identical instances.
pub fn generate_instance(seed: u64, profile: &GeneratorProfile) -> Result<Instance> {
    profile.validate()?;
    let sizes = SizeSet::new(size_labels(profile.sizes))?;
    let lot_universe = enumerate_lot_types(&profile.lot_bounds, &sizes)?;
    if lot_universe.is_empty() {
        return Err(Error::validation("lot_bounds", "bounds admit no lot-type"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let volumes = LogNormal::new(profile.median_volume.ln(), profile.volume_spread)
        .map_err(|e| Error::validation("volume_spread", e.to_string()))?;
    let n_arch = rng.random_range(2..=3);
    let archetypes: Vec<Vec<f64>> = (0..n_arch).map(|_| archetype(&mut rng, profile.sizes)).collect();

    let mut branches = Vec::with_capacity(profile.branches);
    for b in 0..profile.branches {
        let volume: f64 = volumes.sample(&mut rng);
        let weights: Vec<f64> = (0..n_arch).map(|_| rng.random::<f64>() + 0.05).collect();
        let wsum: f64 = weights.iter().sum();
        let demand = (0..profile.sizes)
            .map(|s| {
                let share: f64 = weights.iter().zip(&archetypes).map(|(w, a)| w * a[s]).sum::<f64>() / wsum;
                round2(volume * share)
            })
            .collect();
        branches.push(Branch::new(format!("B{:04}", b + 1), demand)?);
    }

    let total: f64 = branches.iter().map(|b| b.demand.total()).sum();
    let (card_lo, card_hi) = profile.window.window(total)?;
    let kappa = profile.kappa.clamp(1, lot_universe.len());
    Instance::new(InstanceParams {
        sizes,
        branches,
        lot_universe,
        kappa,
        m_max: profile.m_max,
        card_lo,
        card_hi,
        branch_norm: Norm::L1,
    })
}
