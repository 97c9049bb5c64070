//! Vector norms, the branch deviation and the optimal-multiplier search.
//!
//! Deviations are snapped to a dyadic grid of `2^-32` (see [`quantize`]).
//! Sums of snapped values are exact in `f64` as long as the total stays
//! below `2^21`, so objectives do not depend on summation order and every
//! solver in the crate compares plans on identical numbers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{DemandVector, LotType};

/// Norm used to measure the per-branch deviation between demand and supply.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Norm {
    L1,
    L2,
    LInf,
    #[serde(rename = "LP")]
    Lp { p: f64 },
}

impl Norm {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Norm::Lp { p } if !(p.is_finite() && p > 0.0) => Err(Error::InvalidParameter(format!(
                "p-norm exponent must be a positive real, got {p}"
            ))),
            _ => Ok(()),
        }
    }

    /// Applies the norm to an iterator of components. `v` must be non-empty.
    fn apply<I: Iterator<Item = f64> + Clone>(&self, v: I) -> f64 {
        match *self {
            Norm::L1 => v.map(f64::abs).sum(),
            Norm::L2 => v.map(|x| x * x).sum::<f64>().sqrt(),
            Norm::LInf => v.map(f64::abs).fold(0.0, f64::max),
            Norm::Lp { p } => {
                let scale = v.clone().map(f64::abs).fold(0.0, f64::max);
                if scale == 0.0 {
                    return 0.0;
                }
                let s: f64 = v.map(|x| (x.abs() / scale).powf(p)).sum();
                scale * s.powf(1.0 / p)
            }
        }
    }
}

impl std::fmt::Display for Norm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Norm::L1 => write!(f, "L1"),
            Norm::L2 => write!(f, "L2"),
            Norm::LInf => write!(f, "LInf"),
            Norm::Lp { p } => write!(f, "LP({p})"),
        }
    }
}

const GRID: f64 = 4_294_967_296.0; // 2^32

/// Snaps a non-negative value to the `2^-32` grid.
pub fn quantize(x: f64) -> f64 {
    (x * GRID).round() / GRID
}

/// `‖v‖` under `norm`.
pub fn norm_eval(v: &[f64], norm: Norm) -> Result<f64> {
    if v.is_empty() {
        return Err(Error::ContractViolation("norm of an empty vector".into()));
    }
    norm.validate()?;
    Ok(norm.apply(v.iter().copied()))
}

/// Deviation `‖eta − m·lot‖` between a demand vector and `m` lots.
pub fn deviation(eta: &DemandVector, lot: &LotType, m: u32, norm: Norm) -> Result<f64> {
    if eta.len() != lot.len() {
        return Err(Error::ContractViolation(format!(
            "demand has {} sizes but lot-type has {}",
            eta.len(),
            lot.len()
        )));
    }
    if eta.is_empty() {
        return Err(Error::ContractViolation("deviation over zero sizes".into()));
    }
    if m == 0 {
        return Err(Error::ContractViolation("multiplier must be at least 1".into()));
    }
    norm.validate()?;
    Ok(deviation_unchecked(eta.values(), lot.counts(), m, norm))
}

/// Hot-path deviation; inputs are assumed to conform.
pub(crate) fn deviation_unchecked(eta: &[f64], lot: &[u32], m: u32, norm: Norm) -> f64 {
    let m = f64::from(m);
    let diff = eta.iter().zip(lot).map(move |(&e, &c)| e - m * f64::from(c));
    quantize(norm.apply(diff))
}

/// Best multiplier `m* ∈ {1..m_max}` and its deviation. Ties go to the smaller `m`.
pub fn best_multiplier(
    eta: &DemandVector,
    lot: &LotType,
    m_max: u32,
    norm: Norm,
) -> Result<(u32, f64)> {
    if m_max == 0 {
        return Err(Error::InvalidParameter("m_max must be at least 1".into()));
    }
    // validates dimensions and the norm once
    deviation(eta, lot, 1, norm)?;
    Ok(best_multiplier_unchecked(eta.values(), lot.counts(), m_max, norm))
}

/// `m ↦ ‖eta − m·lot‖` is convex, so the forward difference is monotone.
/// A binary search finds the left end of the (near-)flat bottom; the
/// bottom is then scanned so the result agrees with a plain linear scan
/// even when rounding makes a theoretical plateau wobble.
pub(crate) fn best_multiplier_unchecked(eta: &[f64], lot: &[u32], m_max: u32, norm: Norm) -> (u32, f64) {
    let f = |m: u32| deviation_unchecked(eta, lot, m, norm);
    let tol = |a: f64, b: f64| 1e-9 * a.max(b).max(1.0);

    // smallest m in [1, m_max] with f(m+1) - f(m) >= -tol, or m_max
    let (mut lo, mut hi) = (1u32, m_max);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        let (a, b) = (f(mid), f(mid + 1));
        if b - a >= -tol(a, b) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }

    let mut best_m = lo;
    let mut best = f(lo);
    let mut cur = best;
    let mut m = lo;
    while m < m_max {
        let next = f(m + 1);
        if next - cur > tol(cur, next) {
            break;
        }
        m += 1;
        if next < best {
            best = next;
            best_m = m;
        }
        cur = next;
    }
    (best_m, best)
}
