//! Enumeration of the applicatory lot-type universe from box and total bounds.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{LotType, SizeSet};

/// Default cap on the number of enumerated lot-types.
pub const DEFAULT_UNIVERSE_CAP: u128 = 1_000_000;

/// Per-size and total item bounds that define which lot-types are manageable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LotBounds {
    pub per_size_lo: Vec<u32>,
    pub per_size_hi: Vec<u32>,
    pub total_lo: u64,
    pub total_hi: u64,
}

impl LotBounds {
    pub fn validate(&self, sizes: &SizeSet) -> Result<()> {
        let r = sizes.len();
        if self.per_size_lo.len() != r {
            return Err(Error::validation(
                "lot_bounds.per_size_lo",
                format!("expected {r} entries, got {}", self.per_size_lo.len()),
            ));
        }
        if self.per_size_hi.len() != r {
            return Err(Error::validation(
                "lot_bounds.per_size_hi",
                format!("expected {r} entries, got {}", self.per_size_hi.len()),
            ));
        }
        if let Some(i) = (0..r).find(|&i| self.per_size_lo[i] > self.per_size_hi[i]) {
            return Err(Error::validation(
                format!("lot_bounds.per_size_lo[{i}]"),
                "lower bound exceeds upper bound",
            ));
        }
        if self.total_lo > self.total_hi {
            return Err(Error::validation("lot_bounds.total_lo", "total_lo exceeds total_hi"));
        }
        if self.total_lo == 0 {
            return Err(Error::validation("lot_bounds.total_lo", "total_lo must be at least 1"));
        }
        Ok(())
    }

    /// Number of lot-types satisfying the bounds, without enumerating them.
    pub fn count(&self) -> u128 {
        // ways[t] = number of prefixes with item total t, truncated at total_hi
        let hi = self.total_hi as usize;
        let mut ways = vec![0u128; hi + 1];
        ways[0] = 1;
        for (&lo_s, &hi_s) in self.per_size_lo.iter().zip(&self.per_size_hi) {
            let mut next = vec![0u128; hi + 1];
            for (t, &w) in ways.iter().enumerate().filter(|(_, w)| **w > 0) {
                for c in lo_s..=hi_s {
                    let nt = t + c as usize;
                    if nt > hi {
                        break;
                    }
                    next[nt] = next[nt].saturating_add(w);
                }
            }
            ways = next;
        }
        ways[self.total_lo as usize..].iter().fold(0u128, |a, &w| a.saturating_add(w))
    }
}

/// All lot-types within `bounds`, in lexicographic order.
pub fn enumerate_lot_types(bounds: &LotBounds, sizes: &SizeSet) -> Result<Vec<LotType>> {
    enumerate_lot_types_capped(bounds, sizes, DEFAULT_UNIVERSE_CAP)
}

pub fn enumerate_lot_types_capped(bounds: &LotBounds, sizes: &SizeSet, cap: u128) -> Result<Vec<LotType>> {
    bounds.validate(sizes)?;
    let count = bounds.count();
    if count > cap {
        return Err(Error::TooLargeUniverse { count, cap });
    }

    let r = sizes.len();
    // smallest / largest total still reachable by the suffix starting at i
    let mut suffix_min = vec![0u64; r + 1];
    let mut suffix_max = vec![0u64; r + 1];
    for i in (0..r).rev() {
        suffix_min[i] = suffix_min[i + 1] + u64::from(bounds.per_size_lo[i]);
        suffix_max[i] = suffix_max[i + 1] + u64::from(bounds.per_size_hi[i]);
    }

    let mut out = Vec::with_capacity(count as usize);
    let mut current = vec![0u32; r];
    fill(bounds, &suffix_min, &suffix_max, 0, 0, &mut current, &mut out);
    Ok(out)
}

fn fill(
    bounds: &LotBounds,
    suffix_min: &[u64],
    suffix_max: &[u64],
    i: usize,
    total: u64,
    current: &mut Vec<u32>,
    out: &mut Vec<LotType>,
) {
    if i == current.len() {
        if total >= bounds.total_lo && total <= bounds.total_hi {
            out.push(LotType::new(current.clone()).expect("total_lo >= 1"));
        }
        return;
    }
    for c in bounds.per_size_lo[i]..=bounds.per_size_hi[i] {
        let t = total + u64::from(c);
        if t + suffix_min[i + 1] > bounds.total_hi {
            break;
        }
        if t + suffix_max[i + 1] < bounds.total_lo {
            continue;
        }
        current[i] = c;
        fill(bounds, suffix_min, suffix_max, i + 1, t, current, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sizes(r: usize) -> SizeSet {
        SizeSet::new((0..r).map(|i| format!("s{i}"))).unwrap()
    }

    fn bounds(lo: &[u32], hi: &[u32], total: (u64, u64)) -> LotBounds {
        LotBounds {
            per_size_lo: lo.to_vec(),
            per_size_hi: hi.to_vec(),
            total_lo: total.0,
            total_hi: total.1,
        }
    }

    fn counts(v: &[LotType]) -> Vec<Vec<u32>> {
        v.iter().map(|l| l.counts().to_vec()).collect()
    }

    /// Plain odometer over the whole box, filtered by the total bounds.
    fn brute(b: &LotBounds) -> Vec<Vec<u32>> {
        let r = b.per_size_lo.len();
        let mut out = Vec::new();
        let mut cur = b.per_size_lo.clone();
        loop {
            let t: u64 = cur.iter().map(|&c| u64::from(c)).sum();
            if t >= b.total_lo && t <= b.total_hi {
                out.push(cur.clone());
            }
            let mut i = r;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < b.per_size_hi[i] {
                    cur[i] += 1;
                    cur[i + 1..r].copy_from_slice(&b.per_size_lo[i + 1..r]);
                    break;
                }
            }
        }
    }

    #[test]
    fn small_examples() {
        let b = bounds(&[0, 0], &[1, 1], (1, 2));
        assert_eq!(counts(&enumerate_lot_types(&b, &sizes(2)).unwrap()), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);

        let b = bounds(&[2], &[2], (2, 2));
        assert_eq!(counts(&enumerate_lot_types(&b, &sizes(1)).unwrap()), vec![vec![2]]);

        let b = bounds(&[1, 1, 1], &[2, 2, 2], (3, 4));
        let got = counts(&enumerate_lot_types(&b, &sizes(3)).unwrap());
        assert_eq!(got, brute(&b));
        assert_eq!(got, vec![vec![1, 1, 1], vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
    }

    #[test]
    fn empty_universe_is_not_an_error() {
        let b = bounds(&[0, 0], &[1, 1], (3, 5));
        assert!(enumerate_lot_types(&b, &sizes(2)).unwrap().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let b = bounds(&[0; 8], &[9; 8], (1, 72));
        assert_eq!(b.count(), 10u128.pow(8) - 1);
        assert!(matches!(
            enumerate_lot_types(&b, &sizes(8)),
            Err(Error::TooLargeUniverse { .. })
        ));
    }

    #[test]
    fn invalid_bounds() {
        assert!(enumerate_lot_types(&bounds(&[2, 0], &[1, 1], (1, 2)), &sizes(2)).is_err());
        assert!(enumerate_lot_types(&bounds(&[0, 0], &[1, 1], (0, 2)), &sizes(2)).is_err());
        assert!(enumerate_lot_types(&bounds(&[0, 0], &[1, 1], (3, 2)), &sizes(2)).is_err());
        assert!(enumerate_lot_types(&bounds(&[0], &[1], (1, 2)), &sizes(2)).is_err());
    }

    proptest! {
        #[test]
        fn matches_brute_force(
            (lo, span) in (1usize..5).prop_flat_map(|r| (
                prop::collection::vec(0u32..3, r),
                prop::collection::vec(0u32..3, r),
            )),
            t_lo in 1u64..6,
            t_span in 0u64..6,
        ) {
            let hi: Vec<u32> = lo.iter().zip(&span).map(|(a, b)| a + b).collect();
            let b = bounds(&lo, &hi, (t_lo, t_lo + t_span));
            let got = enumerate_lot_types(&b, &sizes(lo.len())).unwrap();
            prop_assert_eq!(got.len() as u128, b.count());
            prop_assert!(got.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(counts(&got), brute(&b));
        }
    }
}
