//! Seeded small instances shared by the oracle suites.
#![allow(dead_code)]

use std::collections::BTreeSet;

use lotopt_core::norm::Norm;
use lotopt_core::{Branch, Instance, InstanceParams, LotType, SizeSet};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Bounds of the brute-force suite: |B| ≤ 4, |L| ≤ 4, m_max ≤ 3, r ≤ 3.
pub fn small_instance(seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = rng.random_range(1..=3usize);
    let nb = rng.random_range(1..=4usize);
    let m_max = rng.random_range(1..=3u32);

    let mut lots = BTreeSet::new();
    let target = rng.random_range(1..=4usize);
    while lots.len() < target {
        let counts: Vec<u32> = (0..r).map(|_| rng.random_range(0..=3)).collect();
        if counts.iter().any(|&c| c > 0) {
            lots.insert(counts);
        }
        if lots.len() == (4usize.pow(r as u32) - 1).min(4) {
            break;
        }
    }
    let lot_universe: Vec<LotType> = lots.into_iter().map(|c| LotType::new(c).unwrap()).collect();

    let branches: Vec<Branch> = (0..nb)
        .map(|b| {
            let demand = (0..r).map(|_| f64::from(rng.random_range(0..=50u32)) / 10.0).collect();
            Branch::new(format!("b{b}"), demand).unwrap()
        })
        .collect();

    // half the windows sit around a reachable total, the rest are arbitrary
    // narrow ranges that are often infeasible
    let (card_lo, card_hi) = if rng.random_bool(0.5) {
        let total: u64 = (0..nb)
            .map(|_| {
                let lot = lot_universe.choose(&mut rng).unwrap();
                lot.size() * u64::from(rng.random_range(1..=m_max))
            })
            .sum();
        let below = rng.random_range(0..=2);
        (total.saturating_sub(below), total + rng.random_range(0..=2))
    } else {
        let lo = rng.random_range(0..=28u64);
        (lo, (lo + rng.random_range(0..=3)).min(30))
    };

    let kappa = rng.random_range(1..=lot_universe.len());
    let branch_norm = *[Norm::L1, Norm::L1, Norm::L2, Norm::LInf].choose(&mut rng).unwrap();
    Instance::new(InstanceParams {
        sizes: SizeSet::new((0..r).map(|i| format!("s{i}"))).unwrap(),
        branches,
        lot_universe,
        kappa,
        m_max,
        card_lo,
        card_hi,
        branch_norm,
    })
    .unwrap()
}

/// All non-empty subsets of `0..n` with at most `kappa` elements.
pub fn subsets_up_to(n: usize, kappa: usize) -> Vec<Vec<usize>> {
    (1u32..1 << n)
        .filter(|mask| mask.count_ones() as usize <= kappa)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}
