//! Best-fit tables, k-best fits and the lot-type score table.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{DemandVector, Instance, LotType};
use crate::norm::{best_multiplier, best_multiplier_unchecked, Norm};

/// One candidate fit: lot index, its best multiplier and the deviation there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fit {
    pub lot: usize,
    pub multiplier: u32,
    pub sigma: f64,
}

impl Fit {
    /// Orders by deviation, then lot index.
    fn key_cmp(&self, other: &Self) -> Ordering {
        self.sigma
            .total_cmp(&other.sigma)
            .then(self.lot.cmp(&other.lot))
    }
}

struct HeapFit(Fit);

impl PartialEq for HeapFit {
    fn eq(&self, other: &Self) -> bool {
        self.0.key_cmp(&other.0) == Ordering::Equal
    }
}
impl Eq for HeapFit {}
impl PartialOrd for HeapFit {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapFit {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.key_cmp(&other.0)
    }
}

/// Keeps the `k` smallest fits with a bounded max-heap, returned ascending.
fn k_smallest(fits: impl Iterator<Item = Fit>, k: usize) -> Vec<Fit> {
    let mut heap = BinaryHeap::with_capacity(k + 1);
    for f in fits {
        if heap.len() < k {
            heap.push(HeapFit(f));
        } else if let Some(top) = heap.peek() {
            if f.key_cmp(&top.0) == Ordering::Less {
                heap.pop();
                heap.push(HeapFit(f));
            }
        }
    }
    heap.into_sorted_vec().into_iter().map(|h| h.0).collect()
}

/// The `min(k, |universe|)` best-fitting lot-types for one demand vector,
/// each at its optimal multiplier, sorted by deviation (ties: lower index).
pub fn k_best_fits(
    eta: &DemandVector,
    universe: &[LotType],
    k: usize,
    m_max: u32,
    norm: Norm,
) -> Result<Vec<Fit>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let fits = universe
        .iter()
        .enumerate()
        .map(|(lot, l)| {
            best_multiplier(eta, l, m_max, norm).map(|(multiplier, sigma)| Fit { lot, multiplier, sigma })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(k_smallest(fits.into_iter(), k))
}

/// `(m*, σ*)` for every (branch, lot) pair, row-major by branch.
#[derive(Debug, Clone)]
pub struct FitTable {
    num_lots: usize,
    cells: Vec<(u32, f64)>,
}

impl FitTable {
    pub fn build(inst: &Instance) -> Self {
        let num_lots = inst.num_lots();
        let norm = inst.branch_norm();
        let m_max = inst.m_max();
        let cells = inst
            .branches()
            .par_iter()
            .flat_map_iter(|b| {
                inst.lot_universe()
                    .iter()
                    .map(move |l| best_multiplier_unchecked(b.demand.values(), l.counts(), m_max, norm))
            })
            .collect();
        Self { num_lots, cells }
    }

    #[inline]
    pub fn get(&self, branch: usize, lot: usize) -> (u32, f64) {
        self.cells[branch * self.num_lots + lot]
    }

    pub fn row(&self, branch: usize) -> impl Iterator<Item = Fit> + '_ {
        self.cells[branch * self.num_lots..(branch + 1) * self.num_lots]
            .iter()
            .enumerate()
            .map(|(lot, &(multiplier, sigma))| Fit { lot, multiplier, sigma })
    }

    pub fn num_branches(&self) -> usize {
        self.cells.len().checked_div(self.num_lots).unwrap_or(0)
    }
}

/// Score vectors `ρ_l` (how often lot `l` is the i-best fit) and the
/// rank function `λ` that sorts them lexicographically, best first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreTable {
    k: usize,
    rho: Vec<Vec<u32>>,
    rank: Vec<usize>,
    by_rank: Vec<usize>,
}

impl ScoreTable {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Score vector of lot `lot` (length `k`).
    pub fn rho(&self, lot: usize) -> &[u32] {
        &self.rho[lot]
    }

    /// 1-based rank `λ(lot)`.
    pub fn rank(&self, lot: usize) -> usize {
        self.rank[lot]
    }

    /// Lot index holding 1-based rank `rank`.
    pub fn lot_at_rank(&self, rank: usize) -> usize {
        self.by_rank[rank - 1]
    }

    /// Lot indices ordered by rank.
    pub fn lots_by_rank(&self) -> &[usize] {
        &self.by_rank
    }

    pub fn num_lots(&self) -> usize {
        self.rho.len()
    }
}

pub fn build_score_table(inst: &Instance, k: usize) -> Result<ScoreTable> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    Ok(score_table_from_fits(&FitTable::build(inst), k))
}

pub(crate) fn score_table_from_fits(fits: &FitTable, k: usize) -> ScoreTable {
    let num_lots = fits.num_lots;
    let depth = k.min(num_lots);
    let mut rho = vec![vec![0u32; k]; num_lots];
    for b in 0..fits.num_branches() {
        for (i, f) in k_smallest(fits.row(b), depth).iter().enumerate() {
            rho[f.lot][i] += 1;
        }
    }
    let mut by_rank: Vec<usize> = (0..num_lots).collect();
    // non-increasing lexicographic order of ρ, ties by lower index
    by_rank.sort_by(|&a, &b| rho[b].cmp(&rho[a]).then(a.cmp(&b)));
    let mut rank = vec![0; num_lots];
    for (pos, &lot) in by_rank.iter().enumerate() {
        rank[lot] = pos + 1;
    }
    ScoreTable { k, rho, rank, by_rank }
}
