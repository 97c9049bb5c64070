//! Best-first enumeration of κ-subsets by rank sum.
//!
//! Subsets are visited in non-decreasing order of their rank sum; equal
//! sums come out in lexicographic order of their sorted rank tuples. Each
//! subset has a unique parent (decrement its first element that is not at
//! its minimal position), so the frontier never holds duplicates and the
//! full family is never materialized.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::scores::ScoreTable;

/// Lazily yields `kappa`-subsets of the ranks `1..=n` (each a sorted vector).
#[derive(Debug, Clone)]
pub struct RankSubsets {
    n: usize,
    frontier: BinaryHeap<Reverse<(usize, Vec<usize>)>>,
}

impl RankSubsets {
    pub fn new(n: usize, kappa: usize) -> Self {
        let mut frontier = BinaryHeap::new();
        if kappa >= 1 && kappa <= n {
            let first: Vec<usize> = (1..=kappa).collect();
            frontier.push(Reverse((first.iter().sum(), first)));
        }
        Self { n, frontier }
    }

    /// Number of subsets currently waiting in the frontier.
    pub fn frontier_len(&self) -> usize {
        self.frontier.len()
    }
}

impl Iterator for RankSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let Reverse((sum, subset)) = self.frontier.pop()?;
        let k = subset.len();
        for j in 0..k {
            // children only bump positions up to and including the first
            // element that sits above its minimal value j+1
            let limit = if j + 1 < k { subset[j + 1] } else { self.n + 1 };
            if subset[j] + 1 < limit {
                let mut child = subset.clone();
                child[j] += 1;
                self.frontier.push(Reverse((sum + 1, child)));
            }
            if subset[j] != j + 1 {
                break;
            }
        }
        Some(subset)
    }
}

/// Yields lot-index subsets of size `kappa`, most promising (smallest rank sum) first.
#[derive(Debug, Clone)]
pub struct SubsetIter<'a> {
    table: &'a ScoreTable,
    ranks: RankSubsets,
}

impl Iterator for SubsetIter<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.ranks
            .next()
            .map(|r| r.into_iter().map(|rank| self.table.lot_at_rank(rank)).collect())
    }
}

pub fn subset_iterator(table: &ScoreTable, kappa: usize) -> SubsetIter<'_> {
    SubsetIter {
        table,
        ranks: RankSubsets::new(table.num_lots(), kappa),
    }
}
