//! Branch-and-size demand estimation from the sales history of similar
//! products.
//!
//! For each similar product `u` a sell-out day `d_u` is chosen, the day by
//! which a configured fraction of its volume was sold. A branch/size cell
//! then averages, over the similar products that sold there, the share of
//! `u`'s scope-wide sales (at `d_u`) that the cell took, normalized by the
//! number of cells `u` was placed in. The raw table is finally scaled so
//! that it sums to the planned total volume.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Branch, SizeSet};

/// One row of the sales CSV.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SalesRecord {
    pub branch_id: String,
    pub product_id: String,
    pub size: String,
    pub day: u32,
    pub cumulative_sold: u64,
}

/// One row of the placements CSV.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Placement {
    pub branch_id: String,
    pub product_id: String,
    pub size: String,
}

type CellKey = (String, String, String); // (branch, product, size)

/// Cumulative sales per (branch, product, size) and day, plus placements.
#[derive(Debug, Clone, Default)]
pub struct SalesHistory {
    /// Index `d - 1` holds the cumulative count after day `d`.
    series: HashMap<CellKey, Vec<u64>>,
    placed: HashSet<CellKey>,
    products: BTreeSet<String>,
}

impl SalesHistory {
    /// Builds the history. Days missing from a series carry the previous
    /// cumulative value forward. Without explicit placements every cell
    /// that appears in the sales data counts as placed.
    pub fn from_records(records: Vec<SalesRecord>, placements: Option<Vec<Placement>>) -> Result<Self> {
        let mut points: BTreeMap<CellKey, BTreeMap<u32, u64>> = BTreeMap::new();
        for (i, r) in records.into_iter().enumerate() {
            if r.day == 0 {
                return Err(Error::validation(format!("sales[{i}].day"), "day indices start at 1"));
            }
            let key = (r.branch_id, r.product_id, r.size);
            if points.entry(key).or_default().insert(r.day, r.cumulative_sold).is_some() {
                return Err(Error::validation(format!("sales[{i}]"), "duplicate day for the same cell"));
            }
        }

        let mut series = HashMap::with_capacity(points.len());
        let mut products = BTreeSet::new();
        for (key, days) in points {
            let last_day = *days.keys().next_back().expect("non-empty") as usize;
            let mut values = vec![0u64; last_day];
            let mut prev = 0u64;
            let mut it = days.into_iter().peekable();
            for d in 1..=last_day {
                if let Some((_, v)) = it.next_if(|(day, _)| *day as usize == d) {
                    if v < prev {
                        return Err(Error::validation(
                            format!("sales[{}/{}/{}].day{}", key.0, key.1, key.2, d),
                            format!("cumulative sales decrease from {prev} to {v}"),
                        ));
                    }
                    prev = v;
                }
                values[d - 1] = prev;
            }
            products.insert(key.1.clone());
            series.insert(key, values);
        }

        let placed: HashSet<CellKey> = match placements {
            Some(list) => {
                let placed: HashSet<CellKey> =
                    list.into_iter().map(|p| (p.branch_id, p.product_id, p.size)).collect();
                for (key, values) in &series {
                    if values.last().copied().unwrap_or(0) > 0 && !placed.contains(key) {
                        return Err(Error::validation(
                            "placements",
                            format!("branch `{}` sold product `{}` in size `{}` without a placement", key.0, key.1, key.2),
                        ));
                    }
                }
                placed
            }
            None => series.keys().cloned().collect(),
        };
        products.extend(placed.iter().map(|k| k.1.clone()));
        Ok(Self { series, placed, products })
    }

    /// Parses the sales CSV (`branch_id,product_id,size,day,cumulative_sold`)
    /// and the optional placements CSV (`branch_id,product_id,size`).
    pub fn from_csv<R: Read, P: Read>(sales: R, placements: Option<P>) -> Result<Self> {
        let records = csv::Reader::from_reader(sales)
            .deserialize()
            .collect::<std::result::Result<Vec<SalesRecord>, _>>()?;
        let placements = match placements {
            Some(p) => Some(
                csv::Reader::from_reader(p)
                    .deserialize()
                    .collect::<std::result::Result<Vec<Placement>, _>>()?,
            ),
            None => None,
        };
        Self::from_records(records, placements)
    }

    pub fn products(&self) -> impl Iterator<Item = &str> {
        self.products.iter().map(String::as_str)
    }

    /// `τ_{b,u}(d, s)`; 0 for unknown cells, constant after the last record.
    pub fn cumulative(&self, branch: &str, product: &str, size: &str, day: u32) -> u64 {
        let key = (branch.to_string(), product.to_string(), size.to_string());
        match self.series.get(&key) {
            Some(v) if day >= 1 => v[(day as usize).min(v.len()) - 1],
            _ => 0,
        }
    }

    pub fn is_placed(&self, branch: &str, product: &str, size: &str) -> bool {
        self.placed
            .contains(&(branch.to_string(), product.to_string(), size.to_string()))
    }

    fn product_cells<'a>(&'a self, product: &'a str) -> impl Iterator<Item = (&'a CellKey, &'a Vec<u64>)> + 'a {
        self.series.iter().filter(move |(k, _)| k.1 == product)
    }

    fn last_day(&self, product: &str) -> u32 {
        self.product_cells(product).map(|(_, v)| v.len() as u32).max().unwrap_or(0)
    }

    fn total_at(&self, product: &str, day: u32) -> u64 {
        self.product_cells(product)
            .map(|(_, v)| v[(day as usize).min(v.len()) - 1])
            .sum()
    }
}

/// How the raw table is formed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Per-cell estimate.
    #[default]
    Direct,
    /// Branch totals and size profile estimated separately, then recombined
    /// as `row_b · col_s / grand`.
    Separable,
}

fn default_fraction() -> f64 {
    0.8
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimationConfig {
    pub similar_products: Vec<String>,
    #[serde(default = "default_fraction")]
    pub sellout_fraction: f64,
    pub target_total: f64,
    /// Known supplied volume per product; replaces final cumulative sales as
    /// the base of the sell-out fraction.
    #[serde(default)]
    pub supply: HashMap<String, f64>,
    #[serde(default)]
    pub strategy: Strategy,
}

impl EstimationConfig {
    pub fn new(similar_products: Vec<String>, target_total: f64) -> Self {
        Self {
            similar_products,
            sellout_fraction: default_fraction(),
            target_total,
            supply: HashMap::new(),
            strategy: Strategy::Direct,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.similar_products.is_empty() {
            return Err(Error::validation("similar_products", "at least one similar product is required"));
        }
        check_fraction(self.sellout_fraction)?;
        if !(self.target_total.is_finite() && self.target_total > 0.0) {
            return Err(Error::validation("target_total", "target total must be positive"));
        }
        Ok(())
    }
}

fn check_fraction(fraction: f64) -> Result<()> {
    if fraction > 0.0 && fraction < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "sell-out fraction must lie in (0, 1), got {fraction}"
        )))
    }
}

/// Branches and sizes the new product will be sold in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scope {
    pub branches: Vec<String>,
    pub sizes: Vec<String>,
}

/// First day by which `fraction` of the product's volume was sold.
pub fn sellout_day(history: &SalesHistory, product: &str, fraction: f64) -> Result<u32> {
    sellout_day_with_base(history, product, fraction, None)
}

fn sellout_day_with_base(history: &SalesHistory, product: &str, fraction: f64, supply: Option<f64>) -> Result<u32> {
    check_fraction(fraction)?;
    let last = history.last_day(product);
    if last == 0 {
        return Err(Error::MissingProduct(product.to_string()));
    }
    let sold = history.total_at(product, last) as f64;
    if sold == 0.0 {
        return Err(Error::EstimationImpossible(format!("product `{product}` has no recorded sales")));
    }
    let base = supply.unwrap_or(sold);
    let goal = fraction * base;
    let slack = 1e-9 * goal;
    // cumulative totals are non-decreasing in d
    let (mut lo, mut hi) = (1u32, last);
    if (history.total_at(product, last) as f64) < goal - slack {
        return Ok(last);
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if history.total_at(product, mid) as f64 >= goal - slack {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

/// Unscaled estimate, one row per scope branch and one column per scope size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawEstimate {
    pub branches: Vec<String>,
    pub sizes: Vec<String>,
    pub values: Vec<Vec<f64>>,
    /// Cells without any similar product that sold there.
    pub missing: Vec<Vec<bool>>,
    /// (branch, size, product) terms dropped for a zero scope-wide denominator.
    pub dropped: Vec<(String, String, String)>,
    /// Sell-out day chosen for each similar product.
    pub sellout_days: BTreeMap<String, u32>,
}

impl RawEstimate {
    pub fn total(&self) -> f64 {
        self.values.iter().flatten().sum()
    }

    /// Recombines branch totals and the size profile: `row_b · col_s / grand`.
    pub fn separable(&self) -> RawEstimate {
        let grand = self.total();
        let rows: Vec<f64> = self.values.iter().map(|r| r.iter().sum()).collect();
        let cols: Vec<f64> = (0..self.sizes.len())
            .map(|s| self.values.iter().map(|r| r[s]).sum())
            .collect();
        let values = rows
            .iter()
            .map(|&row| {
                cols.iter()
                    .map(|&col| if grand > 0.0 { row * col / grand } else { 0.0 })
                    .collect()
            })
            .collect();
        RawEstimate {
            values,
            ..self.clone()
        }
    }
}

pub fn estimate_raw(history: &SalesHistory, config: &EstimationConfig, scope: &Scope) -> Result<RawEstimate> {
    config.validate()?;
    if scope.branches.is_empty() || scope.sizes.is_empty() {
        return Err(Error::validation("scope", "scope needs at least one branch and one size"));
    }

    struct Term {
        day: u32,
        last: u32,
        placed_cells: f64,
        scope_sales: f64,
    }
    let mut terms = BTreeMap::new();
    let mut sellout_days = BTreeMap::new();
    for u in &config.similar_products {
        let day = sellout_day_with_base(history, u, config.sellout_fraction, config.supply.get(u).copied())?;
        sellout_days.insert(u.clone(), day);
        let mut placed_cells = 0.0;
        let mut scope_sales = 0.0;
        for b in &scope.branches {
            for s in &scope.sizes {
                if history.is_placed(b, u, s) {
                    placed_cells += 1.0;
                }
                scope_sales += history.cumulative(b, u, s, day) as f64;
            }
        }
        terms.insert(
            u.as_str(),
            Term {
                day,
                last: history.last_day(u),
                placed_cells,
                scope_sales,
            },
        );
    }

    let (nb, ns) = (scope.branches.len(), scope.sizes.len());
    let mut values = vec![vec![0.0; ns]; nb];
    let mut missing = vec![vec![true; ns]; nb];
    let mut dropped = Vec::new();
    for (bi, b) in scope.branches.iter().enumerate() {
        for (si, s) in scope.sizes.iter().enumerate() {
            let mut sum = 0.0;
            let mut count = 0usize;
            for (u, t) in &terms {
                // similar products that were traded in this cell
                if history.cumulative(b, u, s, t.last) == 0 {
                    continue;
                }
                if t.scope_sales == 0.0 {
                    dropped.push((b.clone(), s.clone(), u.to_string()));
                    continue;
                }
                sum += history.cumulative(b, u, s, t.day) as f64 * t.placed_cells / t.scope_sales;
                count += 1;
            }
            if count > 0 {
                values[bi][si] = sum / count as f64;
                missing[bi][si] = false;
            }
        }
    }
    if missing.iter().flatten().all(|&m| m) {
        return Err(Error::EstimationImpossible(
            "no similar product sold in any branch/size of the scope".into(),
        ));
    }

    let raw = RawEstimate {
        branches: scope.branches.clone(),
        sizes: scope.sizes.clone(),
        values,
        missing,
        dropped,
        sellout_days,
    };
    Ok(match config.strategy {
        Strategy::Direct => raw,
        Strategy::Separable => raw.separable(),
    })
}

/// Multiplies every cell by `target_total / Σ raw`; returns the factor and
/// one demand vector per branch.
pub fn scale_to_total(raw: &RawEstimate, target_total: f64) -> Result<(f64, Vec<Branch>)> {
    let total = raw.total();
    if total <= 0.0 || !total.is_finite() {
        return Err(Error::EstimationImpossible("raw estimate sums to zero".into()));
    }
    if !(target_total.is_finite() && target_total > 0.0) {
        return Err(Error::InvalidParameter("target total must be positive".into()));
    }
    let c = target_total / total;
    let branches = raw
        .branches
        .iter()
        .zip(&raw.values)
        .map(|(id, row)| Branch::new(id.clone(), row.iter().map(|v| v * c).collect()))
        .collect::<Result<Vec<_>>>()?;
    Ok((c, branches))
}

/// Scaled demand table ready to drop into an instance.
#[derive(Debug, Clone, PartialEq)]
pub struct DemandEstimate {
    pub sizes: SizeSet,
    pub branches: Vec<Branch>,
    pub scale: f64,
    pub raw: RawEstimate,
}

pub fn estimate_demand(history: &SalesHistory, config: &EstimationConfig, scope: &Scope) -> Result<DemandEstimate> {
    let raw = estimate_raw(history, config, scope)?;
    let (scale, branches) = scale_to_total(&raw, config.target_total)?;
    Ok(DemandEstimate {
        sizes: SizeSet::new(scope.sizes.iter().cloned())?,
        branches,
        scale,
        raw,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rec(b: &str, u: &str, s: &str, day: u32, sold: u64) -> SalesRecord {
        SalesRecord {
            branch_id: b.into(),
            product_id: u.into(),
            size: s.into(),
            day,
            cumulative_sold: sold,
        }
    }

    fn series(b: &str, u: &str, s: &str, values: &[u64]) -> Vec<SalesRecord> {
        values
            .iter()
            .enumerate()
            .map(|(i, &v)| rec(b, u, s, i as u32 + 1, v))
            .collect()
    }

    fn raw(values: Vec<Vec<f64>>) -> RawEstimate {
        RawEstimate {
            branches: (0..values.len()).map(|i| format!("b{i}")).collect(),
            sizes: (0..values[0].len()).map(|i| format!("s{i}")).collect(),
            missing: values.iter().map(|r| vec![false; r.len()]).collect(),
            values,
            dropped: vec![],
            sellout_days: BTreeMap::new(),
        }
    }

    #[test]
    fn sellout_day_examples() {
        let h = SalesHistory::from_records(series("b", "u", "M", &[1, 2, 3, 4, 5]), None).unwrap();
        assert_eq!(sellout_day(&h, "u", 0.8).unwrap(), 4);
        assert_eq!(sellout_day(&h, "u", 1e-9).unwrap(), 1);

        let late = SalesHistory::from_records(series("b", "u", "M", &[0, 0, 3, 4, 5]), None).unwrap();
        assert_eq!(sellout_day(&late, "u", 1e-9).unwrap(), 3);

        let flat = SalesHistory::from_records(series("b", "u", "M", &[0, 0, 0]), None).unwrap();
        assert!(matches!(sellout_day(&flat, "u", 0.8), Err(Error::EstimationImpossible(_))));
        assert!(matches!(sellout_day(&h, "nope", 0.8), Err(Error::MissingProduct(_))));
        assert!(sellout_day(&h, "u", 1.0).is_err());
    }

    #[test]
    fn sellout_day_with_supply_override() {
        let h = SalesHistory::from_records(series("b", "u", "M", &[1, 2, 3, 4, 5]), None).unwrap();
        // 80% of a supply of 5 is reached at day 4; of 10 only 8 → never, last day
        assert_eq!(sellout_day_with_base(&h, "u", 0.8, Some(5.0)).unwrap(), 4);
        assert_eq!(sellout_day_with_base(&h, "u", 0.8, Some(10.0)).unwrap(), 5);
        assert_eq!(sellout_day_with_base(&h, "u", 0.3, Some(10.0)).unwrap(), 3);
    }

    #[test]
    fn sparse_days_carry_forward() {
        let h = SalesHistory::from_records(vec![rec("b", "u", "M", 2, 3), rec("b", "u", "M", 5, 7)], None).unwrap();
        let got: Vec<u64> = (1..=6).map(|d| h.cumulative("b", "u", "M", d)).collect();
        assert_eq!(got, vec![0, 3, 3, 3, 7, 7]);
    }

    #[test]
    fn decreasing_series_rejected() {
        let err = SalesHistory::from_records(series("b", "u", "M", &[3, 2]), None).unwrap_err();
        assert!(matches!(err, Error::Validation { .. }));
    }

    #[test]
    fn sales_without_placement_rejected() {
        let placements = vec![Placement { branch_id: "b".into(), product_id: "u".into(), size: "S".into() }];
        let err = SalesHistory::from_records(series("b", "u", "M", &[1]), Some(placements)).unwrap_err();
        assert!(matches!(err, Error::Validation { ref field, .. } if field == "placements"));
    }

    #[test]
    fn single_cell_hand_example() {
        // τ(d_u) = 2 in the cell, 10 scope-wide; u placed in 5 scope cells → 2·5/10 = 1
        let mut records = series("b0", "u", "S", &[2]);
        records.extend(series("b1", "u", "S", &[8]));
        let placements: Vec<Placement> = [("b0", "S"), ("b1", "S"), ("b0", "M"), ("b1", "M"), ("b2", "S")]
            .iter()
            .map(|(b, s)| Placement { branch_id: b.to_string(), product_id: "u".into(), size: s.to_string() })
            .collect();
        let h = SalesHistory::from_records(records, Some(placements)).unwrap();
        let scope = Scope {
            branches: vec!["b0".into(), "b1".into(), "b2".into()],
            sizes: vec!["S".into(), "M".into()],
        };
        let raw = estimate_raw(&h, &EstimationConfig::new(vec!["u".into()], 100.0), &scope).unwrap();
        assert!((raw.values[0][0] - 1.0).abs() < 1e-12);
        assert!((raw.values[1][0] - 4.0).abs() < 1e-12);
        // placed but never sold → not in U_{b,s}
        assert!(raw.missing[0][1] && raw.missing[2][0]);
        assert_eq!(raw.values[0][1], 0.0);
    }

    #[test]
    fn duplicate_similar_products_average_out() {
        let mut one = series("b0", "u", "S", &[1, 3]);
        one.extend(series("b1", "u", "S", &[2, 5]));
        let mut two = one.clone();
        two.extend(one.iter().map(|r| SalesRecord { product_id: "v".into(), ..r.clone() }));
        let scope = Scope { branches: vec!["b0".into(), "b1".into()], sizes: vec!["S".into()] };
        let h1 = SalesHistory::from_records(one, None).unwrap();
        let h2 = SalesHistory::from_records(two, None).unwrap();
        let r1 = estimate_raw(&h1, &EstimationConfig::new(vec!["u".into()], 10.0), &scope).unwrap();
        let r2 = estimate_raw(&h2, &EstimationConfig::new(vec!["u".into(), "v".into()], 10.0), &scope).unwrap();
        assert_eq!(r1.values, r2.values);
    }

    #[test]
    fn all_missing_is_an_error() {
        let h = SalesHistory::from_records(series("b0", "u", "S", &[1, 3]), None).unwrap();
        let scope = Scope { branches: vec!["elsewhere".into()], sizes: vec!["S".into()] };
        assert!(matches!(
            estimate_raw(&h, &EstimationConfig::new(vec!["u".into()], 10.0), &scope),
            Err(Error::EstimationImpossible(_))
        ));
    }

    #[test]
    fn scaling_examples() {
        let (c, _) = scale_to_total(&raw(vec![vec![20.0, 30.0]]), 100.0).unwrap();
        assert_eq!(c, 2.0);
        let (c, b) = scale_to_total(&raw(vec![vec![20.0, 30.0]]), 50.0).unwrap();
        assert_eq!(c, 1.0);
        assert_eq!(b[0].demand.values(), &[20.0, 30.0]);
        let (_, b) = scale_to_total(&raw(vec![vec![1.0], vec![3.0]]), 12.0).unwrap();
        assert_eq!((b[0].demand.values()[0], b[1].demand.values()[0]), (3.0, 9.0));
        assert!(scale_to_total(&raw(vec![vec![0.0]]), 12.0).is_err());
    }

    #[test]
    fn separable_keeps_margins() {
        let r = raw(vec![vec![1.0, 3.0], vec![2.0, 2.0]]).separable();
        let rows: Vec<f64> = r.values.iter().map(|x| x.iter().sum()).collect();
        assert!((rows[0] - 4.0).abs() < 1e-12 && (rows[1] - 4.0).abs() < 1e-12);
        assert!((r.values[0][0] - 1.5).abs() < 1e-12);
        assert!((r.values[1][1] - 2.5).abs() < 1e-12);
    }

    #[test]
    fn csv_round() {
        let sales = "branch_id,product_id,size,day,cumulative_sold\nb0,u,S,1,2\nb0,u,S,2,4\nb1,u,M,1,1\n";
        let placements = "branch_id,product_id,size\nb0,u,S\nb1,u,M\nb1,u,S\n";
        let h = SalesHistory::from_csv(sales.as_bytes(), Some(placements.as_bytes())).unwrap();
        assert_eq!(h.cumulative("b0", "u", "S", 2), 4);
        assert!(h.is_placed("b1", "u", "S"));
        assert_eq!(h.products().collect::<Vec<_>>(), vec!["u"]);
        let bad = "branch_id,product_id,size,day\nb0,u,S,1\n";
        assert!(matches!(SalesHistory::from_csv(bad.as_bytes(), None::<&[u8]>), Err(Error::Csv(_))));
    }

    proptest! {
        #[test]
        fn scaled_total_matches_target(
            cells in prop::collection::vec(prop::collection::vec(0.0f64..50.0, 3), 1..10),
            target in 1.0f64..1e5,
        ) {
            prop_assume!(cells.iter().flatten().sum::<f64>() > 1e-6);
            let (_, branches) = scale_to_total(&raw(cells), target).unwrap();
            let total: f64 = branches.iter().map(|b| b.demand.total()).sum();
            prop_assert!((total - target).abs() <= 1e-9 * target);
        }

        #[test]
        fn invariant_under_rescaling_one_product(
            a in prop::collection::vec(0u64..6, 4),
            b in prop::collection::vec(0u64..6, 4),
            w in prop::collection::vec(0u64..6, 4),
            factor in 2u64..7,
        ) {
            let cum = |inc: &[u64], f: u64| -> Vec<u64> {
                inc.iter().scan(0, |acc, &x| { *acc += x * f; Some(*acc) }).collect()
            };
            prop_assume!(a.iter().sum::<u64>() + b.iter().sum::<u64>() > 0 && w.iter().sum::<u64>() > 0);
            let build = |f: u64| {
                let mut r = series("b0", "u", "S", &cum(&a, f));
                r.extend(series("b1", "u", "S", &cum(&b, f)));
                r.extend(series("b0", "w", "S", &cum(&w, 1)));
                SalesHistory::from_records(r, None).unwrap()
            };
            let scope = Scope { branches: vec!["b0".into(), "b1".into()], sizes: vec!["S".into()] };
            let cfg = EstimationConfig::new(vec!["u".into(), "w".into()], 10.0);
            let base = estimate_raw(&build(1), &cfg, &scope).unwrap();
            let scaled = estimate_raw(&build(factor), &cfg, &scope).unwrap();
            for (x, y) in base.values.iter().flatten().zip(scaled.values.iter().flatten()) {
                prop_assert!((x - y).abs() <= 1e-9 * x.abs().max(1.0));
            }
        }

        #[test]
        fn sellout_day_monotone_in_fraction(
            inc in prop::collection::vec(0u64..9, 1..15),
            f1 in 0.01f64..0.99,
            f2 in 0.01f64..0.99,
        ) {
            prop_assume!(inc.iter().sum::<u64>() > 0);
            let cum: Vec<u64> = inc.iter().scan(0, |acc, &x| { *acc += x; Some(*acc) }).collect();
            let h = SalesHistory::from_records(series("b", "u", "M", &cum), None).unwrap();
            let (lo, hi) = if f1 <= f2 { (f1, f2) } else { (f2, f1) };
            prop_assert!(sellout_day(&h, "u", lo).unwrap() <= sellout_day(&h, "u", hi).unwrap());
        }
    }
}
