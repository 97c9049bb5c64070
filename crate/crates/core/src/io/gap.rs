use serde::Serialize;

use crate::error::{Error, Result};

/// `100 · (heuristic − exact) / exact`.
pub fn gap_percent(exact: f64, heuristic: f64) -> Result<f64> {
    if !(exact.is_finite() && exact > 0.0) {
        return Err(Error::InvalidBaseline(exact));
    }
    Ok(100.0 * (heuristic - exact) / exact)
}

/// Rounds half-up to three decimals. The nudge absorbs representation error
/// of decimal halves such as 0.0125.
fn round3_half_up(x: f64) -> f64 {
    let scaled = x * 1000.0;
    (scaled + 0.5 + 1e-9 * scaled.abs().max(1.0)).floor() / 1000.0
}

/// Objective with at most six decimals, trailing zeros trimmed.
fn format_objective(x: f64) -> String {
    let s = format!("{x:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

fn format3(x: f64) -> String {
    let s = format!("{:.3}", round3_half_up(x));
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

/// Gap as a percentage string with three decimals, e.g. `"0.013%"`.
pub fn gap_report(exact: f64, heuristic: f64) -> Result<String> {
    Ok(format!("{}%", format3(gap_percent(exact, heuristic)?)))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapRow {
    pub config: String,
    pub exact: f64,
    pub heuristic: f64,
}

/// Exact/heuristic objective pairs per configuration (typically per κ).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GapReport {
    pub rows: Vec<GapRow>,
}

impl GapReport {
    pub fn push(&mut self, config: impl Into<String>, exact: f64, heuristic: f64) {
        self.rows.push(GapRow {
            config: config.into(),
            exact,
            heuristic,
        });
    }

    /// CSV with columns `config,exact,heuristic,gap_pct`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["config", "exact", "heuristic", "gap_pct"])?;
        for r in &self.rows {
            let gap = format3(gap_percent(r.exact, r.heuristic)?);
            w.write_record([r.config.clone(), format_objective(r.exact), format_objective(r.heuristic), gap])?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Csv(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}
