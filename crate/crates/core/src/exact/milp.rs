//! LP-format (CPLEX dialect) emission of the two integer programs.
//!
//! Variable names are fixed: `x_b_l_m` (branch `b`, lot `l`, multiplier
//! `m`), `y_l`, and for the weak model `a_b_s` (supply) and `z_b_s`
//! (absolute deviation). Branch, lot and size indices are 0-based; `m` is
//! the multiplier value itself.

use std::fmt::{self, Write};

use crate::error::{Error, Result};
use crate::model::Instance;
use crate::norm::Norm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Formulation {
    /// Precomputed deviations as objective coefficients.
    Strong,
    /// Explicit L1 linearization with supply and deviation variables.
    Weak,
}

impl std::str::FromStr for Formulation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "strong" => Ok(Formulation::Strong),
            "weak" => Ok(Formulation::Weak),
            other => Err(Error::InvalidParameter(format!(
                "unknown formulation `{other}` (expected strong or weak)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Le => "<=",
            Sense::Ge => ">=",
            Sense::Eq => "=",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpRow {
    pub name: String,
    pub terms: Vec<(f64, String)>,
    pub sense: Sense,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MilpModel {
    pub formulation: Formulation,
    pub objective: Vec<(f64, String)>,
    pub constraints: Vec<LpRow>,
    /// Every variable, binaries first.
    pub variables: Vec<String>,
    pub binaries: Vec<String>,
}

impl MilpModel {
    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn to_lp_string(&self) -> String {
        let mut out = String::new();
        let kind = match self.formulation {
            Formulation::Strong => "strong",
            Formulation::Weak => "weak",
        };
        let _ = writeln!(out, "\\ lot-type design model, {kind} formulation");
        out.push_str("Minimize\n");
        write_expr(&mut out, " obj:", &self.objective);
        out.push('\n');
        out.push_str("Subject To\n");
        for row in &self.constraints {
            write_expr(&mut out, &format!(" {}:", row.name), &row.terms);
            let _ = writeln!(out, " {} {}", row.sense, fmt_num(row.rhs));
        }
        out.push_str("Binaries\n");
        write_names(&mut out, &self.binaries);
        out.push_str("End\n");
        out
    }
}

const LINE_WIDTH: usize = 78;

/// Shortest decimal with at most nine fractional digits.
fn fmt_num(x: f64) -> String {
    if x == x.trunc() && x.abs() < 1e15 {
        return format!("{}", x as i64);
    }
    let s = format!("{x:.9}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn write_expr(out: &mut String, head: &str, terms: &[(f64, String)]) {
    let mut line = head.to_string();
    for (i, (coef, name)) in terms.iter().enumerate() {
        let mag = fmt_num(coef.abs());
        let body = if mag == "1" { name.clone() } else { format!("{mag} {name}") };
        let piece = match (i, *coef < 0.0) {
            (0, false) => format!(" {body}"),
            (0, true) => format!(" - {body}"),
            (_, false) => format!(" + {body}"),
            (_, true) => format!(" - {body}"),
        };
        if line.len() + piece.len() > LINE_WIDTH && line.trim_start() != head.trim_start() {
            out.push_str(&line);
            out.push('\n');
            line = "   ".to_string();
        }
        line.push_str(&piece);
    }
    if terms.is_empty() {
        line.push_str(" 0");
    }
    out.push_str(&line);
}

fn write_names(out: &mut String, names: &[String]) {
    let mut line = String::new();
    for name in names {
        if !line.is_empty() && line.len() + name.len() + 1 > LINE_WIDTH {
            out.push_str(&line);
            out.push('\n');
            line.clear();
        }
        line.push(' ');
        line.push_str(name);
    }
    if !line.is_empty() {
        out.push_str(&line);
        out.push('\n');
    }
}

fn x(b: usize, l: usize, m: u32) -> String {
    format!("x_{b}_{l}_{m}")
}

/// Builds the LP model of `inst`. The weak model linearizes the L1 norm
/// only and refuses other branch norms.
pub fn emit_milp(inst: &Instance, formulation: Formulation) -> Result<MilpModel> {
    if formulation == Formulation::Weak && inst.branch_norm() != Norm::L1 {
        return Err(Error::Unsupported(format!(
            "the weak formulation linearizes L1 only; instance uses {}",
            inst.branch_norm()
        )));
    }
    let (nb, nl, ns, mm) = (inst.num_branches(), inst.num_lots(), inst.sizes().len(), inst.m_max());
    let triples = || {
        (0..nb).flat_map(move |b| (0..nl).flat_map(move |l| (1..=mm).map(move |m| (b, l, m))))
    };
    let lot_size = |l: usize| inst.lot_universe()[l].size() as f64;

    let mut variables: Vec<String> = triples().map(|(b, l, m)| x(b, l, m)).collect();
    variables.extend((0..nl).map(|l| format!("y_{l}")));
    let binaries = variables.clone();

    let objective = match formulation {
        Formulation::Strong => triples().map(|(b, l, m)| (inst.sigma(b, l, m), x(b, l, m))).collect(),
        Formulation::Weak => (0..nb)
            .flat_map(|b| (0..ns).map(move |s| (1.0, format!("z_{b}_{s}"))))
            .collect(),
    };

    let mut constraints = Vec::new();
    for b in 0..nb {
        constraints.push(LpRow {
            name: format!("assign_{b}"),
            terms: (0..nl)
                .flat_map(|l| (1..=mm).map(move |m| (1.0, x(b, l, m))))
                .collect(),
            sense: Sense::Eq,
            rhs: 1.0,
        });
    }
    let item_terms: Vec<(f64, String)> = triples()
        .map(|(b, l, m)| (f64::from(m) * lot_size(l), x(b, l, m)))
        .collect();
    constraints.push(LpRow {
        name: "card_hi".into(),
        terms: item_terms.clone(),
        sense: Sense::Le,
        rhs: inst.card_hi() as f64,
    });
    constraints.push(LpRow {
        name: "card_lo".into(),
        terms: item_terms,
        sense: Sense::Ge,
        rhs: inst.card_lo() as f64,
    });
    for b in 0..nb {
        for l in 0..nl {
            let mut terms: Vec<(f64, String)> = (1..=mm).map(|m| (1.0, x(b, l, m))).collect();
            terms.push((-1.0, format!("y_{l}")));
            constraints.push(LpRow {
                name: format!("link_{b}_{l}"),
                terms,
                sense: Sense::Le,
                rhs: 0.0,
            });
        }
    }
    constraints.push(LpRow {
        name: "kappa".into(),
        terms: (0..nl).map(|l| (1.0, format!("y_{l}"))).collect(),
        sense: Sense::Le,
        rhs: inst.kappa() as f64,
    });

    if formulation == Formulation::Weak {
        for b in 0..nb {
            let eta = inst.branches()[b].demand.values();
            for (s, &eta_s) in eta.iter().enumerate().take(ns) {
                let (a, z) = (format!("a_{b}_{s}"), format!("z_{b}_{s}"));
                let mut terms: Vec<(f64, String)> = (0..nl)
                    .flat_map(|l| {
                        let per_lot = f64::from(inst.lot_universe()[l].counts()[s]);
                        (1..=mm).map(move |m| (f64::from(m) * per_lot, x(b, l, m)))
                    })
                    .filter(|(c, _)| *c != 0.0)
                    .collect();
                terms.push((-1.0, a.clone()));
                constraints.push(LpRow {
                    name: format!("supply_{b}_{s}"),
                    terms,
                    sense: Sense::Eq,
                    rhs: 0.0,
                });
                constraints.push(LpRow {
                    name: format!("dev_lo_{b}_{s}"),
                    terms: vec![(1.0, a.clone()), (1.0, z.clone())],
                    sense: Sense::Ge,
                    rhs: eta_s,
                });
                constraints.push(LpRow {
                    name: format!("dev_hi_{b}_{s}"),
                    terms: vec![(1.0, a), (-1.0, z)],
                    sense: Sense::Le,
                    rhs: eta_s,
                });
            }
        }
        for b in 0..nb {
            for s in 0..ns {
                variables.push(format!("a_{b}_{s}"));
                variables.push(format!("z_{b}_{s}"));
            }
        }
    }

    Ok(MilpModel {
        formulation,
        objective,
        constraints,
        variables,
        binaries,
    })
}
