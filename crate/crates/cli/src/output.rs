//! Wire formats: JSON documents mirroring the library report types, CSV
//! rows for tables, and plain one-line summaries.
//!
//! JSON keys are emitted in canonical (alphabetical) order and floats in
//! shortest round-trip form, so parsing and re-serializing a document is
//! byte-identical.

use serde::{Deserialize, Serialize};
use wrightfn::special::EvalResult;
use wrightfn::transforms::{LaplaceCheckReport, LaplaceKind};
use wrightfn::verify::{EigenfactorReport, ResidualMode, ResidualReport};

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct PointDoc {
    pub coords: Vec<f64>,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct ResidualDoc {
    pub claim_id: String,
    pub diagnostics: Vec<String>,
    pub max_abs_residual: f64,
    pub max_rel_residual: f64,
    pub mode: String,
    pub pass: bool,
    pub points: Vec<PointDoc>,
    pub truncation_order: usize,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct CandidateDoc {
    pub label: String,
    pub max_deviation: f64,
    pub value: f64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct EigenDoc {
    pub candidate_factors: Vec<CandidateDoc>,
    pub claim_id: String,
    pub diagnostics: Vec<String>,
    pub fitted_factor: f64,
    pub pass: bool,
    pub per_coefficient_ratios: Vec<f64>,
    pub truncation_order: usize,
}

/// One entry of a `verify` result: either shape, distinguished by its
/// fields.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ClaimDoc {
    Residual(ResidualDoc),
    Eigen(EigenDoc),
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct LaplaceDoc {
    pub closed_form: Vec<f64>,
    pub diagnostics: Vec<String>,
    pub kind: String,
    pub lambda: f64,
    pub max_rel_gap: f64,
    pub mu: f64,
    pub numeric: Vec<f64>,
    pub pass: bool,
    pub quadrature_error: Vec<f64>,
    pub s_values: Vec<f64>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct EvalDoc {
    pub abs_error_bound: f64,
    pub selector: String,
    pub terms_used: usize,
    pub value: f64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct SeriesDoc {
    pub terms: Vec<(f64, f64)>,
    pub var: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct TableRowDoc {
    pub arg: f64,
    pub error_bound: f64,
    pub value: f64,
}

pub fn residual_doc(r: &ResidualReport) -> ResidualDoc {
    ResidualDoc {
        claim_id: r.claim_id.clone(),
        diagnostics: r.diagnostics.clone(),
        max_abs_residual: r.max_abs_residual,
        max_rel_residual: r.max_rel_residual,
        mode: match r.mode {
            ResidualMode::Coefficient => "coefficient".to_string(),
            ResidualMode::Grid => "grid".to_string(),
        },
        pass: r.pass,
        points: r
            .grid_points
            .iter()
            .map(|p| PointDoc { coords: p.coords.clone(), lhs: p.lhs, rhs: p.rhs })
            .collect(),
        truncation_order: r.truncation_order,
    }
}

pub fn eigen_doc(r: &EigenfactorReport, pass: bool) -> EigenDoc {
    EigenDoc {
        candidate_factors: r
            .candidate_factors
            .iter()
            .map(|c| CandidateDoc {
                label: c.label.clone(),
                max_deviation: c.max_deviation,
                value: c.value,
            })
            .collect(),
        claim_id: r.claim_id.clone(),
        diagnostics: r.diagnostics.clone(),
        fitted_factor: r.fitted_factor,
        pass,
        per_coefficient_ratios: r.per_coefficient_ratios.clone(),
        truncation_order: r.truncation_order,
    }
}

pub fn laplace_doc(r: &LaplaceCheckReport) -> LaplaceDoc {
    LaplaceDoc {
        closed_form: r.closed_form.clone(),
        diagnostics: r.diagnostics.clone(),
        kind: match r.kind {
            LaplaceKind::First => "first".to_string(),
            LaplaceKind::Second => "second".to_string(),
        },
        lambda: r.params.lambda(),
        max_rel_gap: r.max_rel_gap,
        mu: r.params.mu(),
        numeric: r.numeric.clone(),
        pass: r.pass,
        quadrature_error: r.quadrature_error.clone(),
        s_values: r.s_values.clone(),
    }
}

pub fn eval_doc(selector: &str, r: &EvalResult) -> EvalDoc {
    EvalDoc {
        abs_error_bound: r.abs_error_bound,
        selector: selector.to_string(),
        terms_used: r.terms_used,
        value: r.value,
    }
}

pub fn claim_plain_line(doc: &ClaimDoc) -> String {
    match doc {
        ClaimDoc::Residual(r) => format!(
            "{} {} {} max_abs={} max_rel={}",
            r.claim_id,
            r.mode,
            if r.pass { "pass" } else { "FAIL" },
            r.max_abs_residual,
            r.max_rel_residual
        ),
        ClaimDoc::Eigen(e) => {
            let winner = e
                .candidate_factors
                .iter()
                .min_by(|a, b| a.max_deviation.total_cmp(&b.max_deviation))
                .map(|c| c.label.as_str())
                .unwrap_or("?");
            format!(
                "{} eigenfactor {} fitted={} winner={}",
                e.claim_id,
                if e.pass { "pass" } else { "FAIL" },
                e.fitted_factor,
                winner
            )
        }
    }
}

pub fn table_csv(rows: &[TableRowDoc]) -> String {
    let mut out = String::from("arg,value,error_bound\n");
    for r in rows {
        out.push_str(&format!("{},{},{}\n", r.arg, r.value, r.error_bound));
    }
    out
}
