//! Text, JSON and LaTeX rendering of values, polynomials and check reports.
//! All machine output is deterministic: JSON maps are ordered and nothing
//! carries timestamps.

use std::collections::BTreeMap;

use num::BigRational;
use serde::Serialize;

use crate::checks::{CheckReport, Subject};
use crate::poly::LaurentPoly;

/// Output format selector shared by all subcommands.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

pub fn rational_latex(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else if r.numer() < &num::BigInt::from(0) {
        format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

#[derive(Serialize)]
pub struct DimValueJson {
    pub lambda: Vec<usize>,
    pub tau: Vec<usize>,
    pub n: i64,
    pub value: String,
}

#[derive(Serialize)]
pub struct DimPolyJson {
    pub lambda: Vec<usize>,
    pub tau: Vec<usize>,
    pub poly: BTreeMap<String, String>,
}

#[derive(Serialize)]
pub struct CasimirValueJson {
    pub lambda: Vec<usize>,
    pub tau: Vec<usize>,
    pub n: i64,
    pub value: String,
    pub direct: String,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct CasimirPolyJson {
    pub lambda: Vec<usize>,
    pub tau: Vec<usize>,
    pub poly: BTreeMap<String, String>,
}

/// CheckReport in the documented JSON shape:
/// {"identity":"prop1","lambda":[...],"tau":[...],"holds":true,"sign":-1,
///  "lhs":{...},"rhs_transformed":{...}}
#[derive(Serialize)]
pub struct ReportJson {
    pub identity: &'static str,
    pub lambda: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<Vec<usize>>,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
    pub lhs: BTreeMap<String, String>,
    pub rhs_transformed: BTreeMap<String, String>,
}

impl ReportJson {
    pub fn from_report(report: &CheckReport) -> ReportJson {
        let (lambda, tau) = match &report.subject {
            Subject::Diagram(y) => (y.rows().to_vec(), None),
            Subject::Rep(r) => (r.lambda().rows().to_vec(), Some(r.tau().rows().to_vec())),
        };
        ReportJson {
            identity: report.identity.name(),
            lambda,
            tau,
            holds: report.holds,
            sign: report.sign,
            lhs: report.lhs.to_json_map(),
            rhs_transformed: report.rhs_transformed.to_json_map(),
        }
    }
}

#[derive(Serialize)]
pub struct TableRowJson {
    pub lambda: Vec<usize>,
    pub tau: Vec<usize>,
    pub dim: BTreeMap<String, String>,
    pub casimir: BTreeMap<String, String>,
    pub prop1: bool,
    pub prop2: bool,
    pub z2: bool,
}

pub fn report_text(report: &CheckReport) -> String {
    let verdict = if report.holds { "holds" } else { "FAILS" };
    let sign = report
        .sign
        .map(|s| format!(", sign {s:+}"))
        .unwrap_or_default();
    let mut line = format!("{} [{}]: {verdict}{sign}", report.identity, report.subject);
    if report.detail.starts_with("not applicable") {
        line.push_str(" (not applicable)");
    }
    if !report.holds {
        line.push_str(&format!(
            "\n  lhs: {}\n  rhs: {}",
            report.lhs, report.rhs_transformed
        ));
    }
    line
}

pub fn report_latex(report: &CheckReport) -> String {
    let relation = if report.holds { "=" } else { "\\neq" };
    format!(
        "\\text{{{}}}\\;[{}]:\\; {} {relation} {}",
        report.identity,
        report.subject,
        report.lhs.to_latex(),
        report.rhs_transformed.to_latex()
    )
}

pub fn poly_render(p: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Json => p.to_json_string(),
        Format::Latex => p.to_latex(),
    }
}
