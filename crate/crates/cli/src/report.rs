//! Human-readable and JSON renderings of check results.

use std::time::Duration;

use braidist_core::conditions::{ConditionResult, Expectation, Outcome};
use braidist_core::diagram::{CommuteReport, Vacuity, Verdict};
use braidist_core::matrix::Mismatch;
use serde::Serialize;

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct JsonWitness {
    pub row: usize,
    pub col: usize,
    /// Entry of the composite around the cycle.
    pub left: String,
    /// Entry of the identity.
    pub right: String,
}

impl From<&Mismatch> for JsonWitness {
    fn from(m: &Mismatch) -> Self {
        Self {
            row: m.row,
            col: m.col,
            left: m.left.to_string(),
            right: m.right.to_string(),
        }
    }
}

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct JsonResult {
    pub name: String,
    pub figure: Option<String>,
    pub verdict: &'static str,
    pub expected: &'static str,
    pub base_vertex: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<JsonWitness>,
    pub vacuous: bool,
}

fn verdict_str(v: &Verdict) -> &'static str {
    if v.commutes() {
        "commutes"
    } else {
        "fails"
    }
}

fn expectation_str(e: Expectation) -> &'static str {
    match e {
        Expectation::Commutes => "commutes",
        Expectation::Fails => "fails",
    }
}

pub fn json_entry(
    report: &CommuteReport,
    figure: Option<&str>,
    expected: Expectation,
) -> JsonResult {
    JsonResult {
        name: report.diagram.clone(),
        figure: figure.map(str::to_string),
        verdict: verdict_str(&report.verdict),
        expected: expectation_str(expected),
        base_vertex: report.base_vertex,
        witness: report.verdict.witness().map(JsonWitness::from),
        vacuous: report.vacuity.is_vacuous(),
    }
}

pub fn json_condition(r: &ConditionResult) -> JsonResult {
    json_entry(&r.report, r.name.figure(), r.expected)
}

fn vacuity_note(v: Vacuity) -> &'static str {
    match v {
        Vacuity::NonVacuous => "",
        Vacuity::IdentityOnly => "  (vacuous: every edge is an identity matrix)",
        Vacuity::Empty => "  (vacuous: every vertex is zero)",
    }
}

fn witness_note(v: &Verdict) -> String {
    match v.witness() {
        None => String::new(),
        Some(w) => format!(
            "  witness ({}, {}): {} vs {}",
            w.row, w.col, w.left, w.right
        ),
    }
}

fn duration(d: Duration) -> String {
    let us = d.as_micros();
    if us >= 10_000 {
        format!("{} ms", us / 1000)
    } else {
        format!("{us} µs")
    }
}

pub fn outcome_label(o: Outcome) -> &'static str {
    match o {
        Outcome::Pass => "ok",
        Outcome::ExpectedFail => "ok (expected failure)",
        Outcome::VacuousControl => "VACUOUS CONTROL",
        Outcome::Unexpected => "MISMATCH",
    }
}

/// One line per result.
pub fn human_line(r: &ConditionResult, outcome: Outcome) -> String {
    let label = match r.name.figure() {
        Some(f) => format!("{} [{f}]", r.name),
        None => r.name.to_string(),
    };
    format!(
        "{label:<26} {:<8} {:<22} dim {:>3}  {:>8}{}{}",
        verdict_str(r.verdict()),
        outcome_label(outcome),
        r.max_dim,
        duration(r.elapsed),
        witness_note(r.verdict()),
        vacuity_note(r.vacuity()),
    )
}

pub fn human_report(report: &CommuteReport, outcome: Outcome) -> String {
    format!(
        "{}: {} from vertex {} ({}), {}{}{}",
        report.diagram,
        verdict_str(&report.verdict),
        report.base_vertex,
        report.orientation,
        outcome_label(outcome),
        witness_note(&report.verdict),
        vacuity_note(report.vacuity),
    )
}
