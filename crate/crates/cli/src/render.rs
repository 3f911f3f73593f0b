//! Text, JSON and CSV renderings. JSON goes through `serde_json::Value`,
//! whose maps are ordered, so keys come out sorted.

use serde_json::{json, Value};

use crate::suite::SuiteResult;

pub const SCHEMA: u64 = 1;

fn with_schema(mut v: Value) -> Value {
    v.as_object_mut().expect("object").insert("schema".into(), json!(SCHEMA));
    v
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

pub fn suite_json(suite: &SuiteResult) -> String {
    pretty(&with_schema(serde_json::to_value(suite).expect("json")))
}

/// The aggregated document of `report --all`.
pub fn report_json(suites: &[SuiteResult]) -> String {
    pretty(&json!({
        "schema": SCHEMA,
        "suites": suites,
        "summary": report_summary(suites),
    }))
}

fn report_summary(suites: &[SuiteResult]) -> Value {
    let total: usize = suites.iter().map(|s| s.summary.total).sum();
    let passed: usize = suites.iter().map(|s| s.summary.passed).sum();
    json!({
        "suites": suites.len(),
        "suites_passed": suites.iter().filter(|s| s.pass()).count(),
        "total": total,
        "passed": passed,
        "failed": total - passed,
    })
}

pub fn suite_text(suite: &SuiteResult) -> String {
    let width = suite.cases.iter().map(|c| c.id.len()).max().unwrap_or(0);
    let mut out = format!("{}: {}/{} passed", suite.suite_id, suite.summary.passed, suite.summary.total);
    if let Some(ms) = suite.wall_time_ms {
        out.push_str(&format!(" in {ms} ms"));
    }
    out.push('\n');
    for c in &suite.cases {
        let tag = if c.pass { "PASS" } else { "FAIL" };
        out.push_str(format!("  {tag} {:width$}  {}", c.id, c.detail).trim_end());
        out.push('\n');
    }
    out
}

pub fn report_text(suites: &[SuiteResult]) -> String {
    let mut out: String = suites.iter().map(suite_text).collect();
    let s = report_summary(suites);
    out.push_str(&format!(
        "total: {}/{} cases passed, {}/{} suites passed\n",
        s["passed"], s["total"], s["suites_passed"], s["suites"]
    ));
    out
}

/// One row per case; `inputs`, `expected` and `actual` are compact JSON.
pub fn suites_csv(suites: &[SuiteResult]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["suite_id", "case_id", "pass", "inputs", "expected", "actual"]).expect("csv");
    for s in suites {
        for c in &s.cases {
            w.write_record([
                s.suite_id.as_str(),
                c.id.as_str(),
                if c.pass { "true" } else { "false" },
                &c.inputs.to_string(),
                &c.expected.to_string(),
                &c.actual.to_string(),
            ])
            .expect("csv");
        }
    }
    String::from_utf8(w.into_inner().expect("csv")).expect("utf-8")
}

pub fn listing_json(v: Value) -> String {
    pretty(&with_schema(v))
}

pub fn rows_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("csv");
    for r in rows {
        w.write_record(r).expect("csv");
    }
    String::from_utf8(w.into_inner().expect("csv")).expect("utf-8")
}
