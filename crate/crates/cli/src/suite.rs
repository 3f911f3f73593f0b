use serde::Serialize;
use serde_json::Value;

/// One checked case.
#[derive(Debug, Clone, Serialize)]
pub struct Case {
    pub id: String,
    pub inputs: Value,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
    /// One-line human summary; not part of the JSON record.
    #[serde(skip)]
    pub detail: String,
}

impl Case {
    pub fn new(id: impl Into<String>, inputs: Value, expected: Value, actual: Value, pass: bool) -> Self {
        Self { id: id.into(), inputs, expected, actual, pass, detail: String::new() }
    }

    pub fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// The cases of one suite, in canonical order.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub suite_id: String,
    pub cases: Vec<Case>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl SuiteResult {
    pub fn new(suite_id: impl Into<String>, cases: Vec<Case>) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        let summary = Summary { total: cases.len(), passed, failed: cases.len() - passed };
        Self { suite_id: suite_id.into(), cases, summary, wall_time_ms: None }
    }

    pub fn pass(&self) -> bool {
        self.summary.failed == 0
    }
}
