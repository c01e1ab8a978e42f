//! Text and JSON renderings of identity reports.
//!
//! JSON carries every number that may exceed double precision as a decimal
//! string.

use serde::Serialize;
use serde_json::Value;

use super::IdentityReport;

/// Aggregate over a batch of reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub all_passed: bool,
}

impl Summary {
    pub fn of(reports: &[IdentityReport]) -> Self {
        let passed = reports.iter().filter(|r| r.passed).count();
        Summary { total: reports.len(), passed, failed: reports.len() - passed, all_passed: passed == reports.len() }
    }
}

#[derive(Serialize)]
struct Record<'a> {
    id: &'a str,
    lhs_value: String,
    rhs_value: String,
    agree_digits: Option<i64>,
    threshold: i64,
    passed: bool,
    elapsed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
}

impl IdentityReport {
    /// JSON object for this report. Values are printed to the target digits.
    pub fn to_json(&self) -> Value {
        let places = self.target_digits as usize;
        let record = Record {
            id: &self.id,
            lhs_value: self.lhs_value.to_fixed(places),
            rhs_value: self.rhs_value.to_fixed(places),
            agree_digits: (self.error.is_none()).then_some(self.agree_digits),
            threshold: self.threshold,
            passed: self.passed,
            elapsed: format!("{:.6}", self.elapsed.as_secs_f64()),
            seed: self.seed.map(|s| s.to_string()),
            error: self.error.as_deref(),
        };
        serde_json::to_value(record).expect("report serializes")
    }
}

/// `{"reports": [...], "summary": {...}}`.
pub fn render_json(reports: &[IdentityReport]) -> Value {
    serde_json::json!({
        "reports": reports.iter().map(IdentityReport::to_json).collect::<Vec<_>>(),
        "summary": Summary::of(reports),
    })
}

/// Fixed-width table, one row per report, then a summary line.
pub fn render_text(reports: &[IdentityReport]) -> String {
    let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut out = format!(
        "{:<width$}  {:>7}  {:>9}  {:<6}  {:>10}  {}\n",
        "id", "agree", "threshold", "status", "seconds", "lhs"
    );
    for r in reports {
        let agree = match r.error {
            Some(_) => "-".to_string(),
            None => r.agree_digits.to_string(),
        };
        let status = if r.passed { "PASS" } else { "FAIL" };
        let lhs = match &r.error {
            Some(e) => format!("error: {e}"),
            None => r.lhs_value.to_fixed(20.min(r.target_digits as usize)),
        };
        out.push_str(&format!(
            "{:<width$}  {:>7}  {:>9}  {:<6}  {:>10.3}  {}\n",
            r.id,
            agree,
            r.threshold,
            status,
            r.elapsed.as_secs_f64(),
            lhs
        ));
    }
    let s = Summary::of(reports);
    out.push_str(&format!("{} of {} identities passed\n", s.passed, s.total));
    out
}
