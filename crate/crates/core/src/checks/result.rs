use std::fmt;
use std::time::Duration;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
            Status::Skipped => write!(f, "skipped"),
        }
    }
}

/// Outcome of one named check at one parameter point. A failure always
/// carries a nonempty witness.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: String,
    pub params: String,
    pub status: Status,
    pub witness: String,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn pass(id: &str, params: String, witness: String, elapsed: Duration) -> Self {
        CheckResult { id: id.into(), params, status: Status::Pass, witness, elapsed }
    }

    pub fn fail(id: &str, params: String, witness: String, elapsed: Duration) -> Self {
        let witness = if witness.is_empty() { "unspecified mismatch".into() } else { witness };
        CheckResult { id: id.into(), params, status: Status::Fail, witness, elapsed }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Line-delimited structured record with stable field order.
    pub fn record(&self) -> String {
        format!(
            "id={} params={} status={} witness={} elapsed-ms={}",
            self.id,
            if self.params.is_empty() { "-" } else { &self.params },
            self.status,
            if self.witness.is_empty() { "-".into() } else { self.witness.replace(' ', "_") },
            self.elapsed.as_millis()
        )
    }
}
