use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// No asserted comparison failed, but some job could not finish.
    Partial,
}

/// Named boolean assertions plus errors from jobs that did not finish.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Checks {
    pub items: Vec<CheckRow>,
    pub errors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub label: String,
    pub passed: bool,
}

impl Checks {
    pub fn check(&mut self, label: impl Into<String>, passed: bool) -> bool {
        self.items.push(CheckRow {
            label: label.into(),
            passed,
        });
        passed
    }

    pub fn error(&mut self, msg: impl Into<String>) {
        self.errors.push(msg.into());
    }

    pub fn extend(&mut self, other: Checks) {
        self.items.extend(other.items);
        self.errors.extend(other.errors);
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.items.iter().filter(|c| !c.passed)
    }

    pub fn status(&self) -> Status {
        if self.failures().next().is_some() {
            Status::Fail
        } else if !self.errors.is_empty() {
            Status::Partial
        } else {
            Status::Pass
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportEnvelope {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub status: Status,
    pub timing_ms: u64,
}

impl ReportEnvelope {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Partial => "partial",
        };
        let mut out = format!(
            "command: {}\nstatus: {status}\ntiming_ms: {}\ninputs: {}\n",
            self.command, self.timing_ms, self.inputs
        );
        if let Value::Object(map) = &self.results {
            for (k, v) in map {
                if k == "checks" {
                    continue;
                }
                let text = v.to_string();
                if text.len() > 600 {
                    out.push_str(&format!("{k}: ({} bytes, see --json)\n", text.len()));
                } else {
                    out.push_str(&format!("{k}: {text}\n"));
                }
            }
            if let Some(checks) = map
                .get("checks")
                .and_then(|c| c.get("items"))
                .and_then(Value::as_array)
            {
                let failed: Vec<&Value> = checks
                    .iter()
                    .filter(|c| c["passed"].as_bool() != Some(true))
                    .collect();
                out.push_str(&format!(
                    "checks: {} passed, {} failed\n",
                    checks.len() - failed.len(),
                    failed.len()
                ));
                let shown = if checks.len() <= 20 {
                    checks.iter().collect()
                } else {
                    failed
                };
                for c in shown {
                    let mark = if c["passed"].as_bool() == Some(true) {
                        "ok  "
                    } else {
                        "FAIL"
                    };
                    out.push_str(&format!(
                        "  [{mark}] {}\n",
                        c["label"].as_str().unwrap_or("")
                    ));
                }
            }
            if let Some(errors) = map
                .get("checks")
                .and_then(|c| c.get("errors"))
                .and_then(Value::as_array)
            {
                for e in errors {
                    out.push_str(&format!("  [err ] {}\n", e.as_str().unwrap_or("")));
                }
            }
        } else {
            out.push_str(&format!("results: {}\n", self.results));
        }
        out
    }
}
