use serde::Serialize;
use serde_json::{Map, Value};

/// One expected-versus-computed comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

/// Machine-readable outcome of one command. Keys serialize in a fixed order,
/// so identical inputs give byte-identical reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub output: Value,
    pub results: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit_code: i32,
}

impl RunReport {
    pub fn new(command: &str, inputs: Map<String, Value>) -> Self {
        RunReport {
            command: command.to_string(),
            inputs,
            output: Value::Null,
            results: Vec::new(),
            error: None,
            exit_code: 0,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, expected: impl ToString, computed: impl ToString) -> bool {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let pass = expected == computed;
        self.results.push(CheckResult { check: name.into(), expected, computed, pass });
        pass
    }

    /// Marks the input as unusable; the report exits with code 2.
    pub fn fail_input(mut self, msg: impl ToString) -> Self {
        self.error = Some(msg.to_string());
        self.finish()
    }

    /// Sets the exit code: 2 on bad input, 1 on any failed check, else 0.
    pub fn finish(mut self) -> Self {
        self.exit_code = if self.error.is_some() {
            2
        } else if self.results.iter().any(|r| !r.pass) {
            1
        } else {
            0
        };
        self
    }

    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.pass).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    /// Short human-readable summary.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "{}: {}/{} checks passed, exit {}\n",
            self.command,
            self.passed(),
            self.results.len(),
            self.exit_code
        );
        if let Some(e) = &self.error {
            out += &format!("  error: {e}\n");
        }
        for r in self.results.iter().filter(|r| !r.pass).take(10) {
            out += &format!("  FAIL {}: expected {}, computed {}\n", r.check, r.expected, r.computed);
        }
        out
    }
}
