use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::verify::Checked;

/// Top-level JSON document printed by every command.
#[derive(Debug, Clone, Serialize)]
pub struct Report<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input_digest: String,
    #[serde(flatten)]
    pub body: T,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: impl Into<String>, input: &[u8], body: T) -> Self {
        Report {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            input_digest: digest(input),
            body,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub not_found: usize,
}

impl Summary {
    pub fn of(checks: &[Checked]) -> Self {
        use crate::koszul::Status;
        let mut s = Summary {
            total: checks.len(),
            ..Default::default()
        };
        for c in checks {
            match c.report.status {
                Status::Equal | Status::Homotopic { .. } => s.passed += 1,
                Status::NotFound { .. } => s.not_found += 1,
                Status::Failed { .. } => s.failed += 1,
            }
        }
        s
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

/// The failing check of least dimension, then least degree, then earliest position.
pub fn smallest_failure(checks: &[Checked]) -> Option<&Checked> {
    checks
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.report.passed())
        .min_by_key(|(i, c)| (c.dimension, c.degree, *i))
        .map(|(_, c)| c)
}
