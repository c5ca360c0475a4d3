use serde::Serialize;

/// Outcome of checking one identity on one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub instance: String,
    #[serde(flatten)]
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Equal,
    /// `lhs − rhs = ∂[witness]`, re-verified exactly.
    Homotopic { witness: String },
    /// No witness with commuting degree at most `bound`.
    NotFound { bound: u32 },
    Failed { diff: String },
}

impl IdentityReport {
    pub fn new(identity: impl Into<String>, instance: impl Into<String>, status: Status) -> Self {
        IdentityReport {
            identity: identity.into(),
            instance: instance.into(),
            status,
            elapsed_ms: None,
        }
    }

    /// `Equal` when `diff` renders as zero, otherwise `Failed` carrying the difference.
    pub fn compare(identity: impl Into<String>, instance: impl Into<String>, diff_is_zero: bool, diff: impl FnOnce() -> String) -> Self {
        let status = if diff_is_zero { Status::Equal } else { Status::Failed { diff: diff() } };
        Self::new(identity, instance, status)
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Equal | Status::Homotopic { .. })
    }
}
