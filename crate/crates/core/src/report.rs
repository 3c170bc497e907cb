//! The JSON envelope wrapped around every command result.

use serde::Serialize;
use serde_json::Value;

use crate::solvers::Discrepancy;

pub const TOOL_NAME: &str = "padic-gibbs";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    /// Checks ran but at least one failed.
    Fail,
    Error,
    InternalInconsistency,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Fail | Status::Error => 1,
            Status::InternalInconsistency => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorInfo {
    pub name: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Envelope {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input: Value,
    pub results: Value,
    pub discrepancies: Vec<Discrepancy>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

impl Envelope {
    pub fn new(command: &str, input: Value) -> Self {
        Envelope {
            tool: TOOL_NAME,
            version: TOOL_VERSION,
            command: command.to_string(),
            input,
            results: Value::Null,
            discrepancies: Vec::new(),
            status: Status::Ok,
            error: None,
        }
    }

    pub fn with_error(mut self, name: &str, message: String, status: Status) -> Self {
        self.status = status;
        self.error = Some(ErrorInfo {
            name: name.to_string(),
            message,
        });
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes")
    }
}
