//! Report records and their JSON/TSV rendering.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::OutputFormat;

/// Longest witness substring shown in a report.
pub const WITNESS_LIMIT: usize = 80;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LcfReport {
    pub length: usize,
    pub start1: usize,
    pub start2: usize,
    pub k: usize,
    pub algorithm: String,
    pub n: usize,
    pub m: usize,
    pub elapsed_ms: f64,
    pub witness1: String,
    pub witness2: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MsReport {
    pub k: usize,
    pub algorithm: String,
    pub orientation: String,
    pub n: usize,
    pub m: usize,
    pub values: Vec<usize>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepeatsReport {
    pub gamma: usize,
    pub start1: usize,
    pub start2: usize,
    pub k: usize,
    pub algorithm: String,
    pub n: usize,
    pub elapsed_ms: f64,
    pub witness1: String,
    pub witness2: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialFailure {
    pub trial: usize,
    pub checks: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub seed: u64,
    pub failures: Vec<TrialFailure>,
    pub elapsed_ms: f64,
}

/// Witness text: lossy UTF-8 of at most [`WITNESS_LIMIT`] bytes.
pub fn witness_text(bytes: &[u8]) -> String {
    String::from_utf8_lossy(&bytes[..bytes.len().min(WITNESS_LIMIT)]).into_owned()
}

/// Renders `report` followed by a newline.
pub fn render<T: Serialize>(report: &T, format: OutputFormat) -> String {
    let value = serde_json::to_value(report).expect("reports serialize");
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string(&value).expect("reports serialize");
            s.push('\n');
            s
        }
        OutputFormat::Tsv => {
            let Value::Object(map) = value else { unreachable!("reports are structs") };
            let header: Vec<&str> = map.keys().map(String::as_str).collect();
            let row: Vec<String> = map.values().map(tsv_cell).collect();
            format!("{}\n{}\n", header.join("\t"), row.join("\t"))
        }
    }
}

fn tsv_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.replace('\\', "\\\\").replace('\t', "\\t").replace('\n', "\\n").replace('\r', "\\r"),
        Value::Array(items) => items.iter().map(tsv_cell).collect::<Vec<_>>().join(","),
        Value::Object(_) => serde_json::to_string(v).expect("value serializes"),
        other => other.to_string(),
    }
}
