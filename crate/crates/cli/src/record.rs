//! JSONL run records: one self-describing JSON object per invocation.

use serde::Serialize;

pub const SCHEMA: &str = "freewidth.run/1";

#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub schema: &'static str,
    pub command: String,
    pub inputs: Vec<String>,
    pub outputs: serde_json::Value,
    pub certificates: serde_json::Value,
    pub seed: u64,
    pub version: &'static str,
    pub wall_time_ms: u128,
}

impl RunRecord {
    pub fn new(command: impl Into<String>, seed: u64) -> RunRecord {
        RunRecord {
            schema: SCHEMA,
            command: command.into(),
            inputs: Vec::new(),
            outputs: serde_json::Value::Null,
            certificates: serde_json::Value::Null,
            seed,
            version: env!("CARGO_PKG_VERSION"),
            wall_time_ms: 0,
        }
    }

    /// One line of JSONL (no trailing newline).
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_are_single_json_lines() {
        let mut r = RunRecord::new("delta", 1);
        r.inputs.push("x1 x2".into());
        r.outputs = serde_json::json!("0");
        let line = r.to_line();
        assert!(!line.contains('\n'));
        let back: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(back["schema"], SCHEMA);
        assert_eq!(back["command"], "delta");
        assert_eq!(back["seed"], 1);
    }
}
