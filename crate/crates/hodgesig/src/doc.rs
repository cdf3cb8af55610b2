//! The self-describing JSON envelope around every emitted document.

use serde_json::{json, Value};

use crate::error::CliError;
use crate::{SCHEMA, VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// The computation finished but a structure check found violations.
    StructureViolation,
    /// A self-test check failed.
    Failed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::StructureViolation => "structure_violation",
            Status::Failed => "failed",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::StructureViolation | Status::Failed => 2,
        }
    }

    pub fn worst(self, other: Status) -> Status {
        if self.exit_code() >= other.exit_code() && self != Status::Ok {
            self
        } else {
            other
        }
    }
}

pub fn success(command: &str, status: Status, result: Value) -> Value {
    json!({
        "schema": SCHEMA,
        "version": VERSION,
        "command": command,
        "status": status.as_str(),
        "result": result,
    })
}

pub fn failure(command: &str, err: &CliError) -> Value {
    json!({
        "schema": SCHEMA,
        "version": VERSION,
        "command": command,
        "status": "error",
        "error": { "kind": err.kind(), "exit_code": err.exit_code(), "message": err.to_string() },
    })
}

/// Pretty-printed with a trailing newline. Map keys come out sorted, so
/// equal values render to identical bytes.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// One compact document per line.
pub fn render_lines(vs: &[Value]) -> String {
    let mut s = String::new();
    for v in vs {
        s.push_str(&v.to_string());
        s.push('\n');
    }
    s
}

/// Checks the envelope fields of a parsed document.
pub fn validate_envelope(v: &Value) -> Result<(), String> {
    let obj = v.as_object().ok_or("document is not an object")?;
    if obj.get("schema").and_then(Value::as_str) != Some(SCHEMA) {
        return Err(format!("schema is not {SCHEMA}"));
    }
    for key in ["version", "command", "status"] {
        if !obj.get(key).is_some_and(Value::is_string) {
            return Err(format!("missing string field {key}"));
        }
    }
    let status = obj["status"].as_str().unwrap_or_default();
    let want = if status == "error" { "error" } else { "result" };
    if !obj.contains_key(want) {
        return Err(format!("status {status} without {want}"));
    }
    if obj.len() != 5 {
        return Err("unexpected top-level fields".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelopes_validate() {
        let ok = success("norm", Status::Ok, json!({"x": 1}));
        assert_eq!(validate_envelope(&ok), Ok(()));
        let err = failure("norm", &CliError::Input("bad".into()));
        assert_eq!(validate_envelope(&err), Ok(()));
        let reparsed: Value = serde_json::from_str(&render(&ok)).unwrap();
        assert_eq!(reparsed, ok);
    }

    #[test]
    fn worst_status() {
        assert_eq!(Status::Ok.worst(Status::Failed), Status::Failed);
        assert_eq!(Status::StructureViolation.worst(Status::Ok), Status::StructureViolation);
    }
}
