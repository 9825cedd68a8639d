//! Text/JSON dual reporting for the CLI.

use serde_json::{json, Map, Value};

/// Collects one-record-per-line text output alongside a JSON object with
/// the keys `command`, `params`, `result` and `certificate`.
pub struct Report {
    lines: Vec<String>,
    object: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str, params: Value) -> Self {
        let mut object = Map::new();
        object.insert("command".into(), json!(command));
        object.insert("params".into(), params);
        object.insert("result".into(), Value::Null);
        object.insert("certificate".into(), Value::Null);
        Report { lines: vec![], object }
    }

    pub fn line(&mut self, s: String) {
        self.lines.push(s);
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.object.insert(key.into(), value);
    }

    pub fn finish(self, as_json: bool) {
        // tolerate closed pipes (e.g. piping into `head`)
        use std::io::Write;
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        if as_json {
            let _ = writeln!(out, "{}", Value::Object(self.object));
        } else {
            for l in self.lines {
                if writeln!(out, "{l}").is_err() {
                    return;
                }
            }
        }
    }
}
