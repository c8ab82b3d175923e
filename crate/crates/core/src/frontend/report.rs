use std::fmt::Write as _;

use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskFailure {
    /// Error variant name.
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug)]
pub struct TaskReport {
    pub index: usize,
    pub task: String,
    pub line: u32,
    pub inputs: Value,
    pub outcome: Result<Value, TaskFailure>,
    pub caveats: Vec<String>,
    pub timing_ms: u64,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub conductor: u32,
    pub tasks: Vec<TaskReport>,
}

impl Report {
    /// 0 when every task succeeded, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.tasks.iter().all(|t| t.outcome.is_ok()) {
            0
        } else {
            2
        }
    }

    pub fn result(&self, index: usize) -> Option<&Value> {
        self.tasks.get(index)?.outcome.as_ref().ok()
    }

    pub fn to_json(&self, with_timing: bool) -> Value {
        let tasks: Vec<Value> = self
            .tasks
            .iter()
            .map(|t| {
                let mut m = Map::new();
                m.insert("index".into(), json!(t.index));
                m.insert("task".into(), json!(t.task));
                m.insert("line".into(), json!(t.line));
                m.insert("inputs".into(), t.inputs.clone());
                match &t.outcome {
                    Ok(v) => {
                        m.insert("status".into(), json!("ok"));
                        m.insert("result".into(), v.clone());
                    }
                    Err(f) => {
                        m.insert("status".into(), json!("error"));
                        m.insert("error".into(), json!({"kind": f.kind, "message": f.message}));
                    }
                }
                m.insert("caveats".into(), json!(t.caveats));
                if with_timing {
                    m.insert("timing_ms".into(), json!(t.timing_ms));
                }
                Value::Object(m)
            })
            .collect();
        json!({
            "schema": SCHEMA_VERSION,
            "generator": format!("pertinax {}", env!("CARGO_PKG_VERSION")),
            "conductor": self.conductor,
            "tasks": tasks,
        })
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json_string(&self, with_timing: bool) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json(with_timing)).unwrap();
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for t in &self.tasks {
            let _ = writeln!(
                out,
                "[{}] {} (line {}) {}  {} ms",
                t.index,
                t.task,
                t.line,
                compact(&t.inputs),
                t.timing_ms
            );
            match &t.outcome {
                Ok(Value::Object(m)) => {
                    for (k, v) in m {
                        let _ = writeln!(out, "    {k}: {}", compact(v));
                    }
                }
                Ok(v) => {
                    let _ = writeln!(out, "    {}", compact(v));
                }
                Err(f) => {
                    let _ = writeln!(out, "    error {}: {}", f.kind, f.message);
                }
            }
            for c in &t.caveats {
                let _ = writeln!(out, "    note: {c}");
            }
        }
        if self.tasks.is_empty() {
            out.push_str("no tasks\n");
        }
        out
    }
}

/// Short human form: number arrays become space-separated lists.
fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.iter().all(|x| x.is_number()) => {
            xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        }
        Value::Array(xs) if xs.iter().all(|x| x.is_string()) => {
            xs.iter().map(|x| x.as_str().unwrap().to_string()).collect::<Vec<_>>().join(", ")
        }
        _ => v.to_string(),
    }
}
