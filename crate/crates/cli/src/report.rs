//! Reports: an ordered list of key/value pairs printed either as
//! `key: value` text or as machine-readable `key=value` lines.

use std::fmt::Display;

use hopfwork::linalg::vector;
use hopfwork::{Matrix, Verdict};

use crate::ReportMode;

pub struct Report {
    command: String,
    verdict: Option<Verdict>,
    lines: Vec<(String, String)>,
    raw: Option<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            verdict: None,
            lines: Vec::new(),
            raw: None,
        }
    }

    pub fn push(&mut self, key: &str, value: impl Display) {
        self.lines.push((key.to_string(), value.to_string().replace('\n', " ")));
    }

    pub fn verdict(&mut self, v: Verdict) {
        self.verdict = Some(v);
        self.push("verdict", v);
    }

    /// Print `text` verbatim instead of key/value lines.
    pub fn raw(&mut self, text: String) {
        self.raw = Some(text);
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Some(Verdict::Inconclusive) => 2,
            _ => 0,
        }
    }

    pub fn render(&self, mode: ReportMode) -> String {
        if let Some(raw) = &self.raw {
            return raw.clone();
        }
        let mut out = String::new();
        match mode {
            ReportMode::Machine => {
                out.push_str(&format!("command={}\n", self.command));
                for (k, v) in &self.lines {
                    out.push_str(&format!("{k}={v}\n"));
                }
            }
            ReportMode::Text => {
                let width = self.lines.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
                out.push_str(&format!("{}\n", self.command));
                for (k, v) in &self.lines {
                    let pad = width - k.chars().count();
                    out.push_str(&format!("  {k}{} : {v}\n", " ".repeat(pad)));
                }
            }
        }
        out
    }
}

/// Rows of a matrix as `[(…), (…)]`.
pub fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows()).map(|i| vector::format(m.row(i))).collect();
    format!("[{}]", rows.join(", "))
}
