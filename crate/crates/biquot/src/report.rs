//! Uniform pass/fail reporting shared by the verification pipeline and the
//! CLI: named records with a detail string, rendered as aligned text or
//! serialized structurally.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub detail: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            records: Vec::new(),
        }
    }

    pub fn record(&mut self, name: impl Into<String>, detail: impl Into<String>, pass: bool) {
        self.records.push(CheckRecord {
            name: name.into(),
            detail: detail.into(),
            pass,
        });
    }

    /// Informational line (counted as passing).
    pub fn info(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.record(name, detail, true);
    }

    pub fn pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.title);
        let width = self
            .records
            .iter()
            .map(|r| r.name.len())
            .max()
            .unwrap_or(0);
        for r in &self.records {
            let mark = if r.pass { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  [{mark}] {:<width$}  {}", r.name, r.detail);
        }
        let failed = self.records.iter().filter(|r| !r.pass).count();
        if failed == 0 {
            let _ = writeln!(out, "  {} records, all pass", self.records.len());
        } else {
            let _ = writeln!(out, "  {} records, {failed} FAILED", self.records.len());
        }
        out
    }
}
