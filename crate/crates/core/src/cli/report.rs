//! Structured command output with a stable JSON form and a plain-text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub setup: Option<SetupInfo>,
    pub results: Vec<Entry>,
    pub caveats: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetupInfo {
    pub p: u64,
    pub vars: Vec<String>,
    pub mode: String,
    pub u: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
    pub order: String,
}

/// One line item of a report: a verdict about a labelled object.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub label: String,
    pub verdict: String,
    /// Height of the ideal's image in the quotient; "unit" for `R`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height: Option<String>,
    /// Reduced monic Gröbner basis in the ambient order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    /// Generators as supplied.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
}

impl Entry {
    pub fn new(label: impl Into<String>, verdict: impl Into<String>) -> Self {
        Entry { label: label.into(), verdict: verdict.into(), ..Default::default() }
    }

    pub fn basis(mut self, basis: Vec<String>) -> Self {
        self.basis = Some(basis);
        self
    }

    pub fn generators(mut self, gens: Vec<String>) -> Self {
        self.generators = Some(gens);
        self
    }

    pub fn height(mut self, h: impl Into<String>) -> Self {
        self.height = Some(h.into());
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.details.push(d.into());
        self
    }
}

fn tuple(items: &[String]) -> String {
    format!("({})", items.join(", "))
}

impl Report {
    pub fn new(command: &str, setup: Option<SetupInfo>) -> Self {
        Report { command: command.to_string(), setup, results: Vec::new(), caveats: Vec::new() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(s) = &self.setup {
            let _ = writeln!(out, "ring: F_{}[{}] ({})", s.p, s.vars.join(", "), s.order);
            let _ = writeln!(out, "mode: {}", s.mode);
            let _ = writeln!(out, "u: {}", tuple(&s.u));
            if let Some(eps) = &s.epsilon {
                let _ = writeln!(out, "epsilon: {eps}");
            }
        }
        if self.command == "enumerate" {
            let _ = writeln!(out, "*** pool-relative lower bound: members not reachable from the pool may exist ***");
        }
        let _ = writeln!(out, "results:");
        if self.results.is_empty() {
            let _ = writeln!(out, "  (none)");
        }
        for e in &self.results {
            let _ = write!(out, "  {}: {}", e.label, e.verdict);
            if let Some(h) = &e.height {
                let _ = write!(out, "  [height {h}]");
            }
            out.push('\n');
            if let Some(b) = &e.basis {
                let _ = writeln!(out, "    basis: {}", tuple(b));
            }
            if let Some(g) = &e.generators {
                let _ = writeln!(out, "    generators: {}", tuple(g));
            }
            for d in &e.details {
                let _ = writeln!(out, "    {d}");
            }
        }
        if !self.caveats.is_empty() {
            let _ = writeln!(out, "caveats:");
            for c in &self.caveats {
                let _ = writeln!(out, "  - {c}");
            }
        }
        out
    }
}
