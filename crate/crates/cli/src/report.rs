//! Reports: the common output of every command, rendered as text or JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use ainf_core::{Coeff, TensorElement};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Number, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: Number,
    pub word: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    /// What the entry shows, e.g. `diagonal`, `projected`, `agreement`.
    pub kind: String,
    pub cell: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<usize>,
    pub terms: Vec<Term>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<u8>>>,
}

impl Entry {
    pub fn new(kind: &str, cell: impl ToString, terms: &TensorElement) -> Self {
        Entry {
            kind: kind.to_string(),
            cell: cell.to_string(),
            k: None,
            relation: None,
            terms: terms_of(terms),
            holds: None,
            note: None,
            matrix: None,
        }
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_relation(mut self, r: usize) -> Self {
        self.relation = Some(r);
        self
    }

    pub fn with_holds(mut self, holds: bool) -> Self {
        self.holds = Some(holds);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

pub fn terms_of(t: &TensorElement) -> Vec<Term> {
    t.iter()
        .map(|(w, c)| Term {
            coeff: coeff_number(c),
            word: w.factors().iter().map(|f| f.to_string()).collect(),
        })
        .collect()
}

fn coeff_number(c: &Coeff) -> Number {
    Number::from_str(&c.to_string()).expect("integers are valid JSON numbers")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub results: Vec<Entry>,
    pub holds: bool,
}

impl Report {
    pub fn new(command: &str, params: Map<String, Value>) -> Self {
        Report {
            command: command.to_string(),
            params,
            results: Vec::new(),
            holds: true,
        }
    }

    pub fn push(&mut self, entry: Entry) {
        if entry.holds == Some(false) {
            self.holds = false;
        }
        self.results.push(entry);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect();
        let _ = writeln!(out, "{} {}", self.command, params.join(" "));
        for e in &self.results {
            let _ = writeln!(out, "{}", entry_line(e));
            if let Some(m) = &e.matrix {
                for row in m {
                    let row: Vec<String> = row.iter().map(u8::to_string).collect();
                    let _ = writeln!(out, "  {}", row.join(" "));
                }
            }
        }
        let _ = writeln!(out, "holds: {}", self.holds);
        out
    }
}

fn render_terms(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|t| {
            let c = t.coeff.to_string();
            let (sign, abs) = match c.strip_prefix('-') {
                Some(rest) => ('-', rest.to_string()),
                None => ('+', c),
            };
            let scale = if abs == "1" { String::new() } else { format!("{abs}·") };
            format!("{sign}{scale}{}", t.word.join("⊗"))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn entry_line(e: &Entry) -> String {
    let mut line = match (e.kind.as_str(), e.k, e.relation) {
        ("agreement", Some(k), _) => format!(
            "Δ{k}({}) projected − closed form = {}",
            e.cell,
            render_terms(&e.terms)
        ),
        ("boundary", _, _) => format!("∂({}) = {}", e.cell, render_terms(&e.terms)),
        (kind, Some(k), _) if kind != "split" => {
            format!("{kind}: Δ{k}({}) = {}", e.cell, render_terms(&e.terms))
        }
        (kind, k, r) => {
            let mut s = format!("{kind} {}", e.cell);
            if let Some(k) = k {
                let _ = write!(s, " k={k}");
            }
            if let Some(r) = r {
                let _ = write!(s, " relation={r}");
            }
            if !e.terms.is_empty() {
                let _ = write!(s, " defect = {}", render_terms(&e.terms));
            }
            s
        }
    };
    if let Some(note) = &e.note {
        let _ = write!(line, " [{note}]");
    }
    if let Some(h) = e.holds {
        let label = if e.kind == "agreement" { "agreement" } else { "holds" };
        let _ = write!(line, ", {label}: {h}");
    }
    line
}
