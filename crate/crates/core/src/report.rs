//! Serializable verification reports.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::law::LawReport;
use crate::linear::LinearMap;
use crate::scalar::Scalar;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub indices: Vec<usize>,
    #[serde(default)]
    pub labels: Vec<String>,
    pub component: String,
    /// Canonical scalar printout.
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LawResult {
    pub law: String,
    pub holds: bool,
    pub witnesses: Vec<WitnessRecord>,
    pub skipped: usize,
    #[serde(default)]
    pub checked: usize,
    #[serde(default)]
    pub failures: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Shown but excluded from the verdict.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
    /// Computed objects such as an antipode matrix or a primitive basis.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
}

impl From<&LawReport> for LawResult {
    fn from(r: &LawReport) -> Self {
        LawResult {
            law: r.law.clone(),
            holds: r.holds,
            witnesses: r
                .witnesses
                .iter()
                .map(|w| WitnessRecord { indices: w.indices.clone(), labels: w.labels.clone(), component: w.component.clone(), value: w.value.to_string() })
                .collect(),
            skipped: r.skipped,
            checked: r.checked,
            failures: r.failures,
            notes: r.notes.clone(),
            informational: false,
            data: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    /// SHA-256 of the input bytes, hex encoded.
    pub input: String,
    pub results: Vec<LawResult>,
    pub ms: u64,
}

pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn matrix_strings(m: &LinearMap) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect()).collect()
}

pub fn vector_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

impl Report {
    pub fn new(input: &[u8]) -> Self {
        Report { version: VERSION.to_string(), input: digest(input), results: Vec::new(), ms: 0 }
    }

    pub fn push(&mut self, r: &LawReport) {
        self.results.push(r.into());
    }

    pub fn push_with(&mut self, r: &LawReport, data: serde_json::Value) {
        let mut x: LawResult = r.into();
        x.data = Some(data);
        self.results.push(x);
    }

    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }

    /// Every non-informational result holds.
    pub fn verdict(&self) -> bool {
        self.results.iter().filter(|r| !r.informational).all(|r| r.holds)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("homalg {} input {}\n", self.version, &self.input[..self.input.len().min(16)]);
        for r in &self.results {
            let verdict = match (r.holds, r.informational) {
                (true, false) => "HOLDS",
                (false, false) => "FAILS",
                (true, true) => "holds (info)",
                (false, true) => "fails (info)",
            };
            out.push_str(&format!("{:<32} {verdict}  checked {} failures {} skipped {}\n", r.law, r.checked, r.failures, r.skipped));
            for n in &r.notes {
                out.push_str(&format!("    note: {n}\n"));
            }
            for w in &r.witnesses {
                out.push_str(&format!("    ({}) {}: {}\n", w.labels.join(", "), w.component, w.value));
            }
            if r.failures > r.witnesses.len() {
                out.push_str(&format!("    ... {} more\n", r.failures - r.witnesses.len()));
            }
            if let Some(d) = &r.data {
                for line in serde_json::to_string_pretty(d).expect("values serialize").lines() {
                    out.push_str(&format!("    {line}\n"));
                }
            }
        }
        out.push_str(&format!("{} ms\n", self.ms));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::law::Witness;

    #[test]
    fn json_round_trips() {
        let mut r = LawReport::new("hom-assoc");
        r.push(Witness { indices: vec![0, 0, 2], labels: vec!["x1".into(), "x1".into(), "x3".into()], component: "x3".into(), value: Scalar::ratio(-3, 4) });
        let mut rep = Report::new(b"input");
        rep.push_with(&r, serde_json::json!({ "k": ["1", "2"] }));
        rep.push(&LawReport::new("unital"));
        let back = Report::from_json(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
        assert_eq!(back.results[0].witnesses[0].value, "-3/4");
        assert!(!rep.all_hold());
    }
}
