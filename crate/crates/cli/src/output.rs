use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use essig::cone::FacetNormal;
use essig::lattice::SweepRow;
use essig::roots::{NUM_POSITIVE, RANK};
use essig::Signature;

use crate::args::Format;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub result: Value,
    pub tool_version: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureRecord {
    pub hw: [u32; RANK],
    pub p: [u32; NUM_POSITIVE],
}

impl From<&Signature> for SignatureRecord {
    fn from(s: &Signature) -> Self {
        Self { hw: s.hw.k, p: s.p }
    }
}

impl SignatureRecord {
    pub fn signature(&self) -> Signature {
        Signature::new(essig::DomWeight::new(self.hw), self.p)
    }

    pub fn csv_fields(&self) -> Vec<String> {
        self.hw.iter().chain(&self.p).map(u32::to_string).collect()
    }
}

/// Σ a_j p_j ≤ Σ b_i k_i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetRecord {
    pub a: [i64; NUM_POSITIVE],
    pub b: [i64; RANK],
}

impl From<&FacetNormal> for FacetRecord {
    fn from(f: &FacetNormal) -> Self {
        Self { a: f.a, b: f.b }
    }
}

impl FacetRecord {
    pub fn facet(&self) -> FacetNormal {
        FacetNormal { a: self.a, b: self.b }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub k1: u32,
    pub k2: u32,
    pub k3: u32,
    pub k4: u32,
    pub count: Option<u64>,
    pub weyl: String,
    pub equal: Option<bool>,
    pub elapsed_ms: u64,
    pub skipped_reason: Option<String>,
}

impl From<&SweepRow> for SweepRecord {
    fn from(r: &SweepRow) -> Self {
        let [k1, k2, k3, k4] = r.lambda.k;
        Self {
            k1,
            k2,
            k3,
            k4,
            count: r.count,
            weyl: r.weyl.clone(),
            equal: r.equal,
            elapsed_ms: r.elapsed_ms,
            skipped_reason: r.skipped_reason.clone(),
        }
    }
}

pub const SIGNATURE_HEADER: [&str; 16] =
    ["k1", "k2", "k3", "k4", "p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8", "p9", "p10", "p11", "p12"];
pub const FACET_HEADER: [&str; 16] =
    ["a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "a10", "a11", "a12", "b1", "b2", "b3", "b4"];
pub const SWEEP_HEADER: [&str; 9] = ["k1", "k2", "k3", "k4", "count", "weyl", "equal", "elapsed_ms", "skipped_reason"];

/// Process exit status of a command that produced output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Guard = 2,
    Mismatch = 3,
    Counterexample = 4,
}

/// A finished command in all three renderings.
#[derive(Clone, Debug)]
pub struct Report {
    pub envelope: OutputEnvelope,
    pub text: String,
    pub csv: Vec<Vec<String>>,
    pub csv_header: Vec<String>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str, parameters: BTreeMap<String, Value>, result: Value) -> Self {
        Self {
            envelope: OutputEnvelope {
                command: command.to_string(),
                parameters,
                result,
                tool_version: TOOL_VERSION.to_string(),
            },
            text: String::new(),
            csv: Vec::new(),
            csv_header: Vec::new(),
            status: Status::Success,
        }
    }

    pub fn render(&self, format: Format) -> anyhow::Result<String> {
        Ok(match format {
            Format::Text => {
                let mut t = self.text.clone();
                if !t.ends_with('\n') {
                    t.push('\n');
                }
                t
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.envelope)?;
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.csv_header)?;
                for row in &self.csv {
                    w.write_record(row)?;
                }
                String::from_utf8(w.into_inner()?)?
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_rendering_has_header_and_rows() {
        let mut r = Report::new("x", BTreeMap::new(), Value::Null);
        r.csv_header = vec!["a".into(), "b".into()];
        r.csv = vec![vec!["1".into(), "two, three".into()]];
        assert_eq!(r.render(Format::Csv).unwrap(), "a,b\n1,\"two, three\"\n");
    }

    #[test]
    fn envelope_round_trips() {
        let mut params = BTreeMap::new();
        params.insert("weight".to_string(), serde_json::json!([1, 0, 0, 0]));
        let r = Report::new("essential", params, serde_json::json!({"count": 8}));
        let s = r.render(Format::Json).unwrap();
        let back: OutputEnvelope = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r.envelope);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap() + "\n", s);
    }
}
