//! JSON output schema. Rationals are always written as reduced `"p/q"`
//! strings so consumers never go through floating point.

use focal_core::jacobi::SpectrumReport;
use focal_core::Rational;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub space: String,
    pub d: u32,
    pub n: u32,
    pub index: u64,
    pub nullity: u64,
    pub killing_nullity: u64,
    pub entries: Vec<EntryRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryRecord {
    pub levels: Vec<u32>,
    pub casimir: String,
    pub dim: u64,
    pub multiplicity: u64,
    pub class: String,
}

impl From<&SpectrumReport> for OutputRecord {
    fn from(r: &SpectrumReport) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION.to_owned(),
            space: r.space.id.slug().to_owned(),
            d: r.space.d,
            n: r.space.n,
            index: r.index,
            nullity: r.nullity,
            killing_nullity: r.killing_nullity,
            entries: r
                .entries
                .iter()
                .map(|e| EntryRecord {
                    levels: e.lambda.levels().to_vec(),
                    casimir: format_rational(e.casimir),
                    dim: e.dim,
                    multiplicity: e.multiplicity,
                    class: e.classification.as_str().to_owned(),
                })
                .collect(),
        }
    }
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

impl EntryRecord {
    pub fn casimir_value(&self) -> Result<Rational, String> {
        parse_rational(&self.casimir)
    }
}

/// `"p/q"` in lowest terms, with the denominator always present.
pub fn format_rational(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"p/q"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| format!("`{s}` is not a rational number: {e}"))
}
