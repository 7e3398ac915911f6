//! The certificate file format.
//!
//! JSON, schema version 1. Rationals are canonical `"p/q"` strings, roots
//! are lists of such strings in ε-coordinates. Unknown fields and unknown
//! schema versions are rejected.

use serde::{Deserialize, Serialize};

use crate::chern::ChernReport;
use crate::ordering::OrderingMode;
use crate::pluriclosed::PluriclosedCertificate;
use crate::rational::{self, Rational};
use crate::rootsys::RootVector;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairRecord {
    pub name: String,
    pub family: String,
    pub rank: usize,
    pub painted_node: usize,
    pub dim_g: usize,
    pub dim_k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderingRecord {
    pub mode: OrderingMode,
    pub simple_roots: Vec<RootVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricEntry {
    pub root: RootVector,
    #[serde(with = "rational::serde_rational")]
    pub g: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub tool_version: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisCertificate {
    pub schema_version: u32,
    pub pair: PairRecord,
    pub ordering: OrderingRecord,
    pub metric: Vec<MetricEntry>,
    pub balanced_verdict: bool,
    pub pluriclosed_verdict: bool,
    pub chern_verdict: bool,
    pub pluriclosed_certificate: PluriclosedCertificate,
    pub chern_report: ChernReport,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    Parse(String),
    Schema(String),
}

impl FormatError {
    pub fn code(&self) -> &'static str {
        match self {
            FormatError::Parse(_) => "parse error",
            FormatError::Schema(_) => "schema mismatch",
        }
    }
}

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormatError::Parse(why) | FormatError::Schema(why) => write!(f, "{}: {why}", self.code()),
        }
    }
}

impl AnalysisCertificate {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    /// Checks the schema version before decoding the body, so a future
    /// version is reported as such rather than as a shape error.
    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| FormatError::Parse(e.to_string()))?;
        let version = value
            .get("schema_version")
            .ok_or_else(|| FormatError::Schema("missing schema_version".into()))?;
        if version.as_u64() != Some(SCHEMA_VERSION.into()) {
            return Err(FormatError::Schema(format!(
                "unsupported schema_version {version}, expected {SCHEMA_VERSION}"
            )));
        }
        serde_json::from_value(value).map_err(|e| FormatError::Parse(e.to_string()))
    }
}
