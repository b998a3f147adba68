//! Problem-file ingestion (JSON with string rationals) and the result
//! document emitted by the CLI.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::rational::{fmt_rat, parse_rat, Rat};
use crate::toric::ProblemSpec;

/// On-disk problem description. Rationals travel as strings ("-3/2") so no
/// float ever touches the pipeline.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ProblemFile {
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    pub beta: Vec<String>,
    pub w: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(rename = "K")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<ProblemFile> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_spec(&self) -> Result<ProblemSpec> {
        let beta: Vec<Rat> = self.beta.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?;
        ProblemSpec::new(self.a.clone(), beta, self.w.clone())
    }

    pub fn from_spec(spec: &ProblemSpec, k: Option<i64>) -> ProblemFile {
        ProblemFile {
            a: spec.a.clone(),
            beta: spec.beta.iter().map(fmt_rat).collect(),
            w: spec.w.clone(),
            k,
            format: None,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, Default, PartialEq)]
pub struct Diagnostics {
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub genericity: Vec<String>,
    /// Populated only on request; omitted by default so identical inputs
    /// produce byte-identical documents.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

/// Canonical CLI output: echo of the input, the requested computation, the
/// payload, and diagnostics.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ResultDocument {
    pub version: String,
    pub command: String,
    pub input: ProblemFile,
    pub result: serde_json::Value,
    pub diagnostics: Diagnostics,
}

impl ResultDocument {
    pub fn new(command: &str, input: ProblemFile, result: serde_json::Value) -> ResultDocument {
        ResultDocument {
            version: "1".into(),
            command: command.into(),
            input,
            result,
            diagnostics: Diagnostics::default(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}
