use serde::{Deserialize, Serialize};

use pwt_core::opext::Check;

/// JSON written by `--json`. Field order is fixed and maps inside
/// `results` are sorted, so identical runs give identical bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub algebra_digest: String,
    pub field: String,
    pub seed: u64,
    pub syzygy_cap: usize,
    pub dim_bound: usize,
    pub results: serde_json::Value,
    pub checks: Vec<Check>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// Variant name of a library error, e.g. `NotSourceExtension`.
pub fn error_kind(e: &pwt_core::Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
}
