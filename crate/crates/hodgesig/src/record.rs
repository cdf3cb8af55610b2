//! Weil polynomial records and newline-delimited ingestion.
//!
//! Records follow the LMFDB abelian-variety export: `label`, `q`, and the
//! Frobenius polynomial as ascending coefficients under `poly` (accepted as
//! an alias of `coeffs`).

use std::io::BufRead;
use std::path::Path;

use hodgesig_core::weil::WeilPolynomial;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeilRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub q: u64,
    /// Characteristic of the base field; derived from `q` when absent.
    #[serde(default)]
    pub p: Option<u64>,
    #[serde(alias = "poly")]
    pub coeffs: Vec<i64>,
}

impl WeilRecord {
    pub fn from_weil(p: &WeilPolynomial, label: Option<String>) -> CliResult<Self> {
        let q = p.q().to_u64().ok_or_else(|| CliError::Bound("q does not fit in 64 bits".into()))?;
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| c.to_i64().ok_or_else(|| CliError::Bound(format!("coefficient {c} does not fit in 64 bits"))))
            .collect::<CliResult<Vec<i64>>>()?;
        let p = p.p().to_u64();
        Ok(WeilRecord { label, q, p, coeffs })
    }

    pub fn to_weil(&self) -> CliResult<WeilPolynomial> {
        let w = WeilPolynomial::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(self.q))?;
        if let Some(p) = self.p {
            if w.p().to_u64() != Some(p) {
                return Err(CliError::Input(format!("p = {p} does not match q = {}", self.q)));
            }
        }
        Ok(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reject {
    pub line: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestReport {
    pub records: Vec<WeilRecord>,
    pub rejects: Vec<Reject>,
}

/// Parses one record per nonblank line. Lines that fail to parse or
/// validate go to `rejects` with their 1-based line number.
pub fn ingest_reader(reader: impl BufRead) -> CliResult<IngestReport> {
    let mut out = IngestReport::default();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let n = i + 1;
        let rec: WeilRecord = match serde_json::from_str(text) {
            Ok(r) => r,
            Err(e) => {
                out.rejects.push(Reject { line: n, label: None, reason: format!("parse error: {e}") });
                continue;
            }
        };
        match rec.to_weil() {
            Ok(_) => out.records.push(rec),
            Err(e) => out.rejects.push(Reject { line: n, label: rec.label, reason: e.to_string() }),
        }
    }
    Ok(out)
}

pub fn ingest_lmfdb(path: &Path) -> CliResult<IngestReport> {
    let f = std::fs::File::open(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    ingest_reader(std::io::BufReader::new(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_and_invalid_lines() {
        let text = r#"{"label": "1.2.ac", "q": 2, "poly": [2, -2, 1]}
{"label": "bad.monic", "q": 2, "coeffs": [2, -2, 3]}

{"label": "bad.fe", "q": 3, "coeffs": [5, 1, 1]}
not json
{"label": "bad.p", "q": 4, "p": 3, "coeffs": [4, 0, 1]}
"#;
        let r = ingest_reader(text.as_bytes()).unwrap();
        assert_eq!(r.records.len(), 1);
        assert_eq!(r.records[0].label.as_deref(), Some("1.2.ac"));
        assert_eq!(r.rejects.len(), 4);
        assert_eq!(r.rejects[0].line, 2);
        assert!(r.rejects[0].reason.contains("leading coefficient"));
        assert_eq!(r.rejects[1].line, 4);
        assert!(r.rejects[1].reason.contains("index 0"));
        assert!(r.rejects[2].reason.starts_with("parse error"));
        assert!(r.rejects[3].reason.contains("does not match"));
    }
}
