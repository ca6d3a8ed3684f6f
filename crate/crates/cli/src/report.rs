//! The report document and its JSON and text renderings.

use std::fmt::Write;

use dissect_core::{TripleRecord, VerificationReport};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// Output of a run. Field order is fixed and all maps are ordered, so equal
/// documents serialize to identical bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool: String,
    pub tool_version: String,
    /// SHA-256 of the input, hex.
    pub input_digest: String,
    pub reports: Vec<VerificationReport>,
    pub records: Vec<TripleRecord>,
    /// 0 when every report passed, 1 otherwise.
    pub exit_status: i32,
}

impl ReportDocument {
    pub fn new(input_digest: String) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool: "dissect".into(),
            tool_version: env!("CARGO_PKG_VERSION").into(),
            input_digest,
            reports: Vec::new(),
            records: Vec::new(),
            exit_status: 0,
        }
    }

    pub fn finish(&mut self) {
        self.exit_status = if self.reports.iter().all(|r| r.passed) { 0 } else { 1 };
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

pub fn emit(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => text(doc),
    }
}

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |out: &mut String, cells: Vec<&str>| {
        let last = cells.len() - 1;
        for (i, cell) in cells.iter().enumerate() {
            if i == last {
                out.push_str(cell);
            } else {
                let _ = write!(out, "{cell:<w$}  ", w = widths[i]);
            }
        }
        let trimmed = out.trim_end_matches(' ').len();
        out.truncate(trimmed);
        out.push('\n');
    };
    line(out, header.to_vec());
    for row in rows {
        line(out, row.iter().map(String::as_str).collect());
    }
}

fn join_map(m: &std::collections::BTreeMap<String, String>) -> String {
    m.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

fn text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} {} (schema {})  input sha256 {}",
        doc.tool, doc.tool_version, doc.schema_version, doc.input_digest
    );
    if !doc.reports.is_empty() {
        out.push('\n');
        let rows: Vec<Vec<String>> = doc
            .reports
            .iter()
            .map(|r| {
                let detail = if r.passed {
                    join_map(&r.witness)
                } else {
                    r.witness.get("reason").cloned().unwrap_or_default()
                };
                vec![
                    r.name.clone(),
                    join_map(&r.parameters),
                    if r.passed { "PASS" } else { "FAIL" }.to_string(),
                    detail,
                ]
            })
            .collect();
        table(&mut out, &["check", "parameters", "status", "detail"], &rows);
    }
    if !doc.records.is_empty() {
        out.push('\n');
        let rows: Vec<Vec<String>> = doc
            .records
            .iter()
            .map(|r| {
                vec![
                    r.algebra.clone(),
                    r.tau.clone(),
                    r.sigma.clone(),
                    format!("{:?}", r.dims),
                    r.dissecting.to_string(),
                    r.x0_type.map(|t| t.to_string()).unwrap_or_else(|| "-".into()),
                    r.class.clone().unwrap_or_else(|| "-".into()),
                ]
            })
            .collect();
        table(
            &mut out,
            &["algebra", "tau", "sigma", "dims", "dissecting", "x0_type", "class"],
            &rows,
        );
    }
    let passed = doc.reports.iter().filter(|r| r.passed).count();
    let _ = writeln!(
        out,
        "\n{passed}/{} checks passed, exit status {}",
        doc.reports.len(),
        doc.exit_status
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_is_valid() {
        let mut d = ReportDocument::new("00".into());
        d.finish();
        assert_eq!(d.exit_status, 0);
        let json = emit(&d, Format::Json);
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
        assert!(emit(&d, Format::Text).contains("0/0 checks passed"));
    }

    #[test]
    fn record_keys() {
        let r = TripleRecord {
            algebra: "so(2,3)".into(),
            tau: "r1".into(),
            sigma: "r5".into(),
            dims: [3, 3, 3, 1],
            dissecting: true,
            x0_type: Some(dissect_core::ElementType::Hyperbolic),
            class: Some("C1".into()),
        };
        let v = serde_json::to_value(&r).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut expected = vec!["algebra", "class", "dims", "dissecting", "sigma", "tau", "x0_type"];
        expected.sort();
        let mut keys: Vec<&str> = keys.into_iter().map(String::as_str).collect();
        keys.sort();
        assert_eq!(keys, expected);
        assert_eq!(v["x0_type"], "hyperbolic");
    }
}
