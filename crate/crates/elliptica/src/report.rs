//! Machine-readable verification reports.
//!
//! The JSON schema is fixed: {version, seed, precision_bits, entries:
//! [{name, dims, caps, trials, passes, worst_rel_err, rejections,
//! status}]} with keys in that order, so identical (command, seed,
//! precision) runs produce byte-identical files. The text format is a
//! fixed-width table of the same rows.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::registry::SuiteEntry;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

impl ReportFormat {
    pub fn parse(s: &str) -> Option<ReportFormat> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Some(ReportFormat::Text),
            "json" => Some(ReportFormat::Json),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ReportEntry {
    pub name: String,
    pub dims: String,
    pub caps: String,
    pub trials: u32,
    pub passes: u32,
    pub worst_rel_err: f64,
    pub rejections: u32,
    pub status: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Report {
    pub version: String,
    pub seed: u64,
    pub precision_bits: u32,
    pub entries: Vec<ReportEntry>,
}

impl ReportEntry {
    pub fn from_suite(e: &SuiteEntry) -> Self {
        let dims = if e.dims.m > 0 {
            format!("n={},m={}", e.dims.n, e.dims.m)
        } else {
            format!("n={}", e.dims.n)
        };
        ReportEntry {
            name: e.name.clone(),
            dims,
            caps: e.caps.display(),
            trials: e.trials,
            passes: e.passes,
            worst_rel_err: e.worst_rel_err,
            rejections: e.rejections,
            status: e.status.as_str().to_string(),
        }
    }
}

impl Report {
    pub fn new(seed: u64, precision_bits: u32, entries: Vec<ReportEntry>) -> Self {
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            precision_bits,
            entries,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status == "PASS")
    }

    pub fn any_fail(&self) -> bool {
        self.entries.iter().any(|e| e.status == "FAIL")
    }

    pub fn any_inconclusive(&self) -> bool {
        self.entries.iter().any(|e| e.status == "INCONCLUSIVE")
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serialization");
                s.push('\n');
                s
            }
            ReportFormat::Text => {
                let mut out = String::new();
                out.push_str(&format!(
                    "elliptica v{}  seed={}  precision_bits={}\n",
                    self.version, self.seed, self.precision_bits
                ));
                out.push_str(&format!(
                    "{:<44} {:>9} {:>7} {:>6}/{:<6} {:>12} {:>10}  {}\n",
                    "name", "dims", "caps", "pass", "trials", "worst_rel", "rejections", "status"
                ));
                for e in &self.entries {
                    out.push_str(&format!(
                        "{:<44} {:>9} {:>7} {:>6}/{:<6} {:>12.3e} {:>10}  {}\n",
                        e.name, e.dims, e.caps, e.passes, e.trials, e.worst_rel_err, e.rejections, e.status
                    ));
                }
                out
            }
        }
    }
}

/// Writes the rendered report to the path (or stdout when none); returns
/// the number of bytes written.
pub fn emit_report(report: &Report, format: ReportFormat, path: Option<&str>) -> Result<usize> {
    if report.entries.is_empty() {
        return Err(Error::Usage("refusing to emit an empty report".into()));
    }
    let rendered = report.render(format);
    match path {
        Some(p) => {
            std::fs::write(p, rendered.as_bytes()).map_err(|e| Error::Io(format!("{p}: {e}")))?;
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(rendered.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Error::Io(e.to_string()))?;
        }
    }
    Ok(rendered.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_report() -> Report {
        Report::new(
            7,
            53,
            vec![ReportEntry {
                name: "FT_10V9".into(),
                dims: "n=1".into(),
                caps: "3".into(),
                trials: 5,
                passes: 5,
                worst_rel_err: 2.5e-13,
                rejections: 0,
                status: "PASS".into(),
            }],
        )
    }

    #[test]
    fn json_round_trips() {
        let rep = sample_report();
        let text = rep.render(ReportFormat::Json);
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn json_key_order_is_fixed() {
        let text = sample_report().render(ReportFormat::Json);
        let v = ["\"version\"", "\"seed\"", "\"precision_bits\"", "\"entries\""];
        let mut pos = 0;
        for key in v {
            let at = text[pos..].find(key).expect(key);
            pos += at;
        }
        let inner = ["\"name\"", "\"dims\"", "\"caps\"", "\"trials\"", "\"passes\"", "\"worst_rel_err\"", "\"rejections\"", "\"status\""];
        let mut pos = 0;
        for key in inner {
            let at = text[pos..].find(key).expect(key);
            pos += at;
        }
    }

    #[test]
    fn empty_report_is_usage_error() {
        let rep = Report::new(1, 53, vec![]);
        assert!(matches!(emit_report(&rep, ReportFormat::Json, None), Err(Error::Usage(_))));
    }

    #[test]
    fn text_is_one_row_per_entry() {
        let text = sample_report().render(ReportFormat::Text);
        assert_eq!(text.lines().count(), 3);
        assert!(text.contains("PASS"));
    }
}
