use std::fmt::Write as _;
use std::str::FromStr;

use super::{HarnessError, SuiteReport, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(HarnessError::UnsupportedFormat(s.to_string())),
        }
    }
}

pub fn emit_report(report: &SuiteReport, format: ReportFormat) -> Result<Vec<u8>, HarnessError> {
    match format {
        ReportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(report)?;
            out.push(b'\n');
            Ok(out)
        }
        ReportFormat::Csv => csv(report),
        ReportFormat::Text => Ok(text(report).into_bytes()),
    }
}

fn csv(report: &SuiteReport) -> Result<Vec<u8>, HarnessError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["semigroup", "check", "status", "details"])?;
    let rows = report
        .violations
        .iter()
        .map(|v| (v, "violation"))
        .chain(report.informational.iter().map(|v| (v, "informational")));
    for (v, status) in rows {
        let details = if v.ideals.is_empty() {
            v.details.clone()
        } else {
            format!("[{}] {}", v.ideals.join("; "), v.details)
        };
        w.write_record([v.semigroup.as_str(), &v.check, status, &details])?;
    }
    w.into_inner().map_err(|e| HarnessError::Csv(e.into_error().into()))
}

fn witness_line(out: &mut String, w: &Witness) {
    let _ = write!(out, "  {} <{}>", w.check, w.semigroup);
    if !w.ideals.is_empty() {
        let _ = write!(out, " [{}]", w.ideals.join("; "));
    }
    let _ = writeln!(out, ": {}", w.details);
}

fn text(report: &SuiteReport) -> String {
    let mut out = String::new();
    let (lo, hi) = report.genus_range;
    let _ = writeln!(out, "suite: {}", report.suite);
    let _ = writeln!(out, "genus range: {lo}..={hi}");
    let _ = writeln!(out, "semigroups checked: {}", report.semigroups_checked);
    let _ = writeln!(out, "checks executed: {}", report.checks_executed);
    let _ = writeln!(out, "violations: {}", report.violations.len());
    for w in &report.violations {
        witness_line(&mut out, w);
    }
    let _ = writeln!(out, "informational: {}", report.informational.len());
    for w in &report.informational {
        witness_line(&mut out, w);
    }
    let _ = writeln!(out, "wall time: {} ms", report.wall_time.as_millis());
    out.push_str(if report.passed() { "PASS\n" } else { "FAIL\n" });
    out
}
