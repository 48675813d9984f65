//! Check reports shared by the survey checkers, with text, CSV and JSON
//! renderings.

use std::fmt::Write as _;

use serde::Serialize;

/// Verdict of one check line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    /// A proven statement held.
    Pass,
    /// A proven statement failed: a bug or a counterexample.
    Violation,
    /// Evidence consistent with a conjecture.
    Supported,
    /// Evidence against a conjecture; a finding, not a failure.
    Refuted,
    /// Informational output.
    Info,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Violation => "VIOLATION",
            Status::Supported => "SUPPORTED",
            Status::Refuted => "REFUTED",
            Status::Info => "INFO",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckLine {
    pub n: Option<usize>,
    pub status: Status,
    pub detail: String,
    /// graph6 of the witness, when there is one.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub lines: Vec<CheckLine>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            lines: Vec::new(),
        }
    }

    pub fn push(&mut self, n: Option<usize>, status: Status, detail: impl Into<String>, witness: Option<String>) {
        self.lines.push(CheckLine {
            n,
            status,
            detail: detail.into(),
            witness,
        });
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.lines.extend(other.lines);
    }

    pub fn count(&self, status: Status) -> usize {
        self.lines.iter().filter(|l| l.status == status).count()
    }

    /// No proven statement failed.
    pub fn passed(&self) -> bool {
        self.count(Status::Violation) == 0
    }

    pub fn refuted(&self) -> bool {
        self.count(Status::Refuted) > 0
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("== {} ==\n", self.check);
        for l in &self.lines {
            let n = l.n.map(|n| format!("n={n} ")).unwrap_or_default();
            let w = l.witness.as_deref().map(|w| format!(" [{w}]")).unwrap_or_default();
            let _ = writeln!(out, "{:<9} {n}{}{w}", l.status.label(), l.detail);
        }
        let verdict = if !self.passed() {
            "VIOLATION"
        } else if self.refuted() {
            "REFUTED"
        } else {
            "OK"
        };
        let _ = writeln!(out, "-- {}: {verdict} ({} lines)", self.check, self.lines.len());
        out
    }

    pub const CSV_HEADER: &'static str = "check,n,status,detail,witness";

    pub fn csv_rows(&self) -> Vec<String> {
        self.lines
            .iter()
            .map(|l| {
                format!(
                    "{},{},{},{},{}",
                    csv_field(&self.check),
                    l.n.map(|n| n.to_string()).unwrap_or_default(),
                    l.status.label(),
                    csv_field(&l.detail),
                    csv_field(l.witness.as_deref().unwrap_or("")),
                )
            })
            .collect()
    }
}

/// Quotes a CSV field when it contains a separator, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `x` with 15 significant digits, trailing zeros kept.
pub fn sig15(x: f64) -> String {
    sig_digits(x, 15)
}

pub fn sig_digits(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i64;
    // Rounding can carry into a new decade, e.g. 9.99...95 -> 10.0.
    let decimals = |e: i64| (digits as i64 - 1 - e).max(0) as usize;
    let s = format!("{:.*}", decimals(exp), x);
    let digits_before = s.trim_start_matches('-').split('.').next().map_or(0, str::len) as i64;
    if exp >= 0 && digits_before > exp + 1 {
        format!("{:.*}", decimals(exp + 1), x)
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig15(2.618033988749895), "2.61803398874989");
        assert_eq!(sig15(259.9807826826549), "259.980782682655");
        assert_eq!(sig15(0.5), "0.500000000000000");
        assert_eq!(sig15(1.0), "1.00000000000000");
        assert_eq!(sig_digits(9.9996, 3), "10.0");
        assert_eq!(sig15(-3.0), "-3.00000000000000");
    }

    #[test]
    fn report_rendering() {
        let mut r = CheckReport::new("demo");
        r.push(Some(3), Status::Pass, "ratio 3 <= 5", Some("Bw".into()));
        r.push(None, Status::Refuted, "x, y", None);
        assert!(r.passed());
        assert!(r.refuted());
        let text = r.to_text();
        assert!(text.contains("PASS      n=3 ratio 3 <= 5 [Bw]"));
        assert!(text.contains("demo: REFUTED"));
        let rows = r.csv_rows();
        assert_eq!(rows[0], "demo,3,PASS,ratio 3 <= 5,Bw");
        assert_eq!(rows[1], "demo,,REFUTED,\"x, y\",");
        r.push(None, Status::Violation, "bad", None);
        assert!(!r.passed());
    }
}
