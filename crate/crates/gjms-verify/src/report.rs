//! Structured, deterministic verification reports.
//!
//! The report body is a stable function of the suite configuration and the
//! numeric results: floats are printed with a fixed format and cases keep
//! their (lexicographic) construction order, so re-running a suite — at any
//! `--jobs` level — reproduces the body byte for byte. Volatile data
//! (timestamp, wall time) lives in a separate header block.

use std::fmt::Write as _;

/// Per-suite tolerances: a relative-residual bound for identity checks and
/// a floor for inequality margins.
#[derive(Debug, Clone, Copy)]
pub struct ToleranceConfig {
    pub rel: f64,
    pub margin: f64,
}

/// Whether a suite's `check` column is a residual (want |r| ≤ rel) or an
/// inequality margin (want r ≥ −margin·scale, recorded pre-scaled).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Residual,
    Margin,
}

/// One evaluated case: named inputs, both sides of the identity or
/// inequality, the residual-or-margin, and whether it passed. Numeric
/// failures are recorded in `note` rather than aborting the suite.
#[derive(Debug, Clone)]
pub struct Case {
    pub inputs: Vec<(&'static str, f64)>,
    pub lhs: f64,
    pub rhs: f64,
    pub check: f64,
    pub pass: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub max_abs_residual: f64,
    pub min_margin: f64,
    pub wall_time_seconds: f64,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite_name: String,
    pub config_echo: String,
    pub kind: CheckKind,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

fn fmt_f(x: f64) -> String {
    format!("{x:.16e}")
}

impl VerificationReport {
    pub fn new(
        suite_name: &str,
        config_echo: String,
        kind: CheckKind,
        cases: Vec<Case>,
        wall_time_seconds: f64,
    ) -> Self {
        let total = cases.len();
        let passed = cases.iter().filter(|c| c.pass).count();
        let max_abs_residual = match kind {
            CheckKind::Residual => {
                cases.iter().map(|c| c.check.abs()).fold(0.0f64, f64::max)
            }
            CheckKind::Margin => 0.0,
        };
        let min_margin = match kind {
            CheckKind::Margin => {
                cases.iter().map(|c| c.check).fold(f64::INFINITY, f64::min)
            }
            CheckKind::Residual => f64::INFINITY,
        };
        VerificationReport {
            suite_name: suite_name.to_string(),
            config_echo,
            kind,
            cases,
            summary: Summary { total, passed, max_abs_residual, min_margin, wall_time_seconds },
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.total
    }

    /// Volatile header: everything that may differ between identical runs.
    pub fn header(&self, timestamp: &str) -> String {
        format!(
            "# suite: {}\n# timestamp: {}\n# wall_time_seconds: {:.3}\n",
            self.suite_name, timestamp, self.summary.wall_time_seconds
        )
    }

    /// Deterministic body: config echo, case table, summary.
    pub fn body(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {}", self.suite_name);
        let _ = writeln!(out, "config {}", self.config_echo);
        let check_col = match self.kind {
            CheckKind::Residual => "residual",
            CheckKind::Margin => "margin",
        };
        for c in &self.cases {
            let inputs: Vec<String> =
                c.inputs.iter().map(|(k, v)| format!("{k}={}", fmt_f(*v))).collect();
            let _ = write!(
                out,
                "case {} lhs={} rhs={} {check_col}={} {}",
                inputs.join(" "),
                fmt_f(c.lhs),
                fmt_f(c.rhs),
                fmt_f(c.check),
                if c.pass { "pass" } else { "FAIL" },
            );
            match &c.note {
                Some(note) => {
                    let _ = writeln!(out, " note={note}");
                }
                None => {
                    let _ = writeln!(out);
                }
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary total={} passed={} max_abs_residual={} min_margin={}",
            s.total,
            s.passed,
            fmt_f(s.max_abs_residual),
            fmt_f(s.min_margin),
        );
        out
    }

    /// Plot-ready table with header row `inputs..., lhs, rhs, residual`.
    pub fn csv(&self) -> String {
        let mut out = String::new();
        let names: Vec<&str> = match self.cases.first() {
            Some(c) => c.inputs.iter().map(|(k, _)| *k).collect(),
            None => vec![],
        };
        let mut header: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        header.extend(["lhs".into(), "rhs".into(), "residual".into()]);
        let _ = writeln!(out, "{}", header.join(","));
        for c in &self.cases {
            let mut row: Vec<String> = c.inputs.iter().map(|(_, v)| fmt_f(*v)).collect();
            row.extend([fmt_f(c.lhs), fmt_f(c.rhs), fmt_f(c.check)]);
            let _ = writeln!(out, "{}", row.join(","));
        }
        out
    }
}
