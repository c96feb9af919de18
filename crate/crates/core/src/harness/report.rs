use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Result;

pub const SCHEMA: &str = "gaugejet-report/1";

/// Acceptable window for `error(h) / error(h/2)` of an O(h²) quantity.
pub const RATIO_RANGE: [f64; 2] = [3.5, 4.5];

/// Absolute part of the roundoff floor, see [`roundoff_floor`].
pub const EXACT_THRESHOLD: f64 = 1e-13;

/// Error level below which a difference-quotient result at spacing `h` is
/// indistinguishable from rounding noise: `max(1e-13, 100·ε/h²)`.
pub fn roundoff_floor(h: f64) -> f64 {
    EXACT_THRESHOLD.max(100.0 * f64::EPSILON / (h * h))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `value ≤ threshold`.
    AtMost,
    /// `value > threshold`; used by negative controls.
    Exceeds,
}

/// One measured quantity and its bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub value: f64,
    pub relation: Relation,
    pub threshold: f64,
    pub passed: bool,
}

impl Check {
    pub fn at_most(label: impl Into<String>, value: f64, threshold: f64) -> Self {
        Check {
            label: label.into(),
            value,
            relation: Relation::AtMost,
            threshold,
            passed: value <= threshold,
        }
    }

    pub fn exceeds(label: impl Into<String>, value: f64, threshold: f64) -> Self {
        Check {
            label: label.into(),
            value,
            relation: Relation::Exceeds,
            threshold,
            passed: value > threshold,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvergenceKind {
    /// All errors below the [`roundoff_floor`] of their level.
    Exact,
    /// Second-order convergence, ratios checked against [`RATIO_RANGE`].
    Ratio,
}

/// Errors of one quantity over a sequence of halving spacings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceStudy {
    pub label: String,
    pub kind: ConvergenceKind,
    pub h_levels: Vec<f64>,
    pub errors: Vec<f64>,
    pub ratios: Vec<f64>,
    pub passed: bool,
}

impl ConvergenceStudy {
    pub fn new(label: impl Into<String>, h_levels: Vec<f64>, errors: Vec<f64>) -> Self {
        let ratios: Vec<f64> = errors.windows(2).map(|w| w[0] / w[1]).collect();
        let exact = errors
            .iter()
            .zip(&h_levels)
            .all(|(e, h)| *e <= roundoff_floor(*h));
        let (kind, passed) = if exact {
            (ConvergenceKind::Exact, true)
        } else {
            let ok = ratios
                .iter()
                .all(|r| (RATIO_RANGE[0]..=RATIO_RANGE[1]).contains(r));
            (ConvergenceKind::Ratio, ok)
        };
        ConvergenceStudy {
            label: label.into(),
            kind,
            h_levels,
            errors,
            ratios: if exact { Vec::new() } else { ratios },
            passed,
        }
    }

    /// `h,error` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("h,error\n");
        for (h, e) in self.h_levels.iter().zip(&self.errors) {
            out.push_str(&format!("{h:e},{e:e}\n"));
        }
        out
    }
}

/// Closest call among the checks a negative control must fail by.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NegativeControl {
    pub label: String,
    pub violation: f64,
    pub threshold: f64,
}

/// Raw output of a suite before timing and bookkeeping.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SuiteOutcome {
    pub checks: Vec<Check>,
    pub convergence: Vec<ConvergenceStudy>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    /// The property certified by this suite.
    pub certifies: String,
    pub status: Status,
    /// Value of the binding `≤` check (largest value/threshold).
    pub max_error: f64,
    pub tolerance: f64,
    pub convergence_ratios: Vec<f64>,
    pub convergence: Vec<ConvergenceStudy>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negative_control: Option<NegativeControl>,
    pub checks: Vec<Check>,
    pub runtime_ms: f64,
}

impl SuiteReport {
    pub fn from_outcome(
        name: &str,
        certifies: &str,
        outcome: SuiteOutcome,
        runtime_ms: f64,
    ) -> Self {
        let binding = outcome
            .checks
            .iter()
            .filter(|c| c.relation == Relation::AtMost)
            .max_by(|a, b| {
                let ra = a.value / a.threshold;
                let rb = b.value / b.threshold;
                ra.total_cmp(&rb)
            });
        let (max_error, tolerance) = binding
            .map(|c| (c.value, c.threshold))
            .unwrap_or((0.0, 0.0));
        let negative_control = outcome
            .checks
            .iter()
            .filter(|c| c.relation == Relation::Exceeds)
            .min_by(|a, b| (a.value / a.threshold).total_cmp(&(b.value / b.threshold)))
            .map(|c| NegativeControl {
                label: c.label.clone(),
                violation: c.value,
                threshold: c.threshold,
            });
        let passed =
            outcome.checks.iter().all(|c| c.passed) && outcome.convergence.iter().all(|s| s.passed);
        SuiteReport {
            name: name.to_string(),
            certifies: certifies.to_string(),
            status: if passed { Status::Pass } else { Status::Fail },
            max_error,
            tolerance,
            convergence_ratios: outcome
                .convergence
                .iter()
                .flat_map(|s| s.ratios.iter().copied())
                .collect(),
            convergence: outcome.convergence,
            negative_control,
            checks: outcome.checks,
            runtime_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One-line human summary.
    pub fn line(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let mut s = format!(
            "{status} {:<28} max_error {:.3e} (tol {:.1e})",
            self.name, self.max_error, self.tolerance
        );
        if !self.convergence_ratios.is_empty() {
            let r: Vec<String> = self
                .convergence_ratios
                .iter()
                .map(|r| format!("{r:.3}"))
                .collect();
            s.push_str(&format!(" ratios [{}]", r.join(", ")));
        } else if self
            .convergence
            .iter()
            .any(|c| c.kind == ConvergenceKind::Exact)
        {
            s.push_str(" exact");
        }
        if let Some(n) = &self.negative_control {
            s.push_str(&format!(
                " control {:.3e} > {:.0e}",
                n.violation, n.threshold
            ));
        }
        s.push_str(&format!(" {:.0} ms", self.runtime_ms));
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub seed: u64,
    pub config_hash: String,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub provenance: Provenance,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn new(provenance: Provenance, suites: Vec<SuiteReport>) -> Self {
        Report {
            schema: SCHEMA.to_string(),
            passed: suites.iter().all(SuiteReport::passed),
            provenance,
            suites,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.to_json().as_bytes())?;
        f.write_all(b"\n")?;
        Ok(())
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }

    /// Same report with every runtime zeroed.
    pub fn without_runtimes(&self) -> Report {
        let mut r = self.clone();
        for s in &mut r.suites {
            s.runtime_ms = 0.0;
        }
        r
    }
}
