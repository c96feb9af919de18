use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{GaugeError, Result};
use crate::lie::{GroupFamily, GroupSpec};
use crate::patch::{Patch, DEFAULT_SPACING};

use super::suites::SuiteName;

/// Grid used by the non-convergence suites: `points` per axis (default per
/// dimension) at spacing `spacing`, centred on the origin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatchConfig {
    #[serde(default = "default_dim")]
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
    #[serde(default = "default_spacing")]
    pub spacing: f64,
}

fn default_dim() -> usize {
    2
}

fn default_spacing() -> f64 {
    DEFAULT_SPACING
}

impl Default for PatchConfig {
    fn default() -> Self {
        PatchConfig {
            dim: default_dim(),
            points: None,
            spacing: default_spacing(),
        }
    }
}

impl PatchConfig {
    pub fn build(&self) -> Result<Patch> {
        let points = match self.points {
            Some(p) => p,
            None => Patch::default_for_dim(self.dim)?.extent()[0],
        };
        Patch::centered(self.dim, points, self.spacing)
    }
}

/// Box and dimension of the finite-difference convergence studies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConvergenceConfig {
    /// Side length of the cube `[-L/2, L/2]ⁿ` shared by all levels.
    #[serde(default = "default_box")]
    pub box_length: f64,
    #[serde(default = "default_dim")]
    pub dim: usize,
}

fn default_box() -> f64 {
    0.64
}

impl Default for ConvergenceConfig {
    fn default() -> Self {
        ConvergenceConfig {
            box_length: default_box(),
            dim: default_dim(),
        }
    }
}

/// Sample counts of the randomized suites.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SampleCounts {
    /// Triples per group in `jet_group_axioms`.
    pub triples: usize,
    /// Point samples in the algebraic suites.
    pub points: usize,
    /// Random gauge-transformation fields in the action-functional suites.
    pub gauge_fields: usize,
    /// Connection-jet pairs in the level-set suites.
    pub pairs: usize,
}

impl Default for SampleCounts {
    fn default() -> Self {
        SampleCounts {
            triples: 1000,
            points: 1000,
            gauge_fields: 20,
            pairs: 100,
        }
    }
}

fn default_group() -> GroupSpec {
    GroupSpec::fundamental(GroupFamily::SU2)
}

fn default_h_levels() -> Vec<f64> {
    vec![0.04, 0.02, 0.01]
}

fn default_gauge_family() -> String {
    "product".into()
}

/// Harness configuration, read from JSON.
///
/// Tolerances override the default bound of a suite. For the
/// finite-difference suites the value is the constant `C` of the bound
/// `C·h²` at the finest level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default = "default_group")]
    pub group: GroupSpec,
    #[serde(default)]
    pub patch: PatchConfig,
    #[serde(default)]
    pub seed: u64,
    /// Suites to run; all of them when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suites: Option<Vec<String>>,
    #[serde(default = "default_h_levels")]
    pub h_levels: Vec<f64>,
    #[serde(default)]
    pub convergence: ConvergenceConfig,
    #[serde(default)]
    pub tolerances: BTreeMap<String, f64>,
    #[serde(default)]
    pub samples: SampleCounts,
    /// Named gauge family driving the convergence studies.
    #[serde(default = "default_gauge_family")]
    pub gauge_family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    /// Directory receiving `<suite>.csv` error-vs-h tables.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csv_dir: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    /// Run suites concurrently.
    #[serde(default)]
    pub parallel: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("all fields have defaults")
    }
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: SuiteConfig =
            serde_json::from_str(text).map_err(|e| GaugeError::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| GaugeError::Config(format!("{}: {e}", path.display())))?;
        SuiteConfig::from_json(&text)
    }

    pub fn validate(&self) -> Result<()> {
        self.group
            .validate()
            .map_err(|e| GaugeError::Config(e.to_string()))?;
        self.patch
            .build()
            .map_err(|e| GaugeError::Config(e.to_string()))?;
        if self.h_levels.iter().any(|h| !(h.is_finite() && *h > 0.0)) {
            return Err(GaugeError::Config("h_levels must be positive".into()));
        }
        if self.h_levels.windows(2).any(|w| w[1] >= w[0]) {
            return Err(GaugeError::Config(
                "h_levels must be strictly decreasing".into(),
            ));
        }
        for (name, tol) in &self.tolerances {
            name.parse::<SuiteName>()?;
            if !(tol.is_finite() && *tol > 0.0) {
                return Err(GaugeError::Config(format!(
                    "tolerance for {name} must be > 0"
                )));
            }
        }
        for name in self.suites.iter().flatten() {
            name.parse::<SuiteName>()?;
        }
        if self.threads == Some(0) {
            return Err(GaugeError::Config("threads must be >= 1".into()));
        }
        if !(self.convergence.box_length > 0.0) {
            return Err(GaugeError::Config(
                "convergence.box_length must be > 0".into(),
            ));
        }
        Ok(())
    }

    /// Suites in run order.
    pub fn suite_names(&self) -> Result<Vec<SuiteName>> {
        match &self.suites {
            None => Ok(SuiteName::ALL.to_vec()),
            Some(names) => names.iter().map(|n| n.parse()).collect(),
        }
    }

    pub fn tolerance_override(&self, suite: SuiteName) -> Option<f64> {
        self.tolerances.get(suite.as_str()).copied()
    }

    /// Hex SHA-256 of the canonical JSON form.
    /// SHA-256 of the settings that determine the numbers in a report.
    /// Output paths, thread count and scheduling are left out.
    pub fn hash(&self) -> String {
        let numeric = SuiteConfig {
            output: None,
            csv_dir: None,
            threads: None,
            parallel: false,
            ..self.clone()
        };
        let json = serde_json::to_string(&numeric).expect("config serializes");
        hex::encode(Sha256::digest(json.as_bytes()))
    }

    /// Seed of one suite, derived from the run seed and the suite's name.
    pub fn suite_seed(&self, suite: SuiteName) -> u64 {
        let digest = Sha256::digest(suite.as_str().as_bytes());
        let mut bytes = [0u8; 8];
        bytes.copy_from_slice(&digest[..8]);
        self.seed ^ u64::from_le_bytes(bytes)
    }
}
