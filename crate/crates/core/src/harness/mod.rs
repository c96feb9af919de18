//! Config-driven verification harness.
//!
//! [`run`] executes named suites deterministically from the configured seed
//! and assembles a JSON [`Report`]; [`convergence_study`] runs a single
//! finite-difference suite over the `h_levels` ladder. The `gaugejet` binary
//! wraps both behind the command line defined in [`cli`].

pub mod cli;
pub mod config;
pub mod report;
pub mod suites;

use std::time::Instant;

use rayon::prelude::*;

use crate::error::{GaugeError, Result};

pub use config::{ConvergenceConfig, PatchConfig, SampleCounts, SuiteConfig};
pub use report::{
    Check, ConvergenceKind, ConvergenceStudy, NegativeControl, Provenance, Relation, Report,
    Status, SuiteOutcome, SuiteReport, RATIO_RANGE,
};
pub use suites::{SuiteContext, SuiteName};

/// Runs one suite and times it.
pub fn run_one(config: &SuiteConfig, suite: SuiteName) -> Result<SuiteReport> {
    let ctx = SuiteContext::new(config, suite)?;
    let start = Instant::now();
    let outcome = suites::run_suite(suite, &ctx)?;
    let ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(SuiteReport::from_outcome(
        suite.as_str(),
        suite.certifies(),
        outcome,
        ms,
    ))
}

fn run_all(config: &SuiteConfig, names: &[SuiteName]) -> Result<Vec<SuiteReport>> {
    if config.parallel {
        names.par_iter().map(|&s| run_one(config, s)).collect()
    } else {
        names.iter().map(|&s| run_one(config, s)).collect()
    }
}

fn in_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| GaugeError::Config(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// Executes the configured suites. The report is written to
/// `config.output` when set, and convergence tables to `config.csv_dir`.
pub fn run(config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let names = config.suite_names()?;
    let suites = in_pool(config.threads, || run_all(config, &names))??;
    let report = Report::new(
        Provenance {
            seed: config.seed,
            config_hash: config.hash(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        suites,
    );
    if let Some(dir) = &config.csv_dir {
        write_csv(dir, &report)?;
    }
    if let Some(path) = &config.output {
        report.save(path)?;
    }
    Ok(report)
}

/// Error-vs-h studies of one finite-difference suite.
pub fn convergence_study(config: &SuiteConfig, suite: SuiteName) -> Result<Vec<ConvergenceStudy>> {
    config.validate()?;
    if !suite.is_convergence() {
        return Err(GaugeError::Config(format!(
            "{suite} is not a finite-difference suite"
        )));
    }
    Ok(in_pool(config.threads, || run_one(config, suite))??.convergence)
}

fn write_csv(dir: &std::path::Path, report: &Report) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    for s in &report.suites {
        for study in &s.convergence {
            let name = format!("{}-{}.csv", s.name, study.label.replace(' ', "_"));
            std::fs::write(dir.join(name), study.to_csv())?;
        }
    }
    Ok(())
}
