//! Command line of the `gaugejet` binary.
//!
//! Exit codes: 0 when every suite passes, 1 when any fails, 2 on usage,
//! configuration or I/O errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{GaugeError, Result};
use crate::patch::jgf::{FieldData, JgfFile, ValueKind};
use crate::patch::{sample_analytic, FamilyDescriptor, Sample};

use super::{run, Report, SuiteConfig, SuiteName};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gaugejet",
    version,
    about = "Jet-group gauge invariance verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Common {
    /// JSON configuration file.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Overrides the configured seed.
    #[arg(long, value_name = "N")]
    pub seed: Option<u64>,
    /// Suite to run; repeat for several. Replaces the configured list.
    #[arg(long = "suite", value_name = "NAME")]
    pub suites: Vec<String>,
    /// Output path (report JSON, or field file for `sample`).
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, value_name = "N")]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification suites and write a report.
    Run(Common),
    /// Run the finite-difference suites and print error-vs-h tables.
    Converge(Common),
    /// Sample an analytic family on the configured patch into a JGF1 file.
    Sample {
        #[command(flatten)]
        common: Common,
        /// constant, u1_plane_wave, single_generator, product, connection, matter or scalar.
        #[arg(long, default_value = "product")]
        family: String,
        /// Stored value kind, e.g. group, jet1-gauge, jet2-gauge, jet-connection.
        #[arg(long, value_name = "KIND")]
        value_kind: Option<String>,
    },
    /// Pretty-print a JGF1 field file.
    Inspect { path: PathBuf },
}

impl Common {
    /// Loads the config file (or defaults) and applies the flag overrides.
    pub fn config(&self) -> Result<SuiteConfig> {
        let mut config = match &self.config {
            Some(p) => SuiteConfig::load(p)?,
            None => SuiteConfig::default(),
        };
        if let Some(seed) = self.seed {
            config.seed = seed;
        }
        if !self.suites.is_empty() {
            config.suites = Some(self.suites.clone());
        }
        if let Some(out) = &self.out {
            config.output = Some(out.clone());
        }
        if let Some(t) = self.threads {
            config.threads = Some(t);
        }
        config.validate()?;
        Ok(config)
    }
}

/// Parses `args` (program name first) and executes the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn print_report(report: &Report, out: &mut dyn Write) -> Result<i32> {
    for s in &report.suites {
        writeln!(out, "{}", s.line())?;
    }
    let passed = report.suites.iter().filter(|s| s.passed()).count();
    writeln!(out, "{passed}/{} suites passed", report.suites.len())?;
    Ok(if report.passed { EXIT_PASS } else { EXIT_FAIL })
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Run(common) => {
            let config = common.config()?;
            let report = run(&config)?;
            print_report(&report, out)
        }
        Command::Converge(common) => {
            let mut config = common.config()?;
            let names = match &config.suites {
                Some(_) => config.suite_names()?,
                None => SuiteName::ALL
                    .into_iter()
                    .filter(|s| s.is_convergence())
                    .collect(),
            };
            if let Some(bad) = names.iter().find(|s| !s.is_convergence()) {
                return Err(GaugeError::Config(format!(
                    "{bad} is not a finite-difference suite"
                )));
            }
            config.suites = Some(names.iter().map(|s| s.to_string()).collect());
            let report = run(&config)?;
            for s in &report.suites {
                for study in &s.convergence {
                    writeln!(out, "{} / {} ({:?})", s.name, study.label, study.kind)?;
                    writeln!(out, "  {:>10} {:>14} {:>8}", "h", "error", "ratio")?;
                    for (i, (h, e)) in study.h_levels.iter().zip(&study.errors).enumerate() {
                        let ratio = match (i, study.ratios.get(i.wrapping_sub(1))) {
                            (0, _) | (_, None) => String::from("-"),
                            (_, Some(r)) => format!("{r:.3}"),
                        };
                        writeln!(out, "  {h:>10} {e:>14.6e} {ratio:>8}")?;
                    }
                }
            }
            print_report(&report, out)
        }
        Command::Sample {
            common,
            family,
            value_kind,
        } => {
            let config = common.config()?;
            let path = common
                .out
                .clone()
                .ok_or_else(|| GaugeError::Config("sample needs --out PATH".into()))?;
            let patch = config.patch.build()?;
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let descriptor = FamilyDescriptor::named(
                &family,
                config.group.family,
                config.group.rep_dim,
                patch.dim(),
                &mut rng,
            )?;
            let sample = sample_analytic(
                &patch,
                config.group.family,
                config.group.rep_dim,
                &descriptor,
            )?;
            let kind = value_kind.map(|k| k.parse::<ValueKind>()).transpose()?;
            let data = select(sample, kind)?;
            let file = data.encode(config.group)?;
            file.save(&path)?;
            write!(out, "{}", file.summary())?;
            writeln!(out, "wrote {}", path.display())?;
            Ok(EXIT_PASS)
        }
        Command::Inspect { path } => {
            let file = JgfFile::load(&path)?;
            FieldData::decode(&file)?;
            write!(out, "{}", file.summary())?;
            Ok(EXIT_PASS)
        }
    }
}

fn select(sample: Sample, kind: Option<ValueKind>) -> Result<FieldData> {
    let mismatch = |k: ValueKind| {
        GaugeError::Config(format!("value kind {k} does not fit the sampled family"))
    };
    Ok(match (sample, kind) {
        (Sample::Gauge(g), None | Some(ValueKind::Group)) => FieldData::Group(g.field),
        (Sample::Gauge(g), Some(ValueKind::Jet1Gauge)) => FieldData::Jet1Gauge(g.jet1().field),
        (Sample::Gauge(g), Some(ValueKind::Jet2Gauge)) => FieldData::Jet2Gauge(g.jets),
        (Sample::Connection(c), None | Some(ValueKind::Connection)) => {
            FieldData::Connection(c.field)
        }
        (Sample::Connection(c), Some(ValueKind::JetConnection)) => FieldData::JetConnection(c.jets),
        (Sample::Matter(m), None | Some(ValueKind::RepVector)) => FieldData::RepVector(m.field),
        (Sample::Matter(m), Some(ValueKind::JetMatter)) => FieldData::JetMatter(m.jets),
        (Sample::Scalar(s), None | Some(ValueKind::Scalar)) => FieldData::Scalar(s),
        (_, Some(k)) => return Err(mismatch(k)),
    })
}
