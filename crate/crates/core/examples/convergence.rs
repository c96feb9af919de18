//! Error-vs-h tables of the finite-difference suites. Each halving of `h`
//! should divide the error by four.
//!
//! Run with `cargo run --example convergence`.

use gaugejet::harness::{convergence_study, SuiteConfig, SuiteName};

fn main() -> gaugejet::Result<()> {
    let config = SuiteConfig::default();
    for suite in SuiteName::ALL.into_iter().filter(|s| s.is_convergence()) {
        for study in convergence_study(&config, suite)? {
            println!("{suite} / {}", study.label);
            for (i, (h, e)) in study.h_levels.iter().zip(&study.errors).enumerate() {
                let ratio = if i == 0 {
                    String::new()
                } else {
                    format!("{:.3}", study.ratios[i - 1])
                };
                println!("  h = {h:<5} error {e:.4e} {ratio}");
            }
        }
    }
    Ok(())
}
