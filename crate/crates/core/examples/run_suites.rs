//! Run the verification suites from a JSON config and print the report.
//!
//! Run with `cargo run --example run_suites [CONFIG]`; defaults to
//! `examples/configs/quick.json`.

use gaugejet::harness::{run, SuiteConfig};

fn main() -> gaugejet::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(env!("CARGO_MANIFEST_DIR"), "/examples/configs/quick.json").into()
    });
    let config = SuiteConfig::load(&path)?;
    let report = run(&config)?;
    for suite in &report.suites {
        println!("{}", suite.line());
    }
    println!(
        "config {} -> {}",
        config.hash(),
        if report.passed {
            "all passed"
        } else {
            "failures"
        }
    );
    Ok(())
}
