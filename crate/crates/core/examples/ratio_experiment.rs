//! Runs the ratio experiment described by `examples/ratio.toml` and prints
//! the CSV report followed by a per-(problem, r, method) summary.
//!
//! ```bash
//! cargo run --release --example ratio_experiment
//! cargo run --release --example ratio_experiment -- path/to/config.toml
//! ```

use starfree::harness::{run_ratio_experiment, ExperimentConfig};

fn main() -> starfree::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ratio.toml").to_string());
    let config = ExperimentConfig::from_file(&path)?;
    let report = run_ratio_experiment(&config)?;
    print!("{}", String::from_utf8_lossy(&report.to_csv()?));

    eprintln!("{} rows, {} skipped", report.rows.len(), report.skipped.len());
    for s in report.summary() {
        eprintln!(
            "{:<4} r={} {:<8} n={:<3} max {:<5} mean {:.4}",
            s.problem, s.r, s.method, s.instances, s.max_ratio, s.mean_ratio
        );
    }
    Ok(())
}
