//! Experiment engine: batch ratio experiments, the inequality
//! checks, and the Greedy worst-ratio search.

mod config;
mod experiment;
mod inequalities;
mod worst;

pub use config::{ExperimentConfig, GeneratorEntry, Method};
pub use experiment::{
    run_ratio_experiment, run_ratio_experiment_on, BoundViolation, Instance, RatioReport, RatioRow, RunSettings,
    Skipped, SummaryRow, CSV_HEADER, CSV_SCHEMA_VERSION,
};
pub use inequalities::{verify_inequalities, verify_inequalities_with, InequalityCheck, InequalityRecord};
pub use worst::{greedy_worst_ratio_search, WorstRatioObservation, WorstRatioSearch};
