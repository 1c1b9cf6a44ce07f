//! The min-degree Greedy maximal independent set algorithm, approximation
//! ratios, and t-local search.

mod greedy;
mod local;
mod ratio;

pub use greedy::{greedy_mis, greedy_mis_by, random_maximal_independent_set, GreedyPick, GreedyTrace, TieBreak};
pub use local::{default_initial_solution, find_t_improvement, t_local_search, Improvement, LocalSearchOutcome};
pub use ratio::{approximation_ratio, ratio_to_f64, ExactRatio};
