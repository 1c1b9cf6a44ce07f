//! Exact solvers, the min-degree Greedy heuristic, t-local search and class
//! recognizers for dominating and independent set problems on
//! K_{1,r}-free and almost K_{1,r}-free graphs, plus an experiment harness
//! that measures approximation ratios against exact optima.
//!
//! ```
//! use starfree::{exact, generators, heuristics, recognition};
//!
//! let g = generators::star_forest(3, 4).unwrap();
//! assert!(recognition::is_star_free(&g, 4).unwrap());
//! assert_eq!(exact::max_independent_set(&g).unwrap().optimum, 9);
//! assert_eq!(exact::min_dominating_set(&g).unwrap().optimum, 3);
//! let greedy = heuristics::greedy_mis(&g, heuristics::TieBreak::MinIndex);
//! assert_eq!(greedy.result.len(), 9);
//! ```

pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod heuristics;
pub mod io;
pub mod recognition;

pub use error::{Error, Result};
pub use graph::{Graph, ProblemKind, Provenance, Sense, Solution, Vertex, VertexSet};
