//! Searches for K_{1,r}-free graphs where Greedy's maximal independent set
//! is far from a maximum one, and reports the largest `α / α′` found.
//!
//! ```bash
//! cargo run --release --example greedy_worst_ratio
//! ```

use starfree::exact::ExactSolver;
use starfree::harness::greedy_worst_ratio_search;
use starfree::io::{write_graph, GraphFormat};

fn main() -> starfree::Result<()> {
    let solver = ExactSolver::default();
    for r in [3, 4, 5] {
        let search = greedy_worst_ratio_search(r, 16, 200, 1, &solver)?;
        let best = search.best().expect("at least one trial");
        println!(
            "r = {r}: best alpha/alpha' = {} ({} / {}) on {} via {}, bound {}",
            best.ratio,
            best.alpha,
            best.alpha_prime,
            best.graph_id,
            best.tie_break,
            r - 1
        );
        if let Some(g) = &search.best_graph {
            print!("{}", String::from_utf8_lossy(&write_graph(g, GraphFormat::EdgeList)));
        }
    }
    Ok(())
}
