//! Exact `γ`, `α` and `γ₀` with lexicographically smallest witnesses.
//!
//! ```bash
//! cargo run --example exact_optima
//! ```

use starfree::exact::ExactSolver;
use starfree::generators::{fan, random_star_free, star_forest};
use starfree::{Graph, ProblemKind};

fn main() -> starfree::Result<()> {
    let solver = ExactSolver::default();
    let graphs: Vec<(String, Graph)> = vec![
        ("star_forest(3, 4)".into(), star_forest(3, 4)?),
        ("fan F5".into(), fan(5)?),
        ("double star".into(), Graph::from_edge_list(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)])?),
        ("star_free(30, 0.15, 3)".into(), random_star_free(30, 0.15, 3, 9)?),
    ];
    for (name, g) in &graphs {
        println!("{name}: n = {}, m = {}", g.n(), g.m());
        for kind in ProblemKind::ALL {
            let res = solver.solve(g, kind)?;
            println!("  {kind:<4} optimum {:>2}  witness {:?}  ({} nodes)", res.optimum, res.witness, res.explored);
        }
    }

    // Graphs above the cap are refused rather than run for hours.
    let small = ExactSolver::new(10)?;
    println!("cap 10: {}", small.max_independent_set(&star_forest(3, 4)?).unwrap_err());
    Ok(())
}
