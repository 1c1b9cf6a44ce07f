//! Min-degree Greedy returns a maximal independent set, which serves as an
//! answer to MIS, MDS and MIDS alike. On K_{1,r}-free graphs each ratio is
//! at most `r - 1`.
//!
//! ```bash
//! cargo run --example greedy_ratios
//! ```

use starfree::exact::ExactSolver;
use starfree::generators::{fan, random_star_free};
use starfree::heuristics::{approximation_ratio, greedy_mis, TieBreak};
use starfree::ProblemKind;

fn main() -> starfree::Result<()> {
    let g = fan(5)?;
    let trace = greedy_mis(&g, TieBreak::MinIndex);
    for pick in &trace.picks {
        println!("pick {} (residual degree {})", pick.vertex, pick.degree);
    }
    println!("Greedy on F5: {:?}", trace.result);

    let solver = ExactSolver::default();
    for seed in 0..5 {
        let g = random_star_free(16, 0.3, 4, seed)?;
        let set = greedy_mis(&g, TieBreak::Seeded(seed)).result;
        let line: Vec<String> = ProblemKind::ALL
            .iter()
            .map(|&kind| {
                let opt = solver.solve(&g, kind)?.optimum;
                Ok(format!("{kind} {}/{} = {}", set.len(), opt, approximation_ratio(kind, opt, set.len())?))
            })
            .collect::<starfree::Result<_>>()?;
        println!("seed {seed}: {}  (bound 3)", line.join(", "));
    }
    Ok(())
}
