//! Checks the two-sided bounds between `α`, `γ`, `γ₀` and the size `α′` of a
//! maximal independent set on K_{1,r}-free graphs.
//!
//! ```bash
//! cargo run --example inequality_check
//! ```

use starfree::exact::ExactSolver;
use starfree::generators::{fan, random_star_free};
use starfree::harness::{verify_inequalities, verify_inequalities_with};
use starfree::heuristics::random_maximal_independent_set;

fn main() -> starfree::Result<()> {
    let solver = ExactSolver::default();
    let g = random_star_free(15, 0.2, 3, 4)?;
    let rec = verify_inequalities(&g, 3, &solver)?;
    println!("alpha {} gamma {} gamma0 {} alpha' {}", rec.alpha, rec.gamma, rec.gamma0, rec.alpha_prime);
    for check in &rec.checks {
        println!("  {:<28} {}", check.name, if check.holds { "holds" } else { "FAILS" });
    }

    for seed in 0..3 {
        let set = random_maximal_independent_set(&g, seed);
        let rec = verify_inequalities_with(&g, 3, &solver, &set)?;
        println!("random maximal set {:?}: all hold = {}", set, rec.all_hold());
    }

    // F5 contains an induced claw, so the check refuses it.
    println!("F5: {}", verify_inequalities(&fan(5)?, 3, &solver).unwrap_err());
    Ok(())
}
