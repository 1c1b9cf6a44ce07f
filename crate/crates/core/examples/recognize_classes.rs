//! Membership tests for K_{1,r}-free and almost K_{1,r}-free graphs, with
//! the witnesses that certify non-membership.
//!
//! ```bash
//! cargo run --example recognize_classes
//! ```

use starfree::generators::{fan, line_graph, random_gnp, star_forest};
use starfree::recognition::Recognizer;
use starfree::Graph;

fn describe(name: &str, g: &Graph, r: usize, rec: &Recognizer) -> starfree::Result<()> {
    let star = rec.find_induced_star(g, r)?;
    let acf = rec.find_acf_violation(g, r)?;
    println!("{name} (r = {r})");
    match star {
        Some(w) => println!("  not K_1,{r}-free: {w}"),
        None => println!("  K_1,{r}-free"),
    }
    match acf {
        Some(v) => println!("  not almost K_1,{r}-free: {v}"),
        None => println!("  almost K_1,{r}-free, r-equivalent vertices {:?}", rec.r_equivalent_vertices(g, r)?),
    }
    Ok(())
}

fn main() -> starfree::Result<()> {
    let rec = Recognizer::default();
    let f5 = fan(5)?;
    println!(
        "fan F5: alpha(N(0)) = {}, gamma(N(0)) = {}",
        rec.local_independence_number(&f5, 0)?,
        rec.local_domination_number(&f5, 0)?
    );
    describe("fan F5", &f5, 3, &rec)?;
    describe("claw", &star_forest(1, 4)?, 3, &rec)?;
    describe("two claws", &star_forest(2, 4)?, 3, &rec)?;
    describe("line graph of G(9, 0.4)", &line_graph(&random_gnp(9, 0.4, 5)?), 3, &rec)?;
    describe("K_1,5", &star_forest(1, 6)?, 4, &rec)?;
    Ok(())
}
