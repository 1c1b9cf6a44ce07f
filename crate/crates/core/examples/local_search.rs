//! `t`-local search: repeatedly apply the first improving swap that removes
//! at most `t` solution vertices, until none exists.
//!
//! ```bash
//! cargo run --example local_search
//! ```

use starfree::generators::random_gnp;
use starfree::heuristics::{find_t_improvement, t_local_search};
use starfree::{Graph, ProblemKind, VertexSet};

fn main() -> starfree::Result<()> {
    // The three leaves dominate the claw. With t = 1 no single removal
    // works; with t = 2 two leaves are traded for the centre, after which
    // the last leaf is redundant.
    let claw = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3)])?;
    let leaves = VertexSet::from_vertices(4, [1, 2, 3])?;
    for t in 1..=3 {
        let out = t_local_search(&claw, ProblemKind::Mds, Some(&leaves), t, 10)?;
        println!("claw MDS from leaves, t = {t}: {:?}", out.solution.set());
        for step in &out.improvements {
            println!("  swap {:?}: {} -> {}", step.swap, step.before, step.after);
        }
    }

    let g = random_gnp(14, 0.25, 21)?;
    for kind in ProblemKind::ALL {
        for t in 1..=2 {
            let out = t_local_search(&g, kind, None, t, g.n() + 1)?;
            let again = find_t_improvement(&g, kind, out.solution.set(), t)?;
            println!(
                "{kind} t = {t}: value {} after {} improvements, certified {}, improvable {}",
                out.solution.value(),
                out.improvements.len(),
                out.certified_local,
                again.is_some()
            );
        }
    }
    Ok(())
}
