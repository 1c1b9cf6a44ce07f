//! Build a graph, round-trip it through DIMACS and edge-list text, and use
//! vertex-set algebra.
//!
//! ```bash
//! cargo run --example graph_io
//! ```

use starfree::io::{parse_graph, write_graph, GraphFormat};
use starfree::{Graph, VertexSet};

fn main() -> starfree::Result<()> {
    // C5 with one chord.
    let g = Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])?;
    println!("n = {}, m = {}, max degree = {}", g.n(), g.m(), g.max_degree());

    let dimacs = write_graph(&g, GraphFormat::Dimacs);
    print!("{}", String::from_utf8_lossy(&dimacs));
    let edges = write_graph(&g, GraphFormat::EdgeList);
    assert_eq!(parse_graph(&edges, GraphFormat::EdgeList)?, parse_graph(&dimacs, GraphFormat::Dimacs)?);

    let s = VertexSet::from_vertices(5, [0, 3])?;
    let t = VertexSet::from_vertices(5, [1, 3])?;
    println!("S = {s:?}, T = {t:?}");
    println!("S xor T = {:?}", s.symmetric_difference(&t)?);
    println!("S independent: {}, dominating: {}", g.is_independent(&s)?, g.is_dominating(&s)?);
    println!("N(0) = {:?}", g.neighborhood(0)?);

    // Malformed input reports the offending line.
    let err = parse_graph(b"p edge 3 2\ne 1 2\ne 2 9\n", GraphFormat::Dimacs).unwrap_err();
    println!("rejected: {err}");
    Ok(())
}
