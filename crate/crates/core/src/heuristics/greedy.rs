use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::graph::{Graph, Vertex, VertexSet};

/// Tie-breaking among minimum-degree vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    MinIndex,
    /// Uniformly random among the tied vertices, from a seeded xoshiro256++.
    Seeded(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GreedyPick {
    pub vertex: Vertex,
    /// Degree in the residual graph when the vertex was chosen.
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyTrace {
    pub picks: Vec<GreedyPick>,
    pub result: VertexSet,
}

/// Min-degree Greedy: take a vertex of minimum degree in the residual graph,
/// delete it together with its neighbors, repeat until nothing is left.
/// The result is a maximal independent set.
pub fn greedy_mis(graph: &Graph, tie_break: TieBreak) -> GreedyTrace {
    match tie_break {
        TieBreak::MinIndex => greedy_mis_by(graph, |tied| tied[0]),
        TieBreak::Seeded(seed) => {
            let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
            greedy_mis_by(graph, |tied| tied[rng.gen_range(0..tied.len())])
        }
    }
}

/// Min-degree Greedy with a caller-supplied tie-break. `choose` receives the
/// minimum-degree vertices of the residual graph in increasing order and
/// must return one of them.
pub fn greedy_mis_by<F>(graph: &Graph, mut choose: F) -> GreedyTrace
where
    F: FnMut(&[Vertex]) -> Vertex,
{
    let n = graph.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = graph.vertices().map(|v| graph.degree(v)).collect();
    let mut remaining = n;
    let mut picks = Vec::new();
    let mut result = VertexSet::empty(n);
    let mut tied = Vec::new();

    while remaining > 0 {
        let min = graph.vertices().filter(|&v| alive[v]).map(|v| degree[v]).min().unwrap();
        tied.clear();
        tied.extend(graph.vertices().filter(|&v| alive[v] && degree[v] == min));
        let v = choose(&tied);
        assert!(tied.contains(&v), "tie-break must pick one of the tied vertices");
        picks.push(GreedyPick { vertex: v, degree: min });
        result.insert(v);

        let removed: Vec<Vertex> =
            std::iter::once(v).chain(graph.neighbors(v).iter().copied().filter(|&w| alive[w])).collect();
        for &w in &removed {
            alive[w] = false;
        }
        remaining -= removed.len();
        for &w in &removed {
            for &x in graph.neighbors(w) {
                if alive[x] {
                    degree[x] -= 1;
                }
            }
        }
    }
    GreedyTrace { picks, result }
}

/// Maximal independent set built by scanning the vertices in a seeded random
/// order and keeping every vertex with no kept neighbor.
pub fn random_maximal_independent_set(graph: &Graph, seed: u64) -> VertexSet {
    let mut order: Vec<Vertex> = graph.vertices().collect();
    order.shuffle(&mut Xoshiro256PlusPlus::seed_from_u64(seed));
    let mut set = VertexSet::empty(graph.n());
    for v in order {
        if graph.neighbors(v).iter().all(|&w| !set.contains(w)) {
            set.insert(v);
        }
    }
    set
}
