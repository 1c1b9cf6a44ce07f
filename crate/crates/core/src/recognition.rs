//! Membership tests for K_{1,r}-free graphs and almost K_{1,r}-free graphs.
//!
//! A graph contains an induced K_{1,r} exactly when some neighborhood
//! `G_v = G[N(v)]` has an independent set of size `r`, so both classes are
//! decided from the exact independence and domination numbers of the
//! neighborhoods.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::ExactSolver;
use crate::graph::{Graph, Vertex, VertexSet};

/// An induced K_{1,r}: `center` adjacent to each of the pairwise
/// non-adjacent `leaves`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarWitness {
    pub center: Vertex,
    pub leaves: Vec<Vertex>,
}

impl StarWitness {
    /// Re-checks the witness against `graph`.
    pub fn is_valid(&self, graph: &Graph) -> bool {
        let in_range = self.center < graph.n() && self.leaves.iter().all(|&l| l < graph.n());
        in_range
            && self.leaves.iter().all(|&l| l != self.center && graph.adjacent(self.center, l))
            && self
                .leaves
                .iter()
                .enumerate()
                .all(|(i, &a)| self.leaves[i + 1..].iter().all(|&b| a != b && !graph.adjacent(a, b)))
    }
}

impl fmt::Display for StarWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "induced K_1,{} centred at {} with leaves {:?}", self.leaves.len(), self.center, self.leaves)
    }
}

/// Why a graph is not almost K_{1,r}-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AcfViolation {
    /// Two adjacent vertices whose neighborhoods both have independence
    /// number above `r - 1`.
    EquivalentPairAdjacent(Vertex, Vertex),
    /// A vertex whose neighborhood has domination number above `r - 1`.
    NeighborhoodDominationTooLarge { vertex: Vertex, domination: usize },
}

impl AcfViolation {
    /// Re-checks the violation against `graph` and `r`.
    pub fn is_valid(&self, graph: &Graph, r: usize) -> Result<bool> {
        let recognizer = Recognizer::default();
        Ok(match *self {
            AcfViolation::EquivalentPairAdjacent(u, v) => {
                graph.adjacent(u, v)
                    && recognizer.local_independence_number(graph, u)? > r - 1
                    && recognizer.local_independence_number(graph, v)? > r - 1
            }
            AcfViolation::NeighborhoodDominationTooLarge { vertex, domination } => {
                domination > r - 1 && recognizer.local_domination_number(graph, vertex)? == domination
            }
        })
    }
}

impl fmt::Display for AcfViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AcfViolation::EquivalentPairAdjacent(u, v) => {
                write!(f, "r-equivalent vertices {u} and {v} are adjacent")
            }
            AcfViolation::NeighborhoodDominationTooLarge { vertex, domination } => {
                write!(f, "neighborhood of vertex {vertex} has domination number {domination}")
            }
        }
    }
}

/// Class recognizer; the solver cap bounds the neighborhood sizes it can
/// handle.
#[derive(Clone, Copy, Debug, Default)]
pub struct Recognizer {
    solver: ExactSolver,
}

impl Recognizer {
    pub fn new(solver: ExactSolver) -> Self {
        Self { solver }
    }

    fn neighborhood_graph(&self, graph: &Graph, v: Vertex) -> Result<(Graph, Vec<Vertex>)> {
        let nbhd = graph.neighborhood(v)?;
        graph.induced_subgraph(&nbhd)
    }

    /// `α(G_v)`.
    pub fn local_independence_number(&self, graph: &Graph, v: Vertex) -> Result<usize> {
        let (sub, _) = self.neighborhood_graph(graph, v)?;
        Ok(self.solver.max_independent_set(&sub)?.optimum)
    }

    /// `γ(G_v)`.
    pub fn local_domination_number(&self, graph: &Graph, v: Vertex) -> Result<usize> {
        let (sub, _) = self.neighborhood_graph(graph, v)?;
        Ok(self.solver.min_dominating_set(&sub)?.optimum)
    }

    /// The first induced K_{1,r} in vertex order of the centre, with the
    /// lexicographically smallest leaf set, or `None` if `graph` is
    /// K_{1,r}-free.
    pub fn find_induced_star(&self, graph: &Graph, r: usize) -> Result<Option<StarWitness>> {
        if r < 2 {
            return Err(Error::InvalidParameter(format!("star size r must be at least 2, got {r}")));
        }
        for v in graph.vertices() {
            if graph.degree(v) < r {
                continue;
            }
            let (sub, map) = self.neighborhood_graph(graph, v)?;
            if let Some(leaves) = self.solver.lex_first_independent_set(&sub, r)? {
                return Ok(Some(StarWitness { center: v, leaves: leaves.iter().map(|i| map[i]).collect() }));
            }
        }
        Ok(None)
    }

    pub fn is_star_free(&self, graph: &Graph, r: usize) -> Result<bool> {
        Ok(self.find_induced_star(graph, r)?.is_none())
    }

    /// `{v : α(G_v) > r - 1}`: the vertices that can take part in an
    /// r-equivalent pair.
    pub fn r_equivalent_vertices(&self, graph: &Graph, r: usize) -> Result<VertexSet> {
        check_acf_r(r)?;
        let mut set = VertexSet::empty(graph.n());
        for v in graph.vertices() {
            if graph.degree(v) >= r && self.local_independence_number(graph, v)? > r - 1 {
                set.insert(v);
            }
        }
        Ok(set)
    }

    /// First violated clause of the almost-K_{1,r}-free definition, or
    /// `None` if `graph` belongs to the class. The independence clause is
    /// checked first, over pairs in lexicographic order; then the
    /// neighborhood domination clause in vertex order.
    pub fn find_acf_violation(&self, graph: &Graph, r: usize) -> Result<Option<AcfViolation>> {
        let equivalent = self.r_equivalent_vertices(graph, r)?;
        for u in equivalent.iter() {
            if let Some(&v) = graph.neighbors(u).iter().find(|&&v| v > u && equivalent.contains(v)) {
                return Ok(Some(AcfViolation::EquivalentPairAdjacent(u, v)));
            }
        }
        for v in graph.vertices() {
            // γ(G_v) <= |N(v)|, so low-degree vertices cannot violate.
            if graph.degree(v) < r {
                continue;
            }
            let domination = self.local_domination_number(graph, v)?;
            if domination > r - 1 {
                return Ok(Some(AcfViolation::NeighborhoodDominationTooLarge { vertex: v, domination }));
            }
        }
        Ok(None)
    }

    pub fn is_almost_star_free(&self, graph: &Graph, r: usize) -> Result<bool> {
        Ok(self.find_acf_violation(graph, r)?.is_none())
    }
}

fn check_acf_r(r: usize) -> Result<()> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!("r must be at least 3, got {r}")));
    }
    Ok(())
}

pub fn local_independence_number(graph: &Graph, v: Vertex) -> Result<usize> {
    Recognizer::default().local_independence_number(graph, v)
}

pub fn find_induced_star(graph: &Graph, r: usize) -> Result<Option<StarWitness>> {
    Recognizer::default().find_induced_star(graph, r)
}

pub fn is_star_free(graph: &Graph, r: usize) -> Result<bool> {
    Recognizer::default().is_star_free(graph, r)
}

pub fn r_equivalent_vertices(graph: &Graph, r: usize) -> Result<VertexSet> {
    Recognizer::default().r_equivalent_vertices(graph, r)
}

pub fn find_acf_violation(graph: &Graph, r: usize) -> Result<Option<AcfViolation>> {
    Recognizer::default().find_acf_violation(graph, r)
}

pub fn is_almost_star_free(graph: &Graph, r: usize) -> Result<bool> {
    Recognizer::default().is_almost_star_free(graph, r)
}
