//! Exact solvers for the independence number `α`, the domination number `γ`
//! and the independent domination number `γ₀` on small graphs.
//!
//! All solvers work on 64-bit adjacency masks, so the configurable cap can
//! never exceed 64 vertices. Optimal witnesses are the lexicographically
//! smallest optimal vertex sets (compared as increasing sequences).

use crate::error::{Error, Result};
use crate::graph::{Graph, ProblemKind, VertexSet};

/// Default largest graph the exact solvers accept.
pub const DEFAULT_SOLVER_CAP: usize = 40;

/// Hard limit imposed by the word-sized masks.
pub const MAX_SOLVER_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub problem: ProblemKind,
    pub optimum: usize,
    pub witness: VertexSet,
    /// Search nodes visited, for diagnostics only.
    pub explored: u64,
}

/// Exact solver with a vertex-count cap. Graphs above the cap are refused
/// with [`Error::SolverCap`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactSolver {
    cap: usize,
}

impl Default for ExactSolver {
    fn default() -> Self {
        Self { cap: DEFAULT_SOLVER_CAP }
    }
}

impl ExactSolver {
    pub fn new(cap: usize) -> Result<Self> {
        if cap > MAX_SOLVER_CAP {
            return Err(Error::InvalidParameter(format!(
                "solver cap {cap} exceeds the supported maximum of {MAX_SOLVER_CAP}"
            )));
        }
        Ok(Self { cap })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn masks(&self, graph: &Graph) -> Result<Masks> {
        if graph.n() > self.cap {
            return Err(Error::SolverCap { n: graph.n(), cap: self.cap });
        }
        Ok(Masks::new(graph))
    }

    pub fn solve(&self, graph: &Graph, problem: ProblemKind) -> Result<ExactResult> {
        match problem {
            ProblemKind::Mis => self.max_independent_set(graph),
            ProblemKind::Mds => self.min_dominating_set(graph),
            ProblemKind::Mids => self.min_independent_dominating_set(graph),
        }
    }

    /// `α(G)` with the lexicographically smallest maximum independent set.
    pub fn max_independent_set(&self, graph: &Graph) -> Result<ExactResult> {
        let masks = self.masks(graph)?;
        let mut explored = 0;
        let all = masks.all();
        let optimum = masks.independence_number(all, &mut explored);
        let witness = masks
            .lex_first_independent_set(all, optimum, &mut explored)
            .expect("an independent set of size alpha exists");
        Ok(ExactResult { problem: ProblemKind::Mis, optimum, witness: masks.to_set(witness), explored })
    }

    /// `γ(G)` with the lexicographically smallest minimum dominating set.
    pub fn min_dominating_set(&self, graph: &Graph) -> Result<ExactResult> {
        let masks = self.masks(graph)?;
        Ok(masks.min_dominating(false, ProblemKind::Mds))
    }

    /// `γ₀(G)` with the lexicographically smallest minimum independent
    /// dominating set.
    pub fn min_independent_dominating_set(&self, graph: &Graph) -> Result<ExactResult> {
        let masks = self.masks(graph)?;
        Ok(masks.min_dominating(true, ProblemKind::Mids))
    }

    /// Lexicographically first independent set of exactly `k` vertices, if
    /// one exists. Used for deterministic star witnesses.
    pub fn lex_first_independent_set(&self, graph: &Graph, k: usize) -> Result<Option<VertexSet>> {
        let masks = self.masks(graph)?;
        let mut explored = 0;
        Ok(masks.lex_first_independent_set(masks.all(), k, &mut explored).map(|m| masks.to_set(m)))
    }
}

pub fn max_independent_set(graph: &Graph) -> Result<ExactResult> {
    ExactSolver::default().max_independent_set(graph)
}

pub fn min_dominating_set(graph: &Graph) -> Result<ExactResult> {
    ExactSolver::default().min_dominating_set(graph)
}

pub fn min_independent_dominating_set(graph: &Graph) -> Result<ExactResult> {
    ExactSolver::default().min_independent_dominating_set(graph)
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Vertices with index strictly greater than `v`.
fn above(v: usize) -> u64 {
    u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0)
}

/// Vertices with index at least `v`.
fn from(v: usize) -> u64 {
    u64::MAX.checked_shl(v as u32).unwrap_or(0)
}

fn lowest(mask: u64) -> usize {
    mask.trailing_zeros() as usize
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = lowest(mask);
            mask &= mask - 1;
            Some(v)
        }
    })
}

struct Masks {
    n: usize,
    open: Vec<u64>,
    closed: Vec<u64>,
}

impl Masks {
    fn new(graph: &Graph) -> Self {
        let open: Vec<u64> =
            graph.vertices().map(|v| graph.neighbors(v).iter().fold(0, |acc, &w| acc | bit(w))).collect();
        let closed = open.iter().enumerate().map(|(v, &m)| m | bit(v)).collect();
        Self { n: graph.n(), open, closed }
    }

    fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    fn to_set(&self, mask: u64) -> VertexSet {
        VertexSet::from_vertices(self.n, bits(mask)).expect("mask within universe")
    }

    /// Size of a greedy clique partition of `avail`; an upper bound on the
    /// independence number of the subgraph it induces.
    fn clique_cover_bound(&self, mut avail: u64) -> usize {
        let mut cliques = 0;
        while avail != 0 {
            let u = lowest(avail);
            avail &= !bit(u);
            let mut candidates = avail & self.open[u];
            while candidates != 0 {
                let w = lowest(candidates);
                avail &= !bit(w);
                candidates &= self.open[w];
            }
            cliques += 1;
        }
        cliques
    }

    fn independence_number(&self, avail: u64, explored: &mut u64) -> usize {
        let mut best = 0;
        self.mis_branch(avail, 0, &mut best, explored);
        best
    }

    fn mis_branch(&self, mut avail: u64, mut size: usize, best: &mut usize, explored: &mut u64) {
        *explored += 1;
        // Vertices of residual degree <= 1 belong to some maximum independent set.
        loop {
            let Some(v) = bits(avail).find(|&v| (self.open[v] & avail).count_ones() <= 1) else {
                break;
            };
            avail &= !self.closed[v];
            size += 1;
        }
        if avail == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + self.clique_cover_bound(avail) <= *best {
            return;
        }
        let v = bits(avail)
            .max_by_key(|&v| ((self.open[v] & avail).count_ones(), std::cmp::Reverse(v)))
            .expect("avail is non-empty");
        self.mis_branch(avail & !self.closed[v], size + 1, best, explored);
        self.mis_branch(avail & !bit(v), size, best, explored);
    }

    /// Self-reduction: repeatedly take the smallest vertex that still admits
    /// an extension to the requested size among later vertices.
    fn lex_first_independent_set(&self, avail: u64, k: usize, explored: &mut u64) -> Option<u64> {
        if self.independence_number(avail, explored) < k {
            return None;
        }
        let mut chosen = 0;
        let mut rest = avail;
        let mut need = k;
        while need > 0 {
            let v = bits(rest)
                .find(|&v| {
                    let next = rest & above(v) & !self.open[v];
                    1 + self.independence_number(next, explored) >= need
                })
                .expect("the extension invariant guarantees a candidate");
            chosen |= bit(v);
            rest &= above(v) & !self.open[v];
            need -= 1;
        }
        Some(chosen)
    }

    /// Increasing-cardinality search for a dominating set (independent when
    /// `independent` is set). Subsets of each size are visited in
    /// lexicographic order, so the first hit is the lexicographically
    /// smallest optimum.
    fn min_dominating(&self, independent: bool, problem: ProblemKind) -> ExactResult {
        let all = self.all();
        let max_cover = self.closed.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
        let mut explored = 0;
        for k in 0..=self.n {
            let mut search = DominationSearch { masks: self, all, k, independent, max_cover, explored: 0 };
            let found = search.extend(0, 0, 0);
            explored += search.explored;
            if let Some(chosen) = found {
                return ExactResult { problem, optimum: k, witness: self.to_set(chosen), explored };
            }
        }
        unreachable!("an independent dominating set always exists")
    }
}

struct DominationSearch<'a> {
    masks: &'a Masks,
    all: u64,
    k: usize,
    independent: bool,
    max_cover: usize,
    explored: u64,
}

impl DominationSearch<'_> {
    fn extend(&mut self, start: usize, chosen: u64, dominated: u64) -> Option<u64> {
        self.explored += 1;
        let undominated = self.all & !dominated;
        if undominated == 0 {
            return Some(chosen);
        }
        let used = chosen.count_ones() as usize;
        if used == self.k {
            return None;
        }
        let remaining = self.k - used;
        if remaining * self.max_cover < undominated.count_ones() as usize {
            return None;
        }
        // The smallest undominated vertex must be covered by a later choice.
        let u = lowest(undominated);
        let mut rescuers = self.masks.closed[u] & from(start);
        if self.independent {
            rescuers &= !dominated;
        }
        if rescuers == 0 {
            return None;
        }
        let last_rescuer = 63 - rescuers.leading_zeros() as usize;
        let mut candidates = from(start) & self.all & !above(last_rescuer);
        if self.independent {
            candidates &= !dominated;
        }
        for v in bits(candidates) {
            let found = self.extend(v + 1, chosen | bit(v), dominated | self.masks.closed[v]);
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Vertex;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star_forest(p: usize, r: usize) -> Graph {
        let edges = (0..p).flat_map(|i| (1..r).map(move |j| (i * r, i * r + j)));
        Graph::from_edge_list(p * r, edges).unwrap()
    }

    /// Brute force over all subsets; independent of the search code above.
    fn brute(graph: &Graph, problem: ProblemKind) -> (usize, Vec<Vertex>) {
        let n = graph.n();
        let mut best: Option<(usize, Vec<Vertex>)> = None;
        for mask in 0u32..(1 << n) {
            let vs: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let set = VertexSet::from_vertices(n, vs.iter().copied()).unwrap();
            if !graph.is_feasible(problem, &set).unwrap() {
                continue;
            }
            let better = match &best {
                None => true,
                Some((size, w)) => match problem {
                    ProblemKind::Mis => vs.len() > *size || (vs.len() == *size && vs < *w),
                    _ => vs.len() < *size || (vs.len() == *size && vs < *w),
                },
            };
            if better {
                best = Some((vs.len(), vs));
            }
        }
        best.unwrap()
    }

    #[test]
    fn c5_values_match_brute_force() {
        let g = cycle(5);
        for problem in ProblemKind::ALL {
            let res = ExactSolver::default().solve(&g, problem).unwrap();
            let (opt, witness) = brute(&g, problem);
            assert_eq!(opt, 2);
            assert_eq!(res.optimum, 2);
            assert_eq!(res.witness.to_vec(), witness);
        }
    }

    #[test]
    fn star_forest_values() {
        let g = star_forest(3, 4);
        assert_eq!(max_independent_set(&g).unwrap().optimum, 9);
        assert_eq!(min_dominating_set(&g).unwrap().optimum, 3);
        let g = star_forest(2, 4);
        let res = min_independent_dominating_set(&g).unwrap();
        assert_eq!(res.optimum, 2);
        assert_eq!(res.witness.to_vec(), vec![0, 4]);
    }

    #[test]
    fn small_named_graphs() {
        assert_eq!(max_independent_set(&Graph::edgeless(5)).unwrap().optimum, 5);
        assert_eq!(min_dominating_set(&Graph::complete(4)).unwrap().optimum, 1);
        let claw = star_forest(1, 4);
        let res = min_independent_dominating_set(&claw).unwrap();
        assert_eq!((res.optimum, res.witness.to_vec()), (1, vec![0]));
    }

    #[test]
    fn empty_graph() {
        let g = Graph::edgeless(0);
        for problem in ProblemKind::ALL {
            let res = ExactSolver::default().solve(&g, problem).unwrap();
            assert_eq!(res.optimum, 0);
            assert!(res.witness.is_empty());
        }
    }

    #[test]
    fn isolated_vertices_are_forced() {
        let g = Graph::from_edge_list(4, [(0, 1)]).unwrap();
        let res = min_dominating_set(&g).unwrap();
        assert_eq!(res.witness.to_vec(), vec![0, 2, 3]);
    }

    #[test]
    fn independent_domination_can_exceed_domination() {
        // Double star: centres 0 and 1, leaves 2,3 on 0 and 4,5 on 1.
        let g = Graph::from_edge_list(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(min_dominating_set(&g).unwrap().optimum, 2);
        assert_eq!(min_independent_dominating_set(&g).unwrap().optimum, 3);
    }

    #[test]
    fn cap_is_enforced() {
        let solver = ExactSolver::new(4).unwrap();
        let g = Graph::edgeless(5);
        assert!(matches!(solver.max_independent_set(&g), Err(Error::SolverCap { n: 5, cap: 4 })));
        assert!(ExactSolver::new(65).is_err());
        let full = ExactSolver::new(64).unwrap();
        assert_eq!(full.max_independent_set(&Graph::edgeless(64)).unwrap().optimum, 64);
    }

    #[test]
    fn random_small_graphs_agree_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_xoshiro::Xoshiro256PlusPlus::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(0..=8);
            let p: f64 = rng.gen();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edge_list(n, edges).unwrap();
            for problem in ProblemKind::ALL {
                let res = ExactSolver::default().solve(&g, problem).unwrap();
                let (opt, witness) = brute(&g, problem);
                assert_eq!(res.optimum, opt, "{problem} on {:?}", g.edges().collect::<Vec<_>>());
                assert_eq!(res.witness.to_vec(), witness);
            }
        }
    }

    #[test]
    fn lex_first_independent_set_of_given_size() {
        let g = cycle(6);
        let solver = ExactSolver::default();
        assert_eq!(solver.lex_first_independent_set(&g, 2).unwrap().unwrap().to_vec(), vec![0, 2]);
        assert_eq!(solver.lex_first_independent_set(&g, 3).unwrap().unwrap().to_vec(), vec![0, 2, 4]);
        assert!(solver.lex_first_independent_set(&g, 4).unwrap().is_none());
    }
}
