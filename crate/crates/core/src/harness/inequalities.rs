use crate::error::{Error, Result};
use crate::exact::ExactSolver;
use crate::graph::{Graph, VertexSet};
use crate::heuristics::{greedy_mis, TieBreak};
use crate::recognition::Recognizer;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// `α`, `γ`, `γ₀` and the size `α′` of one maximal independent set, with
/// the two-sided bounds that hold on K_{1,r}-free graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityRecord {
    pub r: usize,
    pub alpha: usize,
    pub gamma: usize,
    pub gamma0: usize,
    pub alpha_prime: usize,
    pub checks: Vec<InequalityCheck>,
}

impl InequalityRecord {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.checks.iter().filter(|c| !c.holds).map(|c| c.name)
    }
}

/// Checks the bounds with `α′` taken from min-degree Greedy.
pub fn verify_inequalities(graph: &Graph, r: usize, solver: &ExactSolver) -> Result<InequalityRecord> {
    let greedy = greedy_mis(graph, TieBreak::MinIndex).result;
    verify_inequalities_with(graph, r, solver, &greedy)
}

/// Checks the bounds for an arbitrary maximal independent set. Fails with
/// [`Error::Precondition`] when `graph` is not K_{1,r}-free or `maximal` is
/// not a maximal independent set.
pub fn verify_inequalities_with(
    graph: &Graph,
    r: usize,
    solver: &ExactSolver,
    maximal: &VertexSet,
) -> Result<InequalityRecord> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("r must be at least 2, got {r}")));
    }
    if let Some(w) = Recognizer::new(*solver).find_induced_star(graph, r)? {
        return Err(Error::Precondition(format!("graph is not K_1,{r}-free: {w}")));
    }
    if !(graph.is_independent(maximal)? && graph.is_dominating(maximal)?) {
        return Err(Error::Precondition("set is not a maximal independent set".into()));
    }

    let alpha = solver.max_independent_set(graph)?.optimum;
    let gamma = solver.min_dominating_set(graph)?.optimum;
    let gamma0 = solver.min_independent_dominating_set(graph)?.optimum;
    let alpha_prime = maximal.len();
    let k = r - 1;

    let check = |name, holds| InequalityCheck { name, holds };
    let checks = vec![
        check("gamma <= alpha", gamma <= alpha),
        check("alpha <= (r-1)*gamma", alpha <= k * gamma),
        check("alpha'/(r-1) <= gamma", alpha_prime <= k * gamma),
        check("gamma <= gamma0", gamma <= gamma0),
        check("gamma0 <= alpha'", gamma0 <= alpha_prime),
        check("alpha' <= alpha", alpha_prime <= alpha),
        check("alpha <= (r-1)*alpha'", alpha <= k * alpha_prime),
    ];
    Ok(InequalityRecord { r, alpha, gamma, gamma0, alpha_prime, checks })
}
