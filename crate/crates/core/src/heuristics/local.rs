//! t-local search.
//!
//! A set `L` is a t-improvement of a feasible `S` when `S ⊕ L` is feasible
//! and strictly better, with `|S ∩ L| <= t - 1` for maximization and
//! `|S ∩ L| <= t` for minimization. Writing `L = D ∪ A` with `D = L ∩ S`
//! (removed) and `A = L \ S` (added), the neighborhood searched is:
//!
//! * MDS, MIDS: `1 <= |D| <= t` and `|A| <= |D| - 1`. An improvement must
//!   shrink the set, so this is the whole neighborhood.
//! * MIS: `|D| <= t - 1` and `|A| = |D| + 1`, with `A` drawn from vertices
//!   that have no neighbor in `S \ D`. Independence is hereditary, so any
//!   improving `A` contains an improving `A'` of size `|D| + 1`.
//!
//! Candidates are visited by increasing `|D|`, then `D` in lexicographic
//! order, then increasing `|A|`, then `A` in lexicographic order; the first
//! improvement found is returned.

use itertools::Itertools;

use super::greedy::{greedy_mis, TieBreak};
use crate::error::{Error, Result};
use crate::graph::{Graph, ProblemKind, Provenance, Sense, Solution, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Improvement {
    /// The set `L`; the new solution is `S ⊕ L`.
    pub swap: VertexSet,
    pub before: usize,
    pub after: usize,
}

#[derive(Clone, Debug)]
pub struct LocalSearchOutcome {
    pub solution: Solution,
    pub iterations: usize,
    pub improvements: Vec<Improvement>,
    /// True when the last neighborhood scan found no t-improvement. False
    /// only if the iteration budget ran out first.
    pub certified_local: bool,
}

/// Starting point when none is given: the Greedy set for MIS and MIDS, the
/// whole vertex set for MDS.
pub fn default_initial_solution(graph: &Graph, kind: ProblemKind) -> VertexSet {
    match kind {
        ProblemKind::Mis | ProblemKind::Mids => greedy_mis(graph, TieBreak::MinIndex).result,
        ProblemKind::Mds => VertexSet::full(graph.n()),
    }
}

fn check_t(t: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    Ok(())
}

pub fn find_t_improvement(
    graph: &Graph,
    kind: ProblemKind,
    current: &VertexSet,
    t: usize,
) -> Result<Option<Improvement>> {
    check_t(t)?;
    if !graph.is_feasible(kind, current)? {
        return Err(Error::Infeasible(kind));
    }
    let inside: Vec<Vertex> = current.iter().collect();
    let outside: Vec<Vertex> = graph.vertices().filter(|&v| !current.contains(v)).collect();
    let before = current.len();

    let found = match kind.sense() {
        Sense::Max => search_max(graph, current, &inside, &outside, t),
        Sense::Min => search_min(graph, kind, current, &inside, &outside, t),
    };
    Ok(found.map(|(removed, added)| {
        let swap = VertexSet::from_vertices(graph.n(), removed.into_iter().chain(added))
            .expect("vertices come from the graph");
        let after = before + swap.len() - 2 * swap.iter().filter(|&v| current.contains(v)).count();
        Improvement { swap, before, after }
    }))
}

type Swap = (Vec<Vertex>, Vec<Vertex>);

fn search_max(graph: &Graph, current: &VertexSet, inside: &[Vertex], outside: &[Vertex], t: usize) -> Option<Swap> {
    for d in 0..=(t - 1).min(inside.len()) {
        for removed in inside.iter().copied().combinations(d) {
            let mut kept = current.clone();
            for &v in &removed {
                kept.remove(v);
            }
            let free: Vec<Vertex> =
                outside.iter().copied().filter(|&v| graph.neighbors(v).iter().all(|&w| !kept.contains(w))).collect();
            let found = free
                .iter()
                .copied()
                .combinations(d + 1)
                .find(|added| added.iter().tuple_combinations().all(|(&a, &b)| !graph.adjacent(a, b)));
            if let Some(added) = found {
                return Some((removed, added));
            }
        }
    }
    None
}

fn search_min(
    graph: &Graph,
    kind: ProblemKind,
    current: &VertexSet,
    inside: &[Vertex],
    outside: &[Vertex],
    t: usize,
) -> Option<Swap> {
    for d in 1..=t.min(inside.len()) {
        for removed in inside.iter().copied().combinations(d) {
            let mut kept = current.clone();
            for &v in &removed {
                kept.remove(v);
            }
            // MIDS additions must stay independent from what is kept.
            let pool: Vec<Vertex> = match kind {
                ProblemKind::Mids => {
                    outside.iter().copied().filter(|&v| graph.neighbors(v).iter().all(|&w| !kept.contains(w))).collect()
                }
                _ => outside.to_vec(),
            };
            for a in 0..d {
                for added in pool.iter().copied().combinations(a) {
                    let mut candidate = kept.clone();
                    for &v in &added {
                        candidate.insert(v);
                    }
                    if graph.is_feasible(kind, &candidate).expect("same universe") {
                        return Some((removed, added));
                    }
                }
            }
        }
    }
    None
}

/// The local search scheme: start from a feasible set, apply t-improvements
/// until none exists or `max_iterations` improvements have been applied.
pub fn t_local_search(
    graph: &Graph,
    kind: ProblemKind,
    initial: Option<&VertexSet>,
    t: usize,
    max_iterations: usize,
) -> Result<LocalSearchOutcome> {
    check_t(t)?;
    let mut current = match initial {
        Some(set) => {
            if !graph.is_feasible(kind, set)? {
                return Err(Error::Infeasible(kind));
            }
            set.clone()
        }
        None => default_initial_solution(graph, kind),
    };
    let mut improvements = Vec::new();
    let certified_local = loop {
        let Some(improvement) = find_t_improvement(graph, kind, &current, t)? else {
            break true;
        };
        if improvements.len() == max_iterations {
            break false;
        }
        current = current.symmetric_difference(&improvement.swap)?;
        improvements.push(improvement);
    };
    Ok(LocalSearchOutcome {
        solution: Solution::new(graph, kind, current, Provenance::LocalSearch { t })?,
        iterations: improvements.len(),
        improvements,
        certified_local,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{random_gnp, star_forest};

    fn set(n: usize, vs: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    fn p3() -> Graph {
        Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap()
    }

    /// Every L ⊆ V within the intersection cap, by brute force.
    fn brute_improvement_exists(g: &Graph, kind: ProblemKind, s: &VertexSet, t: usize) -> bool {
        let n = g.n();
        let cap = match kind.sense() {
            Sense::Max => t - 1,
            Sense::Min => t,
        };
        (0u32..1 << n).any(|mask| {
            let l = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1)).unwrap();
            if l.intersection(s).unwrap().len() > cap {
                return false;
            }
            let next = s.symmetric_difference(&l).unwrap();
            g.is_feasible(kind, &next).unwrap()
                && match kind.sense() {
                    Sense::Max => next.len() > s.len(),
                    Sense::Min => next.len() < s.len(),
                }
        })
    }

    #[test]
    fn mis_on_path() {
        let g = p3();
        let imp = find_t_improvement(&g, ProblemKind::Mis, &set(3, &[1]), 2).unwrap().unwrap();
        assert_eq!(imp.swap.to_vec(), vec![0, 1, 2]);
        assert_eq!((imp.before, imp.after), (1, 2));
        assert!(find_t_improvement(&g, ProblemKind::Mis, &set(3, &[1]), 1).unwrap().is_none());
    }

    #[test]
    fn mds_on_path() {
        let imp = find_t_improvement(&p3(), ProblemKind::Mds, &set(3, &[0, 1]), 1).unwrap().unwrap();
        assert_eq!(imp.swap.to_vec(), vec![0]);
        assert_eq!((imp.before, imp.after), (2, 1));
    }

    #[test]
    fn errors() {
        let g = p3();
        assert!(matches!(
            find_t_improvement(&g, ProblemKind::Mis, &set(3, &[0, 1]), 1),
            Err(Error::Infeasible(ProblemKind::Mis))
        ));
        assert!(find_t_improvement(&g, ProblemKind::Mis, &set(3, &[1]), 0).is_err());
        assert!(t_local_search(&g, ProblemKind::Mds, Some(&set(3, &[0])), 1, 10).is_err());
        assert!(t_local_search(&g, ProblemKind::Mds, None, 0, 10).is_err());
    }

    #[test]
    fn local_search_traces() {
        let out = t_local_search(&p3(), ProblemKind::Mis, Some(&VertexSet::empty(3)), 1, 10).unwrap();
        assert_eq!(out.solution.set().to_vec(), vec![0, 2]);
        assert!(out.certified_local);

        // The leaves of a claw are 1-local for MDS: a 1-improvement can only
        // drop one vertex and add nothing. Radius 2 reaches the centre.
        let claw = star_forest(1, 4).unwrap();
        let leaves = set(4, &[1, 2, 3]);
        let out = t_local_search(&claw, ProblemKind::Mds, Some(&leaves), 1, 10).unwrap();
        assert_eq!(out.solution.set(), &leaves);
        assert!(out.certified_local);
        assert_eq!(out.solution.provenance(), Provenance::LocalSearch { t: 1 });
        let out = t_local_search(&claw, ProblemKind::Mds, Some(&leaves), 2, 10).unwrap();
        assert_eq!(out.solution.set().to_vec(), vec![0]);
        assert_eq!(out.improvements[0].swap.to_vec(), vec![0, 1, 2]);
        assert!(out.certified_local);
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let g = Graph::edgeless(4);
        let out = t_local_search(&g, ProblemKind::Mis, Some(&VertexSet::empty(4)), 1, 2).unwrap();
        assert!(!out.certified_local);
        assert_eq!(out.iterations, 2);
        assert_eq!(out.solution.value(), 2);
    }

    #[test]
    fn neighborhood_matches_brute_force() {
        for seed in 0..80 {
            let n = 4 + (seed as usize % 5);
            let g = random_gnp(n, 0.15 + (seed % 7) as f64 * 0.1, seed).unwrap();
            for kind in ProblemKind::ALL {
                for t in 1..=3 {
                    // Feasible starting points: defaults plus random subsets that happen to be feasible.
                    let mut starts = vec![default_initial_solution(&g, kind), VertexSet::empty(n)];
                    starts.push(VertexSet::full(n));
                    for k in 0..6u64 {
                        let mask = (seed * 31 + k * 7919) % (1 << n);
                        starts.push(VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1)).unwrap());
                    }
                    for s in starts.iter().filter(|s| g.is_feasible(kind, s).unwrap()) {
                        let found = find_t_improvement(&g, kind, s, t).unwrap();
                        assert_eq!(found.is_some(), brute_improvement_exists(&g, kind, s, t));
                        if let Some(imp) = found {
                            let next = s.symmetric_difference(&imp.swap).unwrap();
                            assert!(g.is_feasible(kind, &next).unwrap());
                            assert_eq!(imp.after, next.len());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn progress_is_monotone_and_nested() {
        for seed in 0..30 {
            let g = random_gnp(10, 0.3, seed).unwrap();
            for kind in ProblemKind::ALL {
                let out = t_local_search(&g, kind, None, 2, g.n() + 1).unwrap();
                assert!(out.certified_local);
                assert!(out.iterations <= g.n());
                for imp in &out.improvements {
                    match kind.sense() {
                        Sense::Max => assert!(imp.after > imp.before),
                        Sense::Min => assert!(imp.after < imp.before),
                    }
                }
                assert!(find_t_improvement(&g, kind, out.solution.set(), 1).unwrap().is_none());
            }
        }
    }
}
