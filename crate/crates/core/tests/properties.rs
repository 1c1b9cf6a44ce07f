use proptest::prelude::*;

use starfree::exact::ExactSolver;
use starfree::generators::{line_graph, random_gnp, random_star_free, GeneratorKind, GeneratorSpec};
use starfree::harness::{verify_inequalities_with, ExperimentConfig};
use starfree::heuristics::{greedy_mis, random_maximal_independent_set, t_local_search, TieBreak};
use starfree::recognition::{is_almost_star_free, is_star_free};
use starfree::{Graph, ProblemKind, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, 0.0..=1.0f64, any::<u64>()).prop_map(|(n, p, s)| random_gnp(n, p, s).unwrap())
}

fn star_free_graph(r: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.05..0.9f64, any::<u64>()).prop_map(move |(n, p, s)| random_star_free(n, p, r, s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn greedy_sets_are_maximal_independent(g in graph(20), seed in any::<u64>()) {
        for tie in [TieBreak::MinIndex, TieBreak::Seeded(seed)] {
            let set = greedy_mis(&g, tie).result;
            prop_assert!(g.is_independent(&set).unwrap());
            prop_assert!(g.is_dominating(&set).unwrap());
        }
    }

    #[test]
    fn every_maximal_set_obeys_the_star_free_bounds(r in 3usize..=5, g in star_free_graph(4, 14), seed in any::<u64>()) {
        prop_assume!(is_star_free(&g, r).unwrap());
        let set = random_maximal_independent_set(&g, seed);
        let rec = verify_inequalities_with(&g, r, &ExactSolver::default(), &set).unwrap();
        prop_assert!(rec.all_hold(), "{:?}", rec.failures().collect::<Vec<_>>());
    }

    #[test]
    fn class_containment(g in graph(11), r in 3usize..=5) {
        let free = is_star_free(&g, r).unwrap();
        prop_assert!(!free || is_almost_star_free(&g, r).unwrap());
        prop_assert!(!free || is_star_free(&g, r + 1).unwrap());
    }

    #[test]
    fn line_graphs_are_claw_free(g in graph(9)) {
        prop_assert!(is_star_free(&line_graph(&g), 3).unwrap());
    }

    #[test]
    fn local_search_never_worsens(g in graph(11), t in 1usize..=2) {
        for kind in ProblemKind::ALL {
            let start = match kind {
                ProblemKind::Mds => VertexSet::full(g.n()),
                _ => greedy_mis(&g, TieBreak::MinIndex).result,
            };
            let out = t_local_search(&g, kind, Some(&start), t, g.n() + 1).unwrap();
            prop_assert!(g.is_feasible(kind, out.solution.set()).unwrap());
            prop_assert!(out.certified_local);
            let v = out.solution.value();
            match kind {
                ProblemKind::Mis => prop_assert!(v >= start.len()),
                _ => prop_assert!(v <= start.len()),
            }
        }
    }

    #[test]
    fn exact_chain(g in graph(14)) {
        let s = ExactSolver::default();
        let gamma = s.min_dominating_set(&g).unwrap().optimum;
        let gamma0 = s.min_independent_dominating_set(&g).unwrap().optimum;
        let alpha = s.max_independent_set(&g).unwrap().optimum;
        prop_assert!(gamma <= gamma0 && gamma0 <= alpha);
    }
}

#[test]
fn config_instances_match_direct_generation() {
    let config = ExperimentConfig::from_toml_str(
        r#"
seed = 40
r_values = [3]
problems = ["mis"]
methods = ["greedy"]

[[generator]]
kind = "random_star_free"
n = 9
prob = 0.5
r = 3
count = 3

[[generator]]
kind = "fan"
k = 5
count = 4
seed = 7
"#,
    )
    .unwrap();
    let instances = config.instances().unwrap();
    assert_eq!(instances.len(), 4);
    for (i, inst) in instances[..3].iter().enumerate() {
        let spec = GeneratorSpec { kind: GeneratorKind::RandomStarFree { n: 9, prob: 0.5, r: 3 }, seed: 40 + i as u64 };
        assert_eq!(inst.graph, spec.generate().unwrap());
        assert_eq!(inst.id, spec.label());
    }
    assert_eq!(instances[3].id, "fan-k5");
}
