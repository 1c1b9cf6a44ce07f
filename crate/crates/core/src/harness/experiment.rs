use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::ExactSolver;
use crate::graph::{Graph, ProblemKind, VertexSet};
use crate::heuristics::{approximation_ratio, greedy_mis, ratio_to_f64, t_local_search, ExactRatio, TieBreak};
use crate::io::{write_graph, GraphFormat};
use crate::recognition::Recognizer;

use super::config::{ExperimentConfig, Method};

pub const CSV_SCHEMA_VERSION: &str = "1";

pub const CSV_HEADER: [&str; 15] = [
    "schema",
    "graph_id",
    "n",
    "m",
    "r",
    "star_free",
    "acf",
    "problem",
    "method",
    "t",
    "opt",
    "value",
    "ratio_num",
    "ratio_den",
    "ratio",
];

#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub graph: Graph,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct RunSettings {
    pub r_values: Vec<usize>,
    pub problems: Vec<ProblemKind>,
    pub methods: Vec<Method>,
    pub solver: ExactSolver,
    pub local_budget: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatioRow {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub star_free: bool,
    pub acf: bool,
    pub problem: ProblemKind,
    pub method: Method,
    pub opt: usize,
    pub value: usize,
    pub ratio: ExactRatio,
    /// Whether the evaluated set is a maximal independent set, i.e. whether
    /// the class bounds apply to it.
    pub maximal_independent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skipped {
    pub graph_id: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SummaryRow {
    pub problem: ProblemKind,
    pub r: usize,
    pub method: Method,
    pub instances: usize,
    pub max_ratio: ExactRatio,
    pub mean_ratio: f64,
}

/// A maximal independent set whose ratio exceeds the class bound.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundViolation {
    pub graph_id: String,
    pub r: usize,
    pub class: &'static str,
    pub problem: ProblemKind,
    pub method: Method,
    pub ratio: ExactRatio,
    pub bound: u64,
    pub solution: VertexSet,
    /// The offending graph in DIMACS format, for reproduction.
    pub dimacs: String,
}

impl fmt::Display for BoundViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bound violation on {} ({} r={}): {} via {} has ratio {} > {}; solution [{}]\n{}",
            self.graph_id,
            self.class,
            self.r,
            self.problem,
            self.method,
            self.ratio,
            self.bound,
            self.solution,
            self.dimacs
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RatioReport {
    pub rows: Vec<RatioRow>,
    pub skipped: Vec<Skipped>,
}

impl RatioReport {
    /// Max and mean ratio per `(problem, r, method)`, sorted by that key.
    pub fn summary(&self) -> Vec<SummaryRow> {
        let mut groups: BTreeMap<(ProblemKind, usize, Method), Vec<ExactRatio>> = BTreeMap::new();
        for row in &self.rows {
            groups.entry((row.problem, row.r, row.method)).or_default().push(row.ratio);
        }
        groups
            .into_iter()
            .map(|((problem, r, method), ratios)| SummaryRow {
                problem,
                r,
                method,
                instances: ratios.len(),
                max_ratio: *ratios.iter().max().expect("groups are non-empty"),
                mean_ratio: ratios.iter().map(ratio_to_f64).sum::<f64>() / ratios.len() as f64,
            })
            .collect()
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(writer);
        out.write_record(CSV_HEADER)?;
        for row in &self.rows {
            out.write_record([
                CSV_SCHEMA_VERSION.to_string(),
                row.graph_id.clone(),
                row.n.to_string(),
                row.m.to_string(),
                row.r.to_string(),
                row.star_free.to_string(),
                row.acf.to_string(),
                row.problem.to_string(),
                row.method.name().to_string(),
                row.method.t().map(|t| t.to_string()).unwrap_or_default(),
                row.opt.to_string(),
                row.value.to_string(),
                row.ratio.numer().to_string(),
                row.ratio.denom().to_string(),
                format!("{:.6}", ratio_to_f64(&row.ratio)),
            ])?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> Result<Vec<u8>> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(buf)
    }
}

/// Generates the configured instances and runs them.
pub fn run_ratio_experiment(config: &ExperimentConfig) -> Result<RatioReport> {
    config.validate()?;
    run_ratio_experiment_on(&config.instances()?, &config.settings()?)
}

/// Classifies, solves and evaluates every instance. Instances run in
/// parallel; rows keep instance order. The first bound violation (in
/// instance order) aborts with [`Error::BoundViolation`].
pub fn run_ratio_experiment_on(instances: &[Instance], settings: &RunSettings) -> Result<RatioReport> {
    if instances.is_empty() {
        return Err(Error::Config("no instances to run".into()));
    }
    let outcomes: Vec<Result<Option<Vec<RatioRow>>>> =
        instances.par_iter().map(|inst| evaluate(inst, settings)).collect();

    let mut report = RatioReport::default();
    for (inst, outcome) in instances.iter().zip(outcomes) {
        match outcome {
            Ok(Some(rows)) => report.rows.extend(rows),
            Ok(None) => report.skipped.push(Skipped {
                graph_id: inst.id.clone(),
                reason: format!("{} vertices exceed the solver cap {}", inst.graph.n(), settings.solver.cap()),
            }),
            Err(e) => return Err(e),
        }
    }
    if report.rows.is_empty() {
        return Err(Error::AllSkipped { skipped: report.skipped.len() });
    }
    Ok(report)
}

/// `Ok(None)` when the instance is too large for the exact solver.
fn evaluate(inst: &Instance, settings: &RunSettings) -> Result<Option<Vec<RatioRow>>> {
    match evaluate_inner(inst, settings) {
        Err(Error::SolverCap { .. }) => Ok(None),
        other => other.map(Some),
    }
}

fn evaluate_inner(inst: &Instance, settings: &RunSettings) -> Result<Vec<RatioRow>> {
    let g = &inst.graph;
    let recognizer = Recognizer::new(settings.solver);

    let mut optima = Vec::new();
    for &problem in &settings.problems {
        optima.push(settings.solver.solve(g, problem)?.optimum);
    }
    let greedy = greedy_mis(g, TieBreak::MinIndex).result;

    // (problem, method, opt, set)
    let mut evaluated = Vec::new();
    for (&problem, &opt) in settings.problems.iter().zip(&optima) {
        for &method in &settings.methods {
            let set = match method {
                Method::Greedy => greedy.clone(),
                Method::Local { t } => {
                    let budget = settings.local_budget.unwrap_or(g.n() + 1);
                    t_local_search(g, problem, None, t, budget)?.solution.into_set()
                }
            };
            evaluated.push((problem, method, opt, set));
        }
    }

    let mut rows = Vec::new();
    for &r in &settings.r_values {
        let star_free = recognizer.is_star_free(g, r)?;
        let acf = recognizer.is_almost_star_free(g, r)?;
        let r_minus_one = (r - 1) as u64;
        for (problem, method, opt, set) in &evaluated {
            let ratio = approximation_ratio(*problem, *opt, set.len())?;
            let maximal_independent = g.is_independent(set)? && g.is_dominating(set)?;
            if maximal_independent {
                let checks = [(star_free, "star_free", r_minus_one), (acf, "acf", r_minus_one * r_minus_one)];
                for (member, class, bound) in checks {
                    if member && ratio > Ratio::from_integer(bound) {
                        return Err(Error::BoundViolation(Box::new(BoundViolation {
                            graph_id: inst.id.clone(),
                            r,
                            class,
                            problem: *problem,
                            method: *method,
                            ratio,
                            bound,
                            solution: set.clone(),
                            dimacs: String::from_utf8(write_graph(g, GraphFormat::Dimacs)).expect("ascii"),
                        })));
                    }
                }
            }
            rows.push(RatioRow {
                graph_id: inst.id.clone(),
                n: g.n(),
                m: g.m(),
                r,
                star_free,
                acf,
                problem: *problem,
                method: *method,
                opt: *opt,
                value: set.len(),
                ratio,
                maximal_independent,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fan, star_forest};

    fn settings(r_values: Vec<usize>, methods: Vec<Method>) -> RunSettings {
        RunSettings {
            r_values,
            problems: ProblemKind::ALL.to_vec(),
            methods,
            solver: ExactSolver::default(),
            local_budget: None,
        }
    }

    #[test]
    fn star_forests_have_unit_mis_ratio() {
        let mut instances = Vec::new();
        for p in 1..=3 {
            for r in [3, 4] {
                instances.push(Instance { id: format!("sf{p}-{r}"), graph: star_forest(p, r).unwrap(), seed: 0 });
            }
        }
        let report = run_ratio_experiment_on(&instances, &settings(vec![3, 4], vec![Method::Greedy])).unwrap();
        for row in report.rows.iter().filter(|row| row.problem == ProblemKind::Mis) {
            assert_eq!(row.ratio, Ratio::from_integer(1));
        }
    }

    #[test]
    fn fan_is_acf_and_within_square_bound() {
        let instances = vec![Instance { id: "fan-k5".into(), graph: fan(5).unwrap(), seed: 0 }];
        let methods = vec![Method::Greedy, Method::Local { t: 1 }, Method::Local { t: 2 }];
        let report = run_ratio_experiment_on(&instances, &settings(vec![3], methods)).unwrap();
        assert_eq!(report.rows.len(), 9);
        for row in &report.rows {
            assert!(row.acf && !row.star_free);
            assert!(row.ratio <= Ratio::from_integer(4));
        }
    }

    #[test]
    fn csv_layout() {
        let instances = vec![Instance { id: "p3".into(), graph: star_forest(1, 3).unwrap(), seed: 0 }];
        let report = run_ratio_experiment_on(&instances, &settings(vec![3], vec![Method::Greedy])).unwrap();
        let csv = String::from_utf8(report.to_csv().unwrap()).unwrap();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "schema,graph_id,n,m,r,star_free,acf,problem,method,t,opt,value,ratio_num,ratio_den,ratio"
        );
        // Greedy on P3 picks both leaves: MDS 2/1, MIS 1, MIDS 2/1.
        assert_eq!(lines.next().unwrap(), "1,p3,3,2,3,true,true,mds,greedy,,1,2,2,1,2.000000");
        assert_eq!(lines.next().unwrap(), "1,p3,3,2,3,true,true,mis,greedy,,2,2,1,1,1.000000");
        assert_eq!(lines.next().unwrap(), "1,p3,3,2,3,true,true,mids,greedy,,1,2,2,1,2.000000");
        let summary = report.summary();
        assert_eq!(summary.len(), 3);
        assert_eq!(summary[0].max_ratio, Ratio::from_integer(2));
    }

    #[test]
    fn oversized_instances_are_skipped() {
        let mut s = settings(vec![3], vec![Method::Greedy]);
        s.solver = ExactSolver::new(5).unwrap();
        let instances = vec![
            Instance { id: "big".into(), graph: star_forest(2, 3).unwrap(), seed: 0 },
            Instance { id: "small".into(), graph: star_forest(1, 3).unwrap(), seed: 0 },
        ];
        let report = run_ratio_experiment_on(&instances, &s).unwrap();
        assert_eq!(report.skipped.len(), 1);
        assert_eq!(report.skipped[0].graph_id, "big");
        assert!(report.rows.iter().all(|row| row.graph_id == "small"));

        let only_big = &instances[..1];
        assert!(matches!(run_ratio_experiment_on(only_big, &s), Err(Error::AllSkipped { skipped: 1 })));
    }
}
