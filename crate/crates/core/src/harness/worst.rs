use std::io::Write;

use num_rational::Ratio;
use rand::{Rng, RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};
use crate::exact::ExactSolver;
use crate::generators::{line_graph, random_gnp, random_star_free};
use crate::graph::Graph;
use crate::heuristics::{greedy_mis, greedy_mis_by, ratio_to_f64, ExactRatio, TieBreak};

/// Seeded tie-breaks tried per graph, on top of `MinIndex` and the
/// adversarial rule.
const SEEDED_TIE_BREAKS: u64 = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct WorstRatioObservation {
    pub trial: usize,
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub tie_break: String,
    pub alpha: usize,
    pub alpha_prime: usize,
    pub ratio: ExactRatio,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WorstRatioSearch {
    pub r: usize,
    pub observations: Vec<WorstRatioObservation>,
    /// Index into `observations` of the first maximum ratio.
    pub best: Option<usize>,
    pub best_graph: Option<Graph>,
}

impl WorstRatioSearch {
    pub fn best(&self) -> Option<&WorstRatioObservation> {
        self.best.map(|i| &self.observations[i])
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(writer);
        out.write_record([
            "trial",
            "graph_id",
            "n",
            "m",
            "r",
            "tie_break",
            "alpha",
            "alpha_prime",
            "ratio_num",
            "ratio_den",
            "ratio",
        ])?;
        for o in &self.observations {
            out.write_record([
                o.trial.to_string(),
                o.graph_id.clone(),
                o.n.to_string(),
                o.m.to_string(),
                self.r.to_string(),
                o.tie_break.clone(),
                o.alpha.to_string(),
                o.alpha_prime.to_string(),
                o.ratio.numer().to_string(),
                o.ratio.denom().to_string(),
                format!("{:.6}", ratio_to_f64(&o.ratio)),
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

/// Looks for K_{1,r}-free graphs on which Greedy's maximal independent set
/// is far from maximum. Even trials draw a repaired random star-free graph
/// with `r + 1 ..= n_max` vertices; odd trials prefer the line graph of a
/// sparse random graph. Each graph is run through Greedy under several tie-breaks,
/// including one that avoids the vertices of a fixed maximum independent
/// set. Every observed `α / α′` is recorded.
pub fn greedy_worst_ratio_search(
    r: usize,
    n_max: usize,
    trials: usize,
    seed: u64,
    solver: &ExactSolver,
) -> Result<WorstRatioSearch> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!("r must be at least 3, got {r}")));
    }
    if n_max == 0 || n_max > solver.cap() {
        return Err(Error::InvalidParameter(format!(
            "n_max must lie in 1..={} (the solver cap), got {n_max}",
            solver.cap()
        )));
    }
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut search = WorstRatioSearch { r, observations: Vec::new(), best: None, best_graph: None };
    let mut best_ratio = Ratio::from_integer(0);

    for trial in 0..trials {
        let graph_seed = rng.next_u64();
        let (g, graph_id) = match sparse_line_graph(&mut rng, n_max, graph_seed)? {
            Some(found) if trial % 2 == 1 => found,
            _ => {
                let n = rng.gen_range((r + 1).min(n_max)..=n_max);
                let prob = 0.05 + 0.9 * rng.gen::<f64>();
                let g = random_star_free(n, prob, r, graph_seed)?;
                (g, format!("star_free-n{n}-p{prob:.4}-r{r}-s{graph_seed}"))
            }
        };
        let maximum = solver.max_independent_set(&g)?;

        let mut runs = vec![("min_index".to_string(), greedy_mis(&g, TieBreak::MinIndex).result)];
        let avoid = maximum.witness.clone();
        let adversarial = greedy_mis_by(&g, |tied| *tied.iter().find(|&&v| !avoid.contains(v)).unwrap_or(&tied[0]));
        runs.push(("adversarial".to_string(), adversarial.result));
        for k in 0..SEEDED_TIE_BREAKS {
            let s = graph_seed.wrapping_add(k + 1);
            runs.push((format!("seeded:{s}"), greedy_mis(&g, TieBreak::Seeded(s)).result));
        }

        for (tie_break, set) in runs {
            let ratio = Ratio::new(maximum.optimum as u64, set.len().max(1) as u64);
            if ratio > best_ratio {
                best_ratio = ratio;
                search.best = Some(search.observations.len());
                search.best_graph = Some(g.clone());
            }
            search.observations.push(WorstRatioObservation {
                trial,
                graph_id: graph_id.clone(),
                n: g.n(),
                m: g.m(),
                tie_break,
                alpha: maximum.optimum,
                alpha_prime: set.len(),
                ratio,
            });
        }
    }
    Ok(search)
}

/// Line graph of a sparse `G(n, p)` with between 1 and `n_max` vertices.
/// Line graphs are claw-free, hence K_{1,r}-free for every `r >= 3`.
fn sparse_line_graph(rng: &mut Xoshiro256PlusPlus, n_max: usize, seed: u64) -> Result<Option<(Graph, String)>> {
    let n = rng.gen_range(3..=n_max.max(3));
    let prob = (n_max as f64 / (n * (n - 1) / 2) as f64).min(1.0) * (0.3 + 0.7 * rng.gen::<f64>());
    let lg = line_graph(&random_gnp(n, prob, seed)?);
    let id = format!("line_graph[gnp-n{n}-p{prob:.4}]-s{seed}");
    Ok((1..=n_max).contains(&lg.n()).then_some((lg, id)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios_stay_within_upper_bound() {
        for r in [3, 4] {
            let search = greedy_worst_ratio_search(r, 12, 25, 7, &ExactSolver::default()).unwrap();
            assert_eq!(search.observations.len(), 25 * (2 + SEEDED_TIE_BREAKS as usize));
            for o in &search.observations {
                assert!(o.ratio >= Ratio::from_integer(1));
                assert!(o.ratio <= Ratio::from_integer(r as u64 - 1));
            }
            let best = search.best().unwrap();
            assert!(search.observations.iter().all(|o| o.ratio <= best.ratio));
        }
    }

    #[test]
    fn deterministic() {
        let a = greedy_worst_ratio_search(3, 10, 10, 3, &ExactSolver::default()).unwrap();
        let b = greedy_worst_ratio_search(3, 10, 10, 3, &ExactSolver::default()).unwrap();
        assert_eq!(a.to_csv().unwrap(), b.to_csv().unwrap());
    }

    #[test]
    fn rejects_bad_parameters() {
        let solver = ExactSolver::default();
        assert!(greedy_worst_ratio_search(2, 10, 1, 0, &solver).is_err());
        assert!(greedy_worst_ratio_search(3, 0, 1, 0, &solver).is_err());
        assert!(greedy_worst_ratio_search(3, 41, 1, 0, &solver).is_err());
    }
}
