use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact::{ExactSolver, DEFAULT_SOLVER_CAP};
use crate::generators::{GeneratorKind, GeneratorSpec};
use crate::graph::ProblemKind;

use super::experiment::{Instance, RunSettings};

/// Heuristic evaluated by an experiment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(try_from = "String")]
pub enum Method {
    /// The min-degree Greedy maximal independent set, used as the solution
    /// for every problem.
    Greedy,
    /// t-local search from the default initial solution.
    Local { t: usize },
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Greedy => "greedy",
            Method::Local { .. } => "local",
        }
    }

    pub fn t(&self) -> Option<usize> {
        match self {
            Method::Greedy => None,
            Method::Local { t } => Some(*t),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Greedy => f.write_str("greedy"),
            Method::Local { t } => write!(f, "local:{t}"),
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            None if s == "greedy" => Ok(Method::Greedy),
            Some(("local", t)) => match t.parse() {
                Ok(t) if t >= 1 => Ok(Method::Local { t }),
                _ => Err(Error::InvalidParameter(format!("bad local search radius in `{s}`"))),
            },
            _ => Err(Error::InvalidParameter(format!("unknown method `{s}` (expected greedy or local:<t>)"))),
        }
    }
}

impl TryFrom<String> for Method {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// One generator family and how many seeded instances to draw from it.
#[derive(Clone, Debug, PartialEq, Deserialize)]
pub struct GeneratorEntry {
    #[serde(flatten)]
    pub kind: GeneratorKind,
    #[serde(default = "one")]
    pub count: usize,
    /// First seed for this entry; instance `i` uses `seed + i`. Defaults to
    /// the experiment seed.
    #[serde(default)]
    pub seed: Option<u64>,
}

fn one() -> usize {
    1
}

fn default_cap() -> usize {
    DEFAULT_SOLVER_CAP
}

/// Ratio experiment description, read from a TOML file:
///
/// ```toml
/// seed = 1
/// r_values = [3]
/// problems = ["mis", "mds", "mids"]
/// methods = ["greedy", "local:1"]
///
/// [[generator]]
/// kind = "random_star_free"
/// n = 12
/// prob = 0.3
/// r = 3
/// count = 50
/// ```
#[derive(Clone, Debug, PartialEq, Deserialize)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_cap")]
    pub solver_cap: usize,
    pub r_values: Vec<usize>,
    pub problems: Vec<ProblemKind>,
    pub methods: Vec<Method>,
    #[serde(rename = "generator")]
    pub generators: Vec<GeneratorEntry>,
    /// Iteration budget for local search; defaults to `n + 1` per instance.
    #[serde(default)]
    pub local_budget: Option<usize>,
}

impl ExperimentConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let config: Self = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_toml_str(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        if self.generators.is_empty() {
            return Err(Error::Config("at least one [[generator]] is required".into()));
        }
        if self.problems.is_empty() {
            return Err(Error::Config("at least one problem is required".into()));
        }
        if self.methods.is_empty() {
            return Err(Error::Config("at least one method is required".into()));
        }
        if self.r_values.is_empty() || self.r_values.iter().any(|&r| r < 3) {
            return Err(Error::Config("r_values must be non-empty with every r >= 3".into()));
        }
        for entry in &self.generators {
            entry.kind.validate()?;
        }
        ExactSolver::new(self.solver_cap)?;
        Ok(())
    }

    pub fn settings(&self) -> Result<RunSettings> {
        Ok(RunSettings {
            r_values: self.r_values.clone(),
            problems: self.problems.clone(),
            methods: self.methods.clone(),
            solver: ExactSolver::new(self.solver_cap)?,
            local_budget: self.local_budget,
        })
    }

    /// Expands the generator entries into concrete instances, in order.
    pub fn instances(&self) -> Result<Vec<Instance>> {
        let mut out = Vec::new();
        for entry in &self.generators {
            let base = entry.seed.unwrap_or(self.seed);
            let count = if entry.kind.is_random() { entry.count } else { entry.count.min(1) };
            for i in 0..count {
                let spec = GeneratorSpec { kind: entry.kind.clone(), seed: base.wrapping_add(i as u64) };
                out.push(Instance { id: spec.label(), graph: spec.generate()?, seed: spec.seed });
            }
        }
        Ok(out)
    }
}
