//! Instance generators.
//!
//! Random graphs are driven by xoshiro256++ seeded through SplitMix64
//! (`Xoshiro256PlusPlus::seed_from_u64`). For `G(n, p)` the pairs `(i, j)`,
//! `i < j`, are visited in lexicographic order; each consumes one 64-bit
//! draw `x` and becomes an edge iff `(x >> 11) * 2^-53 < p`.

use std::fmt;

use rand::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::Recognizer;

/// The generator families understood by configs and the CLI.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorKind {
    /// `p` disjoint copies of K_{1,r-1}.
    StarForest {
        p: usize,
        r: usize,
    },
    Gnp {
        n: usize,
        prob: f64,
    },
    LineGraphOf {
        inner: Box<GeneratorKind>,
    },
    RandomStarFree {
        n: usize,
        prob: f64,
        r: usize,
    },
    /// A vertex joined to every vertex of the path on `k` vertices.
    Fan {
        k: usize,
    },
}

impl GeneratorKind {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match self {
            GeneratorKind::StarForest { p, r } => {
                if *p < 1 || *r < 3 {
                    return bad(format!("star_forest needs p >= 1 and r >= 3, got p={p}, r={r}"));
                }
            }
            GeneratorKind::Gnp { prob, .. } => check_prob(*prob)?,
            GeneratorKind::LineGraphOf { inner } => inner.validate()?,
            GeneratorKind::RandomStarFree { prob, r, .. } => {
                check_prob(*prob)?;
                if *r < 3 {
                    return bad(format!("random_star_free needs r >= 3, got {r}"));
                }
            }
            GeneratorKind::Fan { .. } => {}
        }
        Ok(())
    }

    /// Whether the output depends on the seed.
    pub fn is_random(&self) -> bool {
        match self {
            GeneratorKind::StarForest { .. } | GeneratorKind::Fan { .. } => false,
            GeneratorKind::Gnp { .. } | GeneratorKind::RandomStarFree { .. } => true,
            GeneratorKind::LineGraphOf { inner } => inner.is_random(),
        }
    }

    pub fn generate(&self, seed: u64) -> Result<Graph> {
        self.validate()?;
        match self {
            GeneratorKind::StarForest { p, r } => star_forest(*p, *r),
            GeneratorKind::Gnp { n, prob } => random_gnp(*n, *prob, seed),
            GeneratorKind::LineGraphOf { inner } => Ok(line_graph(&inner.generate(seed)?)),
            GeneratorKind::RandomStarFree { n, prob, r } => random_star_free(*n, *prob, *r, seed),
            GeneratorKind::Fan { k } => fan(*k),
        }
    }
}

/// Compact label without commas, used as a graph id.
impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorKind::StarForest { p, r } => write!(f, "star_forest-p{p}-r{r}"),
            GeneratorKind::Gnp { n, prob } => write!(f, "gnp-n{n}-p{prob}"),
            GeneratorKind::LineGraphOf { inner } => write!(f, "line_graph[{inner}]"),
            GeneratorKind::RandomStarFree { n, prob, r } => write!(f, "star_free-n{n}-p{prob}-r{r}"),
            GeneratorKind::Fan { k } => write!(f, "fan-k{k}"),
        }
    }
}

/// A generator family together with its seed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub kind: GeneratorKind,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Graph> {
        self.kind.generate(self.seed)
    }

    pub fn label(&self) -> String {
        if self.kind.is_random() {
            format!("{}-s{}", self.kind, self.seed)
        } else {
            self.kind.to_string()
        }
    }
}

fn check_prob(prob: f64) -> Result<()> {
    if (0.0..=1.0).contains(&prob) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("probability {prob} outside [0, 1]")))
    }
}

/// `pK_{1,r-1}`; component `i` occupies `[i*r, (i+1)*r)` with its centre first.
pub fn star_forest(p: usize, r: usize) -> Result<Graph> {
    GeneratorKind::StarForest { p, r }.validate()?;
    let edges = (0..p).flat_map(|i| (1..r).map(move |j| (i * r, i * r + j)));
    Graph::from_edge_list(p * r, edges)
}

/// Fan `F_k`: vertex 0 joined to each vertex of the path `1 - 2 - ... - k`.
pub fn fan(k: usize) -> Result<Graph> {
    let spokes = (1..=k).map(|v| (0, v));
    let path = (1..k).map(|v| (v, v + 1));
    Graph::from_edge_list(k + 1, spokes.chain(path))
}

/// Vertex `i` of the line graph is the `i`-th edge of `graph` in
/// lexicographic order.
pub fn line_graph(graph: &Graph) -> Graph {
    let edges: Vec<_> = graph.edges().collect();
    let mut incident = vec![Vec::new(); graph.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut line = Graph::edgeless(edges.len());
    for list in &incident {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                line.insert_edge(i, j);
            }
        }
    }
    line
}

fn unit_interval(x: u64) -> f64 {
    (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Erdős–Rényi `G(n, p)`; see the module docs for the exact sampling rule.
pub fn random_gnp(n: usize, prob: f64, seed: u64) -> Result<Graph> {
    check_prob(prob)?;
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut g = Graph::edgeless(n);
    for u in 0..n {
        for v in u + 1..n {
            if unit_interval(rng.next_u64()) < prob {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Samples `G(n, p)` and repairs it into a K_{1,r}-free graph: while an
/// induced K_{1,r} exists, join the two smallest leaves of the first
/// witness. Edges only grow, so the loop terminates.
pub fn random_star_free(n: usize, prob: f64, r: usize, seed: u64) -> Result<Graph> {
    GeneratorKind::RandomStarFree { n, prob, r }.validate()?;
    let recognizer = Recognizer::default();
    let mut g = random_gnp(n, prob, seed)?;
    while let Some(witness) = recognizer.find_induced_star(&g, r)? {
        g.insert_edge(witness.leaves[0], witness.leaves[1]);
    }
    Ok(g)
}
