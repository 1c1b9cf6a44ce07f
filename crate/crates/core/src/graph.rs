//! Simple undirected graphs, vertex sets and the feasibility predicates of
//! the three covering/packing problems.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertices are dense indices `0..n`.
pub type Vertex = usize;

/// Simple undirected graph without loops or parallel edges.
///
/// Adjacency is kept twice: one bit row per vertex for `O(1)` adjacency
/// queries, and a sorted neighbor list for iteration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Graph on `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Self {
        Self { rows: vec![FixedBitSet::with_capacity(n); n], adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) collapse into one; self-loops are rejected.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::edgeless(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Adds `{u, v}` if absent. Callers guarantee `u != v` and both in range.
    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        debug_assert!(u != v);
        if self.rows[u].contains(v) {
            return false;
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.m += 1;
        true
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.universe() == self.n() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch { left: self.n(), right: set.universe() })
        }
    }

    /// Open neighborhood `N(v)`.
    pub fn neighborhood(&self, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet { bits: self.rows[v].clone() })
    }

    /// Subgraph induced by `set`, relabeled to `0..|set|` in increasing order
    /// of the original labels. The returned map sends new labels to old ones.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        self.check_set(set)?;
        let map: Vec<Vertex> = set.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (new, &old) in map.iter().enumerate() {
            index[old] = new;
        }
        let mut sub = Graph::edgeless(map.len());
        for (new, &old) in map.iter().enumerate() {
            for &w in &self.adj[old] {
                let j = index[w];
                if j != usize::MAX && j > new {
                    sub.insert_edge(new, j);
                }
            }
        }
        Ok((sub, map))
    }

    /// True iff no edge has both endpoints in `set`.
    pub fn is_independent(&self, set: &VertexSet) -> Result<bool> {
        self.check_set(set)?;
        Ok(set.iter().all(|v| self.rows[v].is_disjoint(&set.bits)))
    }

    /// True iff every vertex outside `set` has a neighbor in `set`.
    pub fn is_dominating(&self, set: &VertexSet) -> Result<bool> {
        self.check_set(set)?;
        Ok(self.vertices().all(|v| set.contains(v) || !self.rows[v].is_disjoint(&set.bits)))
    }

    pub fn is_feasible(&self, kind: ProblemKind, set: &VertexSet) -> Result<bool> {
        Ok(match kind {
            ProblemKind::Mds => self.is_dominating(set)?,
            ProblemKind::Mis => self.is_independent(set)?,
            ProblemKind::Mids => self.is_independent(set)? && self.is_dominating(set)?,
        })
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut g = Graph::edgeless(offset + other.n());
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + offset, v + offset);
        }
        g
    }
}

/// A subset of the vertices `0..n` of some graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        Self { bits: FixedBitSet::with_capacity(n) }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        Self { bits }
    }

    pub fn from_vertices<I>(n: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut set = Self::empty(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            set.bits.insert(v);
        }
        Ok(set)
    }

    /// Size of the vertex universe this set lives in.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    /// Inserts `v`; returns false if it was already present. Panics if `v`
    /// is outside the universe.
    pub fn insert(&mut self, v: Vertex) -> bool {
        !self.bits.put(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        let was = self.bits.contains(v);
        self.bits.set(v, false);
        was
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    fn same_universe(&self, other: &VertexSet) -> Result<()> {
        if self.universe() == other.universe() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch { left: self.universe(), right: other.universe() })
        }
    }

    pub fn union(&self, other: &VertexSet) -> Result<VertexSet> {
        self.same_universe(other)?;
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(VertexSet { bits })
    }

    pub fn intersection(&self, other: &VertexSet) -> Result<VertexSet> {
        self.same_universe(other)?;
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Ok(VertexSet { bits })
    }

    pub fn difference(&self, other: &VertexSet) -> Result<VertexSet> {
        self.same_universe(other)?;
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Ok(VertexSet { bits })
    }

    /// `(S ∪ L) \ (S ∩ L)`.
    pub fn symmetric_difference(&self, other: &VertexSet) -> Result<VertexSet> {
        self.same_universe(other)?;
        let mut bits = self.bits.clone();
        bits.symmetric_difference_with(&other.bits);
        Ok(VertexSet { bits })
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Optimization direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sense {
    Min,
    Max,
}

/// The three problems: minimum dominating set, maximum independent set,
/// minimum independent dominating set. The objective is always `|S|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    Mds,
    Mis,
    Mids,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 3] = [ProblemKind::Mds, ProblemKind::Mis, ProblemKind::Mids];

    pub fn sense(self) -> Sense {
        match self {
            ProblemKind::Mis => Sense::Max,
            ProblemKind::Mds | ProblemKind::Mids => Sense::Min,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ProblemKind::Mds => "mds",
            ProblemKind::Mis => "mis",
            ProblemKind::Mids => "mids",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mds" => Ok(ProblemKind::Mds),
            "mis" => Ok(ProblemKind::Mis),
            "mids" => Ok(ProblemKind::Mids),
            other => Err(Error::InvalidParameter(format!("unknown problem `{other}`"))),
        }
    }
}

/// How a solution was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Exact,
    Greedy,
    LocalSearch { t: usize },
    Loaded,
}

/// A feasible solution of a problem on a particular graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    problem: ProblemKind,
    set: VertexSet,
    provenance: Provenance,
}

impl Solution {
    /// Wraps `set` after checking it is feasible for `problem` on `graph`.
    pub fn new(graph: &Graph, problem: ProblemKind, set: VertexSet, provenance: Provenance) -> Result<Self> {
        if !graph.is_feasible(problem, &set)? {
            return Err(Error::Infeasible(problem));
        }
        Ok(Self { problem, set, provenance })
    }

    pub fn problem(&self) -> ProblemKind {
        self.problem
    }

    pub fn set(&self) -> &VertexSet {
        &self.set
    }

    pub fn into_set(self) -> VertexSet {
        self.set
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Objective value, the cardinality of the set.
    pub fn value(&self) -> usize {
        self.set.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    fn p3() -> Graph {
        Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn claw() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn c5() -> Graph {
        Graph::from_edge_list(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let g = p3();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert!(g.adjacent(0, 1) && g.adjacent(1, 0) && !g.adjacent(0, 2));
        let g = claw();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
        let dup = Graph::from_edge_list(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.m(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(Graph::from_edge_list(2, [(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(Graph::from_edge_list(2, [(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 })));
    }

    #[test]
    fn neighborhoods() {
        assert_eq!(claw().neighborhood(0).unwrap().to_vec(), vec![1, 2, 3]);
        assert_eq!(p3().neighborhood(1).unwrap().to_vec(), vec![0, 2]);
        assert!(Graph::edgeless(2).neighborhood(1).unwrap().is_empty());
        assert!(p3().neighborhood(3).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let g = claw();
        let (sub, map) = g.induced_subgraph(&g.neighborhood(0).unwrap()).unwrap();
        assert_eq!((sub.n(), sub.m()), (3, 0));
        assert_eq!(map, vec![1, 2, 3]);

        let (sub, map) = c5().induced_subgraph(&set(5, &[1, 2, 3])).unwrap();
        assert_eq!(sub, p3());
        assert_eq!(map, vec![1, 2, 3]);

        let (sub, map) = c5().induced_subgraph(&VertexSet::empty(5)).unwrap();
        assert_eq!(sub.n(), 0);
        assert!(map.is_empty());

        assert!(c5().induced_subgraph(&VertexSet::empty(4)).is_err());
    }

    #[test]
    fn independence_and_domination() {
        assert!(claw().is_independent(&set(4, &[1, 2, 3])).unwrap());
        assert!(!p3().is_independent(&set(3, &[0, 1])).unwrap());
        assert!(c5().is_independent(&VertexSet::empty(5)).unwrap());

        assert!(claw().is_dominating(&set(4, &[0])).unwrap());
        assert!(!p3().is_dominating(&set(3, &[0])).unwrap());
        let g = Graph::from_edge_list(3, [(0, 1)]).unwrap();
        assert!(!g.is_dominating(&set(3, &[0, 1])).unwrap());
    }

    #[test]
    fn feasibility() {
        assert!(claw().is_feasible(ProblemKind::Mids, &set(4, &[0])).unwrap());
        assert!(!claw().is_feasible(ProblemKind::Mids, &set(4, &[1])).unwrap());
        assert!(c5().is_feasible(ProblemKind::Mis, &set(5, &[0, 2])).unwrap());
        let empty = Graph::edgeless(0);
        for kind in ProblemKind::ALL {
            assert!(empty.is_feasible(kind, &VertexSet::empty(0)).unwrap());
        }
    }

    #[test]
    fn set_algebra() {
        let a = set(4, &[0, 1]);
        let b = set(4, &[1, 2]);
        assert_eq!(a.symmetric_difference(&b).unwrap(), set(4, &[0, 2]));
        assert_eq!(a.symmetric_difference(&VertexSet::empty(4)).unwrap(), a);
        assert!(a.symmetric_difference(&a).unwrap().is_empty());
        assert!(matches!(
            a.symmetric_difference(&VertexSet::empty(5)),
            Err(Error::UniverseMismatch { left: 4, right: 5 })
        ));
        assert_eq!(a.union(&b).unwrap().len(), 3);
        assert_eq!(a.intersection(&b).unwrap(), set(4, &[1]));
        assert_eq!(VertexSet::full(3).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn sense_follows_kind() {
        assert_eq!(ProblemKind::Mis.sense(), Sense::Max);
        assert_eq!(ProblemKind::Mds.sense(), Sense::Min);
        assert_eq!(ProblemKind::Mids.sense(), Sense::Min);
        assert_eq!("MIDS".parse::<ProblemKind>().unwrap(), ProblemKind::Mids);
    }

    #[test]
    fn solution_rejects_infeasible() {
        let g = p3();
        assert!(Solution::new(&g, ProblemKind::Mds, set(3, &[0]), Provenance::Loaded).is_err());
        let s = Solution::new(&g, ProblemKind::Mds, set(3, &[1]), Provenance::Loaded).unwrap();
        assert_eq!(s.value(), 1);
    }
}
