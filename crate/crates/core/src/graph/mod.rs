//! Weighted simple graphs, cuts, and the lower bounds the solver is
//! parameterized against.
//!
//! Vertices are `0..n`. Removing vertices never renumbers the graph: the
//! removed ids simply become isolated, which leaves cut weights, `w(G)` and
//! `w_MSF(G)` unchanged.

mod blocks;
mod bounds;

pub use blocks::{block_cut_forest, BlockCutForest};
pub(crate) use blocks::{decompose, Adjacent};
pub use bounds::{
    edwards_erdos_quarters, msf_weight, poljak_turzik_quarters, target_quarters, Quarters,
};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;
pub type Weight = i64;

/// Individual edge weights above this are rejected at ingestion.
pub const MAX_EDGE_WEIGHT: Weight = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge {{{u}, {v}}} has non-positive weight {weight}")]
    NonPositiveWeight { u: Vertex, v: Vertex, weight: Weight },
    #[error("edge {{{u}, {v}}} has weight {weight}, above the 2^32 limit")]
    WeightTooLarge { u: Vertex, v: Vertex, weight: Weight },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
}

/// A simple undirected graph with positive integer edge weights.
///
/// Adjacency lists are kept sorted by neighbor id, so iteration order is
/// deterministic and weight lookups are a binary search.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightedGraph {
    adj: Vec<Vec<(Vertex, Weight)>>,
    m: usize,
    total: Weight,
}

impl WeightedGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        WeightedGraph {
            adj: vec![Vec::new(); n],
            m: 0,
            total: 0,
        }
    }

    /// Builds a simple graph from a multigraph edge list. Parallel edges are
    /// merged by summing their weights.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex, Weight)]) -> Result<Self, GraphError> {
        normalize_multigraph(n, edges.iter().copied())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `w(G)`, the sum of all edge weights.
    pub fn total_weight(&self) -> Weight {
        self.total
    }

    pub fn neighbors(&self, u: Vertex) -> &[(Vertex, Weight)] {
        &self.adj[u]
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.adj[u].len()
    }

    pub fn weight(&self, u: Vertex, v: Vertex) -> Option<Weight> {
        let list = self.adj.get(u)?;
        list.binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.weight(u, v).is_some()
    }

    /// Edges as `(u, v, w)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Weight)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&(v, _)| u < v)
                .map(move |&(v, w)| (u, v, w))
        })
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Same vertex set with every edge touching a `removed` vertex dropped.
    pub fn without<I: IntoIterator<Item = Vertex>>(&self, removed: I) -> WeightedGraph {
        let mut gone = vec![false; self.n()];
        for v in removed {
            if v < gone.len() {
                gone[v] = true;
            }
        }
        let edges: Vec<_> = self
            .edges()
            .filter(|&(u, v, _)| !gone[u] && !gone[v])
            .collect();
        build_simple(self.n(), &edges)
    }

    /// Induced subgraph on `vertices`, relabeled so that `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[Vertex]) -> WeightedGraph {
        let mut index = std::collections::HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            index.insert(v, i);
        }
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for &(v, w) in &self.adj[u] {
                if let Some(&j) = index.get(&v) {
                    if i < j {
                        edges.push((i, j, w));
                    }
                }
            }
        }
        build_simple(vertices.len(), &edges)
    }

    /// Component id per vertex, numbered in order of smallest member.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &(v, _) in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// `w(C)` for `C = side1`.
    pub fn cut_weight(&self, side1: &[Vertex]) -> Result<Weight, GraphError> {
        let mut mask = vec![false; self.n()];
        for &v in side1 {
            self.check_vertex(v)?;
            mask[v] = true;
        }
        Ok(self.cut_weight_mask(&mask))
    }

    pub(crate) fn cut_weight_mask(&self, mask: &[bool]) -> Weight {
        self.edges()
            .filter(|&(u, v, _)| mask[u] != mask[v])
            .map(|(_, _, w)| w)
            .sum()
    }
}

/// Merges parallel edges by summing weights and rejects loops and
/// non-positive weights.
pub fn normalize_multigraph<I>(n: usize, raw: I) -> Result<WeightedGraph, GraphError>
where
    I: IntoIterator<Item = (Vertex, Vertex, Weight)>,
{
    let mut edges = Vec::new();
    for (u, v, w) in raw {
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if w < 1 {
            return Err(GraphError::NonPositiveWeight { u, v, weight: w });
        }
        if w > MAX_EDGE_WEIGHT {
            return Err(GraphError::WeightTooLarge { u, v, weight: w });
        }
        edges.push((u.min(v), u.max(v), w));
    }
    edges.sort_unstable_by_key(|&(u, v, _)| (u, v));
    let mut merged: Vec<(Vertex, Vertex, Weight)> = Vec::with_capacity(edges.len());
    for (u, v, w) in edges {
        match merged.last_mut() {
            Some(last) if last.0 == u && last.1 == v => last.2 += w,
            _ => merged.push((u, v, w)),
        }
    }
    Ok(build_simple(n, &merged))
}

/// `edges` must already be simple.
fn build_simple(n: usize, edges: &[(Vertex, Vertex, Weight)]) -> WeightedGraph {
    let mut adj = vec![Vec::new(); n];
    let mut total = 0;
    for &(u, v, w) in edges {
        adj[u].push((v, w));
        adj[v].push((u, w));
        total += w;
    }
    for list in &mut adj {
        list.sort_unstable_by_key(|&(v, _)| v);
    }
    WeightedGraph {
        adj,
        m: edges.len(),
        total,
    }
}

/// A cut `C ⊆ V` together with its weight `w(C, V \ C)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cut {
    mask: Vec<bool>,
    weight: Weight,
}

impl Cut {
    pub fn new(g: &WeightedGraph, side1: &[Vertex]) -> Result<Self, GraphError> {
        let mut mask = vec![false; g.n()];
        for &v in side1 {
            g.check_vertex(v)?;
            mask[v] = true;
        }
        Ok(Self::from_mask(g, mask))
    }

    pub fn empty(n: usize) -> Self {
        Cut {
            mask: vec![false; n],
            weight: 0,
        }
    }

    pub fn from_mask(g: &WeightedGraph, mask: Vec<bool>) -> Self {
        assert_eq!(mask.len(), g.n(), "cut mask length must equal vertex count");
        let weight = g.cut_weight_mask(&mask);
        Cut { mask, weight }
    }

    /// Caller guarantees that `weight` is the crossing weight of `mask`.
    pub(crate) fn from_parts(mask: Vec<bool>, weight: Weight) -> Self {
        Cut { mask, weight }
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn side1(&self) -> Vec<Vertex> {
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn complement(&self) -> Cut {
        Cut {
            mask: self.mask.iter().map(|b| !b).collect(),
            weight: self.weight,
        }
    }

    /// True if the stored weight matches the crossing weight in `g`.
    pub fn verify(&self, g: &WeightedGraph) -> bool {
        self.mask.len() == g.n() && g.cut_weight_mask(&self.mask) == self.weight
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> WeightedGraph {
        WeightedGraph::from_edges(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap()
    }

    #[test]
    fn parallel_edges_merge() {
        let g = WeightedGraph::from_edges(2, &[(0, 1, 1), (0, 1, 2)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.weight(0, 1), Some(3));
        assert_eq!(g.weight(1, 0), Some(3));
    }

    #[test]
    fn rejects_loops_and_bad_weights() {
        assert_eq!(
            WeightedGraph::from_edges(1, &[(0, 0, 1)]),
            Err(GraphError::SelfLoop(0))
        );
        assert!(matches!(
            WeightedGraph::from_edges(2, &[(0, 1, 0)]),
            Err(GraphError::NonPositiveWeight { .. })
        ));
        assert!(matches!(
            WeightedGraph::from_edges(2, &[(0, 1, MAX_EDGE_WEIGHT + 1)]),
            Err(GraphError::WeightTooLarge { .. })
        ));
        assert!(matches!(
            WeightedGraph::from_edges(2, &[(0, 2, 1)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn empty_edge_list() {
        let g = WeightedGraph::from_edges(3, &[]).unwrap();
        assert_eq!((g.n(), g.m(), g.total_weight()), (3, 0, 0));
    }

    #[test]
    fn cut_weights() {
        assert_eq!(k3().cut_weight(&[0]).unwrap(), 2);
        assert_eq!(k3().cut_weight(&[]).unwrap(), 0);
        let path = WeightedGraph::from_edges(3, &[(0, 1, 3), (1, 2, 1)]).unwrap();
        assert_eq!(path.cut_weight(&[1]).unwrap(), 4);
        assert!(k3().cut_weight(&[5]).is_err());
    }

    #[test]
    fn without_isolates_removed_vertices() {
        let g = k3().without([1]);
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 1);
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn induced_relabels() {
        let path = WeightedGraph::from_edges(4, &[(0, 1, 3), (1, 2, 1), (2, 3, 5)]).unwrap();
        let h = path.induced(&[3, 2]);
        assert_eq!(h.n(), 2);
        assert_eq!(h.weight(0, 1), Some(5));
    }
}
