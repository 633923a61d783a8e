use std::cell::RefCell;
use std::collections::HashMap;

use crate::graph::{Adjacent, Vertex, Weight, WeightedGraph};

/// A graph under reduction. Deleted vertices keep their ids and stay in the
/// underlying adjacency lists; every accessor skips them.
pub(crate) struct Residual<'g> {
    g: &'g WeightedGraph,
    alive: Vec<bool>,
    /// Reusable visit marks for searches, with the current stamp.
    visit: RefCell<(Vec<u32>, u32)>,
}

impl<'g> Residual<'g> {
    pub fn new(g: &'g WeightedGraph) -> Self {
        Residual {
            g,
            alive: vec![true; g.n()],
            visit: RefCell::new((vec![0; g.n()], 0)),
        }
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn live(&self, u: Vertex) -> bool {
        self.alive[u]
    }

    pub fn neighbors(&self, u: Vertex) -> impl Iterator<Item = (Vertex, Weight)> + '_ {
        self.g
            .neighbors(u)
            .iter()
            .copied()
            .filter(move |&(v, _)| self.alive[v])
    }

    pub fn weight(&self, u: Vertex, v: Vertex) -> Option<Weight> {
        if !self.alive[u] || !self.alive[v] {
            return None;
        }
        self.g.weight(u, v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.weight(u, v).is_some()
    }

    pub fn remove(&mut self, u: Vertex) {
        self.alive[u] = false;
    }

    pub fn live_vertices(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&u| self.alive[u]).collect()
    }

    /// The current graph with deleted vertices isolated.
    pub fn to_graph(&self) -> WeightedGraph {
        self.g.without((0..self.n()).filter(|&u| !self.alive[u]))
    }

    /// Induced subgraph on `vertices` (relabeled by position).
    pub fn induced(&self, vertices: &[Vertex]) -> WeightedGraph {
        let index: HashMap<Vertex, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (v, w) in self.neighbors(u) {
                if let Some(&j) = index.get(&v) {
                    if i < j {
                        edges.push((i, j, w));
                    }
                }
            }
        }
        WeightedGraph::from_edges(vertices.len(), &edges).expect("induced subgraph is simple")
    }

    /// Live vertices of the component containing `start`.
    pub fn component_of(&self, start: Vertex) -> Vec<Vertex> {
        let mut comp = self.bfs(start, &[]);
        comp.sort_unstable();
        comp
    }

    /// Vertices reachable from `start` without entering `banned`, in visit
    /// order.
    fn bfs(&self, start: Vertex, banned: &[Vertex]) -> Vec<Vertex> {
        if !self.alive[start] || banned.contains(&start) {
            return Vec::new();
        }
        let mut visit = self.visit.borrow_mut();
        let (marks, stamp) = &mut *visit;
        *stamp += 1;
        if *stamp == u32::MAX {
            marks.iter_mut().for_each(|m| *m = 0);
            *stamp = 1;
        }
        let stamp = *stamp;
        for &b in banned {
            marks[b] = stamp;
        }
        marks[start] = stamp;
        let mut order = vec![start];
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for (v, _) in self.neighbors(u) {
                if marks[v] != stamp {
                    marks[v] = stamp;
                    order.push(v);
                }
            }
        }
        order
    }

    pub fn connected_without(&self, anchor: Vertex, banned: &[Vertex]) -> bool {
        let comp = self.bfs(anchor, &[]);
        let mut rest = comp.iter().filter(|v| !banned.contains(v));
        let Some(&s) = rest.next() else {
            return true;
        };
        let expected = 1 + rest.count();
        self.bfs(s, banned).len() == expected
    }

    pub fn components_without(&self, anchor: Vertex, banned: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut comp = self.bfs(anchor, &[]);
        comp.sort_unstable();
        let mut taken = vec![false; comp.len()];
        let mut out = Vec::new();
        for i in 0..comp.len() {
            if taken[i] || banned.contains(&comp[i]) {
                continue;
            }
            let mut part = self.bfs(comp[i], banned);
            part.sort_unstable();
            for v in &part {
                if let Ok(j) = comp.binary_search(v) {
                    taken[j] = true;
                }
            }
            out.push(part);
        }
        out
    }
}

impl Adjacent for Residual<'_> {
    fn vertex_count(&self) -> usize {
        self.g.n()
    }
    fn raw_neighbors(&self, u: Vertex) -> &[(Vertex, Weight)] {
        self.g.neighbors(u)
    }
    fn is_live(&self, u: Vertex) -> bool {
        self.alive[u]
    }
}
