use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use super::rules::apply_on;
use super::select::select_for_block;
use super::{ReductionError, ReductionStep, Residual};
use crate::graph::{decompose, Vertex, WeightedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    /// Stop as soon as the remaining excess is at most zero.
    Decide,
    /// Reduce until no edges are left.
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionOutcome {
    pub trace: Vec<ReductionStep>,
    /// The marked set `S`, sorted.
    pub marked: Vec<Vertex>,
    pub k_remaining_quarters: i64,
    /// Vertices still present when the loop ended.
    pub residual_vertices: Vec<Vertex>,
    pub stopped_early: bool,
}

/// Applies rules until the graph is edgeless or, in [`Mode::Decide`], until
/// the excess drops to zero.
///
/// Leaf-block rules (2, 3, 4, 5, 7) delete one leaf block minus its cut vertex
/// and update the block structure in place; Rules 1, 6 and 8 recompute the
/// blocks of the touched component.
pub fn reduce(g: &WeightedGraph, k_quarters: i64, mode: Mode) -> Result<ReductionOutcome, ReductionError> {
    let mut res = Residual::new(g);
    let mut store = BlockStore::new(g.n());
    let (blocks, _) = decompose(&res, 0..g.n());
    for b in blocks {
        if b.edges > 0 {
            store.add(b.vertices);
        }
    }
    store.refresh_all();

    let mut k = k_quarters;
    let mut trace = Vec::new();
    let mut marked = vec![false; g.n()];
    let mut stopped_early = false;
    loop {
        if mode == Mode::Decide && k <= 0 {
            stopped_early = true;
            break;
        }
        let Some(id) = store.pop_leaf() else {
            break;
        };
        let block = store.verts[id].clone();
        let cut = block.iter().copied().find(|&u| store.member[u].len() >= 2);
        let v = cut.unwrap_or(block[0]);
        let inst = select_for_block(&res, &block, v, cut.is_some())?;
        let removed = inst.removed();
        let local = matches!(inst.rule_id(), 2 | 3 | 4 | 5 | 7)
            && removed.len() + 1 == block.len()
            && removed.iter().all(|u| block.binary_search(u).is_ok());
        let component = if local { Vec::new() } else { res.component_of(removed[0]) };
        let step = apply_on(&mut res, &inst);
        if local {
            store.drop_leaf(id);
        } else {
            store.rebuild(&res, &component);
        }
        k -= step.k_delta_quarters;
        for &u in &step.marked {
            marked[u] = true;
        }
        trace.push(step);
    }
    Ok(ReductionOutcome {
        trace,
        marked: (0..g.n()).filter(|&u| marked[u]).collect(),
        k_remaining_quarters: k,
        residual_vertices: res.live_vertices(),
        stopped_early,
    })
}

/// Blocks with at least one edge, with per-vertex membership and a count of
/// cut vertices per block so leaf tests are O(1).
struct BlockStore {
    verts: Vec<Vec<Vertex>>,
    alive: Vec<bool>,
    cuts: Vec<usize>,
    member: Vec<Vec<usize>>,
    heap: BinaryHeap<Reverse<(Vertex, usize)>>,
}

impl BlockStore {
    fn new(n: usize) -> Self {
        BlockStore {
            verts: Vec::new(),
            alive: Vec::new(),
            cuts: Vec::new(),
            member: vec![Vec::new(); n],
            heap: BinaryHeap::new(),
        }
    }

    fn add(&mut self, vertices: Vec<Vertex>) -> usize {
        let id = self.verts.len();
        for &u in &vertices {
            self.member[u].push(id);
        }
        self.verts.push(vertices);
        self.alive.push(true);
        self.cuts.push(0);
        id
    }

    fn refresh(&mut self, id: usize) {
        self.cuts[id] = self.verts[id]
            .iter()
            .filter(|&&u| self.member[u].len() >= 2)
            .count();
        if self.cuts[id] <= 1 {
            self.heap.push(Reverse((self.verts[id][0], id)));
        }
    }

    fn refresh_all(&mut self) {
        for id in 0..self.verts.len() {
            self.refresh(id);
        }
    }

    fn is_leaf(&self, id: usize) -> bool {
        self.alive[id] && self.cuts[id] <= 1
    }

    /// The live leaf block with the lexicographically smallest vertex list.
    fn pop_leaf(&mut self) -> Option<usize> {
        let Reverse((min, first)) = loop {
            let top = self.heap.pop()?;
            if self.is_leaf(top.0 .1) {
                break top;
            }
        };
        let mut best = first;
        let mut others = Vec::new();
        while let Some(&Reverse((m, id))) = self.heap.peek() {
            if m != min {
                break;
            }
            self.heap.pop();
            if !self.is_leaf(id) || id == best {
                continue;
            }
            if self.verts[id] < self.verts[best] {
                others.push(best);
                best = id;
            } else {
                others.push(id);
            }
        }
        for id in others {
            self.heap.push(Reverse((min, id)));
        }
        Some(best)
    }

    fn kill(&mut self, id: usize) {
        self.alive[id] = false;
        for i in 0..self.verts[id].len() {
            let u = self.verts[id][i];
            self.member[u].retain(|&b| b != id);
            if let [only] = self.member[u][..] {
                self.cuts[only] -= 1;
                if self.cuts[only] <= 1 {
                    self.heap.push(Reverse((self.verts[only][0], only)));
                }
            }
        }
    }

    fn drop_leaf(&mut self, id: usize) {
        self.kill(id);
    }

    /// Replaces every block touching `component` by the blocks of what is
    /// left of it in `res`.
    fn rebuild(&mut self, res: &Residual<'_>, component: &[Vertex]) {
        let mut stale: Vec<usize> = component
            .iter()
            .flat_map(|&u| self.member[u].iter().copied())
            .collect();
        stale.sort_unstable();
        stale.dedup();
        for id in stale {
            self.alive[id] = false;
            for i in 0..self.verts[id].len() {
                let u = self.verts[id][i];
                self.member[u].retain(|&b| b != id);
            }
        }
        let (blocks, _) = decompose(res, component.iter().copied());
        let fresh: Vec<usize> = blocks
            .into_iter()
            .filter(|b| b.edges > 0)
            .map(|b| self.add(b.vertices))
            .collect();
        for id in fresh {
            self.refresh(id);
        }
    }
}
