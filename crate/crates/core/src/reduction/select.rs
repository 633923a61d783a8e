//! Leaf-block classification and the case analysis that turns a leaf block
//! into an applicable rule.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::rules::{block_witness_ok, check_on, local_stats};
use super::{ReductionError, Residual, RuleInstance};
use crate::graph::{decompose, BlockCutForest, Vertex, Weight, WeightedGraph};

/// Which structural property a leaf block `X ∪ {v}` has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LeafProperty {
    /// `G[X ∪ {v}]` is a clique.
    A,
    /// `G[X]` is a clique, `G[X ∪ {v}]` is not.
    B,
    /// `v` has exactly the two non-adjacent neighbors `x`, `y` in `X`, and
    /// `G[X]` misses only the edge `{x, y}`.
    C { x: Vertex, y: Vertex },
    /// An induced path `a – b – c` whose removal keeps the component connected.
    D { a: Vertex, b: Vertex, c: Vertex },
}

/// Classifies the leaf block `rest ∪ {v}` with cut vertex `v`.
pub fn classify_leaf_block(
    g: &WeightedGraph,
    rest: &[Vertex],
    v: Vertex,
) -> Result<LeafProperty, ReductionError> {
    g.check_vertex(v)?;
    for &u in rest {
        g.check_vertex(u)?;
    }
    let res = Residual::new(g);
    if block_witness_ok(&res, rest, v).is_none() {
        return Err(ReductionError::NotALeafBlock);
    }
    let mut block = rest.to_vec();
    block.push(v);
    block.sort_unstable();
    let has_outside = g.degree(v) > local_stats(&res, rest, v).v_neighbors.len();
    classify(&res, &block, v, has_outside).ok_or(ReductionError::NotALeafBlock)
}

/// Picks the rule for the leaf block with the smallest vertex list.
pub fn select_rule(g: &WeightedGraph, bcf: &BlockCutForest) -> Result<RuleInstance, ReductionError> {
    let id = bcf
        .leaf_blocks
        .iter()
        .copied()
        .filter(|&b| bcf.block_edges[b] > 0)
        .min_by(|&a, &b| bcf.blocks[a].cmp(&bcf.blocks[b]))
        .ok_or(ReductionError::NoEdges)?;
    let block = &bcf.blocks[id];
    let cut = bcf.leaf_cut_vertex(id);
    let v = cut.unwrap_or(block[0]);
    select_for_block(&Residual::new(g), block, v, cut.is_some())
}

fn classify(res: &Residual<'_>, block: &[Vertex], v: Vertex, has_outside: bool) -> Option<LeafProperty> {
    let rest: Vec<Vertex> = block.iter().copied().filter(|&u| u != v).collect();
    let s = local_stats(res, &rest, v);
    if s.is_clique(block.len()) {
        return Some(LeafProperty::A);
    }
    if s.rest_is_clique(rest.len()) {
        return Some(LeafProperty::B);
    }
    if let [x, y] = s.v_neighbors[..] {
        if !res.has_edge(x, y) && s.edges_rest + 1 == rest.len() * (rest.len() - 1) / 2 {
            return Some(LeafProperty::C { x, y });
        }
    }
    let mut first = None;
    for_each_triple(res, block, v, has_outside, |a, b, c| {
        first = Some(LeafProperty::D { a, b, c });
        true
    });
    first
}

/// Calls `f` on every induced path `a – b – c` inside the block whose removal
/// keeps the component connected, in lexicographic `(b, a, c)` order, until
/// `f` returns true. The cut vertex is avoided when the block has outside
/// neighbors; for a whole component it is tried last.
fn for_each_triple(
    res: &Residual<'_>,
    block: &[Vertex],
    v: Vertex,
    has_outside: bool,
    mut f: impl FnMut(Vertex, Vertex, Vertex) -> bool,
) -> bool {
    let inside: HashSet<Vertex> = block.iter().copied().collect();
    let passes: &[bool] = if has_outside { &[false] } else { &[false, true] };
    for &allow_v in passes {
        for &b in block {
            let nb: Vec<Vertex> = res
                .neighbors(b)
                .map(|(u, _)| u)
                .filter(|u| inside.contains(u))
                .collect();
            for (i, &a) in nb.iter().enumerate() {
                for &c in &nb[i + 1..] {
                    let uses_v = a == v || b == v || c == v;
                    if uses_v != allow_v && (allow_v || uses_v) {
                        continue;
                    }
                    if res.has_edge(a, c) || !res.connected_without(b, &[a, b, c]) {
                        continue;
                    }
                    if f(a, b, c) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

pub(crate) fn select_for_block(
    res: &Residual<'_>,
    block: &[Vertex],
    v: Vertex,
    has_outside: bool,
) -> Result<RuleInstance, ReductionError> {
    let rest: Vec<Vertex> = block.iter().copied().filter(|&u| u != v).collect();
    let s = local_stats(res, &rest, v);
    let failed = || ReductionError::SelectionFailed(block.to_vec());
    let valid = |inst: RuleInstance| check_on(res, &inst).then_some(inst);
    let prop = classify(res, block, v, has_outside).ok_or_else(failed)?;
    let found = match prop {
        LeafProperty::A => {
            if s.uniform() {
                valid(RuleInstance::Rule2 { rest, v })
            } else if s.rest_uniform() {
                valid(RuleInstance::Rule3 { rest, v })
            } else {
                rule1_scan(res, &rest, None, None)
            }
        }
        LeafProperty::B => {
            if s.rest_uniform() {
                valid(RuleInstance::Rule4 { rest, v })
            } else if let [x0, y0] = s.v_neighbors[..] {
                rule1_scan(res, &rest, Some(v), Some((x0, y0))).or_else(|| {
                    let c = rest_weight_other_than(res, &rest, (x0, y0))?;
                    valid(RuleInstance::Rule5 {
                        rest: rest.clone(),
                        v,
                        x: x0,
                        y: y0,
                        c,
                    })
                })
            } else {
                rule1_scan(res, &rest, None, None)
            }
        }
        LeafProperty::C { x, y } => {
            if s.rest_uniform() {
                let component: Vec<Vertex> =
                    rest.iter().copied().filter(|&u| u != x && u != y).collect();
                valid(RuleInstance::Rule8 {
                    component,
                    x,
                    y,
                    v,
                    c: s.min_rest,
                })
            } else {
                rule1_scan(res, &rest, None, None)
            }
        }
        LeafProperty::D { .. } => {
            let mut out = None;
            for_each_triple(res, block, v, has_outside, |a, b, c| {
                out = property_d(res, block, v, has_outside, a, b, c);
                out.is_some()
            });
            out
        }
    };
    found.ok_or_else(failed)
}

/// First Rule 1 instance on an edge `{p, q}` of `G[rest]` in lexicographic
/// order, comparing against the lightest edge at the shared endpoint inside
/// `rest` (plus `extra` if given). Skips the pair `avoid`.
fn rule1_scan(
    res: &Residual<'_>,
    rest: &[Vertex],
    extra: Option<Vertex>,
    avoid: Option<(Vertex, Vertex)>,
) -> Option<RuleInstance> {
    let inside: HashSet<Vertex> = rest.iter().copied().collect();
    let in_scope = |u: Vertex| inside.contains(&u) || Some(u) == extra;
    let mut lightest: HashMap<Vertex, (Weight, Vertex)> = HashMap::new();
    for &p in rest {
        let best = res
            .neighbors(p)
            .filter(|&(u, _)| in_scope(u))
            .map(|(u, w)| (w, u))
            .min();
        if let Some(b) = best {
            lightest.insert(p, b);
        }
    }
    let avoid = avoid.map(|(a, b)| (a.min(b), a.max(b)));
    let mut sorted = rest.to_vec();
    sorted.sort_unstable();
    for &p in &sorted {
        for (q, w) in res.neighbors(p) {
            if q <= p || !inside.contains(&q) || avoid == Some((p, q)) {
                continue;
            }
            for (y, x) in [(p, q), (q, p)] {
                let (lw, z) = lightest[&y];
                if w > lw {
                    let inst = RuleInstance::Rule1 { x, y, z };
                    if check_on(res, &inst) {
                        return Some(inst);
                    }
                }
            }
        }
    }
    None
}

fn rest_weight_other_than(res: &Residual<'_>, rest: &[Vertex], pair: (Vertex, Vertex)) -> Option<Weight> {
    let inside: HashSet<Vertex> = rest.iter().copied().collect();
    let pair = (pair.0.min(pair.1), pair.0.max(pair.1));
    rest.iter().find_map(|&p| {
        res.neighbors(p)
            .find(|&(q, _)| inside.contains(&q) && (p.min(q), p.max(q)) != pair)
            .map(|(_, w)| w)
    })
}

/// The Property D cascade: Rule 1 on an unbalanced path, Rule 6, Rule 1 on a
/// heavy edge leaving the path, and finally Rule 7.
fn property_d(
    res: &Residual<'_>,
    block: &[Vertex],
    v: Vertex,
    has_outside: bool,
    a: Vertex,
    b: Vertex,
    c: Vertex,
) -> Option<RuleInstance> {
    let (ab, bc) = (res.weight(a, b)?, res.weight(b, c)?);
    if ab != bc {
        let (x, z) = if ab > bc { (a, c) } else { (c, a) };
        let inst = RuleInstance::Rule1 { x, y: b, z };
        return check_on(res, &inst).then_some(inst);
    }
    let six = RuleInstance::Rule6 { a, b, c };
    if check_on(res, &six) {
        return Some(six);
    }
    let path = [a, b, c];
    for u in path {
        let others: Vec<Vertex> = block.iter().copied().filter(|&t| t != u).collect();
        let h = res.induced(&others);
        let (_, articulation) = decompose(&h, 0..h.n());
        for (i, &z) in others.iter().enumerate() {
            if path.contains(&z) || !res.has_edge(u, z) || articulation[i] {
                continue;
            }
            if has_outside && z == v {
                continue;
            }
            let inst = RuleInstance::Rule1 {
                x: z,
                y: u,
                z: if u == b { a } else { b },
            };
            if check_on(res, &inst) {
                return Some(inst);
            }
        }
    }
    let boundary: HashSet<Vertex> = path
        .iter()
        .flat_map(|&u| res.neighbors(u))
        .map(|(q, _)| q)
        .filter(|q| !path.contains(q))
        .collect();
    if boundary.len() == 1 {
        let z = *boundary.iter().next().unwrap();
        let inst = RuleInstance::Rule7 { v: z, a, b, c };
        return check_on(res, &inst).then_some(inst);
    }
    None
}
