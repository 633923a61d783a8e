//! Preconditions and effects of Rules 1–8.
//!
//! Connectivity conditions are evaluated on the connected component that
//! contains the witnesses; other components are ignored.

use std::collections::HashSet;

use super::{ReductionError, ReductionStep, Residual, RuleInstance};
use crate::graph::{decompose, Vertex, Weight, WeightedGraph};

/// Whether every precondition of `inst` holds in `g`.
pub fn check_rule(g: &WeightedGraph, inst: &RuleInstance) -> Result<bool, ReductionError> {
    for v in inst.vertices() {
        g.check_vertex(v)?;
    }
    Ok(check_on(&Residual::new(g), inst))
}

/// Applies `inst` to `g`. Removed vertices stay in the returned graph as
/// isolated ids. Returns the reduced graph, the step record and the new excess.
pub fn apply_rule(
    g: &WeightedGraph,
    inst: &RuleInstance,
    k_quarters: i64,
) -> Result<(WeightedGraph, ReductionStep, i64), ReductionError> {
    if !check_rule(g, inst)? {
        return Err(ReductionError::PreconditionViolated(inst.rule_id()));
    }
    let mut res = Residual::new(g);
    let step = apply_on(&mut res, inst);
    let k = k_quarters - step.k_delta_quarters;
    Ok((res.to_graph(), step, k))
}

pub(crate) fn apply_on(res: &mut Residual<'_>, inst: &RuleInstance) -> ReductionStep {
    let removed = inst.removed();
    let gone: HashSet<Vertex> = removed.iter().copied().collect();
    let mut payload = Vec::new();
    for &r in &removed {
        for (u, w) in res.neighbors(r) {
            if !gone.contains(&u) || r < u {
                payload.push((r.min(u), r.max(u), w));
            }
        }
    }
    payload.sort_unstable();
    for &r in &removed {
        res.remove(r);
    }
    ReductionStep {
        instance: inst.clone(),
        removed,
        marked: inst.marked(),
        k_delta_quarters: inst.k_delta_quarters(),
        payload,
    }
}

fn distinct_live(res: &Residual<'_>, vs: &[Vertex]) -> bool {
    let set: HashSet<_> = vs.iter().collect();
    set.len() == vs.len() && vs.iter().all(|&v| v < res.n() && res.live(v))
}

fn pairs(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Edge statistics of `G[rest ∪ {v}]`, gathered from the `rest` side only so
/// the cost is independent of the degree of `v`.
#[derive(Debug)]
pub(crate) struct LocalStats {
    pub edges_all: usize,
    pub edges_rest: usize,
    /// Neighbors of `v` inside `rest`, ascending.
    pub v_neighbors: Vec<Vertex>,
    pub min_all: Weight,
    pub max_all: Weight,
    pub min_rest: Weight,
    pub max_rest: Weight,
    /// Some vertex of `rest` has a neighbor outside `rest ∪ {v}`.
    pub escapes: bool,
}

impl LocalStats {
    pub fn is_clique(&self, size: usize) -> bool {
        self.edges_all == pairs(size)
    }
    pub fn rest_is_clique(&self, rest_len: usize) -> bool {
        self.edges_rest == pairs(rest_len)
    }
    pub fn uniform(&self) -> bool {
        self.edges_all == 0 || self.min_all == self.max_all
    }
    pub fn rest_uniform(&self) -> bool {
        self.edges_rest == 0 || self.min_rest == self.max_rest
    }
}

pub(crate) fn local_stats(res: &Residual<'_>, rest: &[Vertex], v: Vertex) -> LocalStats {
    let inside: HashSet<Vertex> = rest.iter().copied().collect();
    let mut s = LocalStats {
        edges_all: 0,
        edges_rest: 0,
        v_neighbors: Vec::new(),
        min_all: Weight::MAX,
        max_all: Weight::MIN,
        min_rest: Weight::MAX,
        max_rest: Weight::MIN,
        escapes: false,
    };
    for &x in rest {
        for (y, w) in res.neighbors(x) {
            if y == v {
                s.v_neighbors.push(x);
            } else if inside.contains(&y) {
                if y < x {
                    continue;
                }
                s.edges_rest += 1;
                s.min_rest = s.min_rest.min(w);
                s.max_rest = s.max_rest.max(w);
            } else {
                s.escapes = true;
                continue;
            }
            s.edges_all += 1;
            s.min_all = s.min_all.min(w);
            s.max_all = s.max_all.max(w);
        }
    }
    s.v_neighbors.sort_unstable();
    s
}

/// `rest ∪ {v}` is a leaf block of the live graph with cut vertex `v` (or a
/// whole biconnected component, with `v` arbitrary).
fn is_leaf_block(res: &Residual<'_>, rest: &[Vertex], v: Vertex, stats: &LocalStats) -> bool {
    if rest.is_empty() || stats.escapes || stats.v_neighbors.is_empty() {
        return false;
    }
    let size = rest.len() + 1;
    if stats.is_clique(size) {
        return true;
    }
    let mut all = rest.to_vec();
    all.push(v);
    let h = res.induced(&all);
    let (blocks, _) = decompose(&h, 0..1);
    blocks.len() == 1 && blocks[0].vertices.len() == size
}

pub(crate) fn block_witness_ok(res: &Residual<'_>, rest: &[Vertex], v: Vertex) -> Option<LocalStats> {
    let mut all = rest.to_vec();
    all.push(v);
    if !distinct_live(res, &all) {
        return None;
    }
    let stats = local_stats(res, rest, v);
    is_leaf_block(res, rest, v, &stats).then_some(stats)
}

pub(crate) fn check_on(res: &Residual<'_>, inst: &RuleInstance) -> bool {
    use RuleInstance::*;
    match inst {
        Rule1 { x, y, z } => {
            let (x, y, z) = (*x, *y, *z);
            if !distinct_live(res, &[x, y, z]) {
                return false;
            }
            match (res.weight(x, y), res.weight(y, z)) {
                (Some(heavy), Some(light)) if heavy > light => res.connected_without(y, &[x, y]),
                _ => false,
            }
        }
        Rule2 { rest, v } => {
            if rest.is_empty() || !distinct_live(res, &[rest.as_slice(), &[*v]].concat()) {
                return false;
            }
            let s = local_stats(res, rest, *v);
            !s.escapes && s.is_clique(rest.len() + 1) && s.uniform()
        }
        Rule3 { rest, v } => match block_witness_ok(res, rest, *v) {
            Some(s) => s.is_clique(rest.len() + 1) && s.rest_uniform() && !s.uniform(),
            None => false,
        },
        Rule4 { rest, v } => match block_witness_ok(res, rest, *v) {
            Some(s) => {
                s.v_neighbors.len() >= 2
                    && s.rest_is_clique(rest.len())
                    && s.rest_uniform()
                    && !s.is_clique(rest.len() + 1)
            }
            None => false,
        },
        Rule5 { rest, v, x, y, c } => {
            let Some(s) = block_witness_ok(res, rest, *v) else {
                return false;
            };
            let (x, y, c, v) = (*x, *y, *c, *v);
            // The extension needs at least one clique vertex besides x and y.
            if rest.len() < 3 || x == y || !rest.contains(&x) || !rest.contains(&y) {
                return false;
            }
            if !s.rest_is_clique(rest.len()) || s.v_neighbors != sorted2(x, y) {
                return false;
            }
            let xy_heavier = res.weight(x, y).is_some_and(|w| w > c);
            let xy = sorted_pair(x, y);
            let others_c = rest.iter().all(|&p| {
                res.neighbors(p)
                    .all(|(q, w)| q == v || sorted_pair(p, q) == xy || w == c)
            });
            xy_heavier
                && others_c
                && res.weight(v, x).is_some_and(|w| w >= c)
                && res.weight(v, y).is_some_and(|w| w >= c)
        }
        Rule6 { a, b, c } => {
            let (a, b, c) = (*a, *b, *c);
            if !distinct_live(res, &[a, b, c]) || res.has_edge(a, c) {
                return false;
            }
            let (Some(ab), Some(bc)) = (res.weight(a, b), res.weight(b, c)) else {
                return false;
            };
            if ab != bc || !res.connected_without(b, &[a, b, c]) {
                return false;
            }
            let boundary_min = [a, b, c]
                .iter()
                .flat_map(|&u| res.neighbors(u))
                .filter(|&(q, _)| q != a && q != b && q != c)
                .map(|(_, w)| w)
                .min();
            boundary_min.is_some_and(|m| 2 * ab > m)
        }
        Rule7 { v, a, b, c } => {
            let (v, a, b, c) = (*v, *a, *b, *c);
            if block_witness_ok(res, &[a, b, c], v).is_none() || res.has_edge(a, c) {
                return false;
            }
            let w = |p, q| res.weight(p, q);
            let (Some(ab), Some(bc), Some(av), Some(cv)) = (w(a, b), w(b, c), w(a, v), w(c, v))
            else {
                return false;
            };
            ab == bc
                && av >= 2 * ab
                && cv >= 2 * ab
                && w(b, v).is_none_or(|bv| bv >= 2 * ab)
        }
        Rule8 {
            component,
            x,
            y,
            v,
            c,
        } => {
            let (x, y, v, c) = (*x, *y, *v, *c);
            let mut all = component.clone();
            all.extend([x, y, v]);
            if component.is_empty() || !distinct_live(res, &all) || res.has_edge(x, y) {
                return false;
            }
            let parts = res.components_without(x, &[x, y]);
            let mut comp_sorted = component.clone();
            comp_sorted.sort_unstable();
            if parts.len() != 2 || !parts.contains(&comp_sorted) {
                return false;
            }
            let other = parts.iter().find(|p| **p != comp_sorted).unwrap();
            if other.binary_search(&v).is_err() {
                return false;
            }
            // G[X ∪ {x}] and G[X ∪ {y}] are c-uniform cliques.
            for &p in component {
                let mut inner = 0;
                for (q, w) in res.neighbors(p) {
                    if w != c {
                        return false;
                    }
                    if comp_sorted.binary_search(&q).is_ok() {
                        inner += 1;
                    }
                }
                if inner != component.len() - 1 || !res.has_edge(p, x) || !res.has_edge(p, y) {
                    return false;
                }
            }
            // The only neighbor of x and of y on the other side is v.
            [x, y].iter().all(|&e| {
                let outside: Vec<_> = res
                    .neighbors(e)
                    .map(|(q, _)| q)
                    .filter(|q| comp_sorted.binary_search(q).is_err())
                    .collect();
                outside == [v]
            })
        }
    }
}

fn sorted_pair(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    (a.min(b), a.max(b))
}

fn sorted2(a: Vertex, b: Vertex) -> Vec<Vertex> {
    vec![a.min(b), a.max(b)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use RuleInstance::*;

    fn g(n: usize, e: &[(usize, usize, i64)]) -> WeightedGraph {
        WeightedGraph::from_edges(n, e).unwrap()
    }

    fn unit(n: usize, e: &[(usize, usize)]) -> WeightedGraph {
        g(n, &e.iter().map(|&(u, v)| (u, v, 1)).collect::<Vec<_>>())
    }

    fn clique(n: usize, w: i64) -> WeightedGraph {
        let mut e = vec![];
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v, w));
            }
        }
        g(n, &e)
    }

    fn c5() -> WeightedGraph {
        unit(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    }

    #[test]
    fn rule1_examples() {
        let path = g(3, &[(0, 1, 3), (1, 2, 1)]);
        assert!(check_rule(&path, &Rule1 { x: 0, y: 1, z: 2 }).unwrap());
        assert!(!check_rule(&clique(3, 1), &Rule1 { x: 0, y: 1, z: 2 }).unwrap());
        let (gp, step, k) = apply_rule(&path, &Rule1 { x: 0, y: 1, z: 2 }, 8).unwrap();
        assert_eq!(gp.m(), 0);
        assert_eq!(step.marked, vec![0, 1]);
        assert_eq!(k, 7);
    }

    #[test]
    fn rule1_needs_connected_remainder() {
        // removing {1, 2} from the path 0-1-2-3 disconnects 0 from 3
        let path = g(4, &[(0, 1, 1), (1, 2, 3), (2, 3, 1)]);
        assert!(!check_rule(&path, &Rule1 { x: 2, y: 1, z: 0 }).unwrap());
    }

    #[test]
    fn rule2_example() {
        let k4 = clique(4, 3);
        let inst = Rule2 {
            rest: vec![1, 2, 3],
            v: 0,
        };
        let (gp, step, k) = apply_rule(&k4, &inst, 4).unwrap();
        assert_eq!(gp.m(), 0);
        assert!(step.marked.is_empty());
        assert_eq!(k, 4);
        assert_eq!(step.removed_weight(), 18);
    }

    #[test]
    fn rule2_rejects_non_leaf() {
        // the triangle 0,1,2 hangs off 2, so {0,1,2} minus 0 is not a leaf with cut vertex 0
        let gr = unit(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert!(!check_rule(&gr, &Rule2 { rest: vec![1, 2], v: 0 }).unwrap());
        assert!(check_rule(&gr, &Rule2 { rest: vec![0, 1], v: 2 }).unwrap());
    }

    #[test]
    fn rule6_example() {
        let inst = Rule6 { a: 1, b: 2, c: 3 };
        assert!(check_rule(&c5(), &inst).unwrap());
        let (gp, step, k) = apply_rule(&c5(), &inst, 4).unwrap();
        assert_eq!(gp.m(), 1);
        assert!(gp.has_edge(0, 4));
        assert_eq!(step.marked, vec![1, 2, 3]);
        assert_eq!(k, 3);
    }

    #[test]
    fn rule3_4_5_7_8() {
        let mut e = vec![];
        for u in 0..4 {
            for v in u + 1..4 {
                e.push((u, v, if (u, v) == (0, 1) { 2 } else { 1 }));
            }
        }
        let r3 = g(4, &e);
        assert!(check_rule(&r3, &Rule3 { rest: vec![1, 2, 3], v: 0 }).unwrap());

        let r4 = unit(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert!(check_rule(&r4, &Rule4 { rest: vec![1, 2, 3], v: 0 }).unwrap());

        let r5 = g(4, &[(0, 1, 1), (0, 2, 1), (1, 2, 3), (1, 3, 1), (2, 3, 1)]);
        let inst5 = Rule5 {
            rest: vec![1, 2, 3],
            v: 0,
            x: 1,
            y: 2,
            c: 1,
        };
        assert!(check_rule(&r5, &inst5).unwrap());

        let r7 = g(5, &[(0, 1, 1), (1, 2, 1), (0, 3, 2), (2, 3, 2), (3, 4, 1)]);
        assert!(check_rule(&r7, &Rule7 { v: 3, a: 0, b: 1, c: 2 }).unwrap());
        assert!(!check_rule(&r7, &Rule7 { v: 3, a: 0, b: 2, c: 1 }).unwrap());

        let c4 = unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let inst8 = Rule8 {
            component: vec![2],
            x: 1,
            y: 3,
            v: 0,
            c: 1,
        };
        assert!(check_rule(&c4, &inst8).unwrap());
        let (gp, step, _) = apply_rule(&c4, &inst8, 1).unwrap();
        assert_eq!(gp.m(), 0);
        assert_eq!(step.removed, vec![1, 2, 3]);
    }

    #[test]
    fn apply_rejects_inapplicable() {
        assert_eq!(
            apply_rule(&clique(3, 1), &Rule1 { x: 0, y: 1, z: 2 }, 0),
            Err(ReductionError::PreconditionViolated(1))
        );
        assert!(check_rule(&clique(3, 1), &Rule1 { x: 0, y: 1, z: 9 }).is_err());
    }
}
