//! Extending a cut of a reduced graph back through one reduction step.
//!
//! Each rule admits a few placements of its removed vertices that provably
//! keep the bound; [`extend_cut`] scores those placements against the
//! survivors' sides and keeps the best. Survivors never change sides.

use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{msf_weight, Cut, Vertex, Weight, WeightedGraph};
use crate::oracle::brute_max_cut;
use crate::reduction::{ReductionStep, RuleInstance};
use crate::ucf::{solve_ucf, VertexWeights};

/// Pair-cut graphs up to this size are solved exhaustively when no
/// structured shape applies.
const EXHAUSTIVE_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error("step payload is inconsistent with its rule instance: {0}")]
    MalformedPayload(String),
    #[error("pair-cut precondition fails for the pair ({u}, {v})")]
    PreconditionViolated { u: Vertex, v: Vertex },
    #[error("pair-cut contract violated: {0}")]
    ContractViolated(String),
}

/// A reduction step together with a cut of the graph it produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionContext {
    pub step: ReductionStep,
    /// Cut of the reduced graph (same vertex ids; removed vertices isolated).
    pub survivors_cut: Cut,
}

static CLAIM18_CALLS: AtomicU64 = AtomicU64::new(0);
static CLAIM18_VIOLATIONS: AtomicU64 = AtomicU64::new(0);

/// Process-wide `(invocations, contract violations)` of [`claim18_cut`].
pub fn claim18_stats() -> (u64, u64) {
    (
        CLAIM18_CALLS.load(Ordering::Relaxed),
        CLAIM18_VIOLATIONS.load(Ordering::Relaxed),
    )
}

/// Balanced cut of `K_n` with all edges of weight `c`: the first `⌊n/2⌋`
/// vertices form side 1, unless `fixed` pins vertex 0 to the other side, in
/// which case the complement is returned.
pub fn uniform_clique_cut(n: usize, c: Weight, fixed: Option<bool>) -> Cut {
    let half = n / 2;
    let mut mask: Vec<bool> = (0..n).map(|i| i < half).collect();
    if let Some(side) = fixed {
        if n > 0 && mask[0] != side {
            mask.iter_mut().for_each(|b| *b = !*b);
        }
    }
    let weight = c * ((n - half) * half) as Weight;
    Cut::from_parts(mask, weight)
}

/// Maximum cut of a `c`-uniform clique on `0..n` plus an apex `n` whose edge
/// to clique vertex `i` weighs `apex[i]` (0 for no edge). The apex stays on
/// side 0; the clique vertices joining it are those with the lightest apex
/// edges.
pub fn clique_apex_maxcut(c: Weight, apex: &[Weight]) -> Cut {
    let n = apex.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (apex[i], i));
    let total: Weight = apex.iter().sum();
    let (mut best, mut best_p) = (Weight::MIN, 0);
    let mut with_apex = 0;
    for p in 0..=n {
        if p > 0 {
            with_apex += apex[order[p - 1]];
        }
        let pw = p as Weight;
        let value = c * pw * (n as Weight - pw) + total - with_apex;
        if value > best {
            best = value;
            best_p = p;
        }
    }
    let mut mask = vec![true; n + 1];
    mask[n] = false;
    for &i in &order[..best_p] {
        mask[i] = false;
    }
    Cut::from_parts(mask, best)
}

/// A cut of `h` of weight at least its Poljak-Turzík bound plus a quarter,
/// built by cutting `h − {u, v}` and adding exactly one of `u`, `v`.
///
/// Requires an edge `{u, v}` heavier than some other edge `{v, x}`, with
/// `h − {u, v}` connected. The remainder is cut exactly when it is a uniform
/// clique, a uniform clique plus one apex, small, or a uniform-clique-forest;
/// any other shape is reported as a contract violation.
pub fn claim18_cut(h: &WeightedGraph, u: Vertex, v: Vertex) -> Result<Cut, ReconstructError> {
    let pre = ReconstructError::PreconditionViolated { u, v };
    if u >= h.n() || v >= h.n() || u == v {
        return Err(pre);
    }
    let Some(uv) = h.weight(u, v) else {
        return Err(pre);
    };
    if !h.neighbors(v).iter().any(|&(x, w)| x != u && w < uv) {
        return Err(pre);
    }
    let rest: Vec<Vertex> = (0..h.n()).filter(|&t| t != u && t != v).collect();
    let inner = h.induced(&rest);
    if !inner.is_connected() {
        return Err(pre);
    }
    CLAIM18_CALLS.fetch_add(1, Ordering::Relaxed);
    let result = claim18_inner(h, u, v, &rest, &inner);
    if result.is_err() {
        CLAIM18_VIOLATIONS.fetch_add(1, Ordering::Relaxed);
    }
    result
}

fn claim18_inner(
    h: &WeightedGraph,
    u: Vertex,
    v: Vertex,
    rest: &[Vertex],
    inner: &WeightedGraph,
) -> Result<Cut, ReconstructError> {
    let inner_cut = cut_inner(inner).ok_or_else(|| {
        ReconstructError::ContractViolated(format!(
            "no exact cut for a remainder with {} vertices and {} edges",
            inner.n(),
            inner.m()
        ))
    })?;
    let mut best: Option<Cut> = None;
    // the smaller of u, v goes to side 1 first so ties favor it
    let (lo, hi) = (u.min(v), u.max(v));
    for (a, b) in [(lo, hi), (hi, lo)] {
        let mut mask = vec![false; h.n()];
        for (i, &t) in rest.iter().enumerate() {
            mask[t] = inner_cut.contains(i);
        }
        mask[a] = true;
        mask[b] = false;
        let cut = Cut::from_mask(h, mask);
        if best.as_ref().is_none_or(|c| cut.weight() > c.weight()) {
            best = Some(cut);
        }
    }
    let cut = best.expect("two candidates");
    let need = 2 * h.total_weight() as i128 + msf_weight(h) as i128 + 1;
    if 4 * (cut.weight() as i128) < need {
        return Err(ReconstructError::ContractViolated(format!(
            "cut weight {} below ({need})/4",
            cut.weight()
        )));
    }
    Ok(cut)
}

/// An exact maximum cut of a graph of one of the supported shapes.
fn cut_inner(g: &WeightedGraph) -> Option<Cut> {
    let n = g.n();
    if let Some(c) = uniform_clique_weight(g, None) {
        return Some(uniform_clique_cut(n, c, None));
    }
    for apex in apex_candidates(g) {
        if let Some(c) = uniform_clique_weight(g, Some(apex)) {
            let others: Vec<Vertex> = (0..n).filter(|&t| t != apex).collect();
            let weights: Vec<Weight> = others.iter().map(|&t| g.weight(apex, t).unwrap_or(0)).collect();
            let local = clique_apex_maxcut(c, &weights);
            let mut mask = vec![false; n];
            for (i, &t) in others.iter().enumerate() {
                mask[t] = local.contains(i);
            }
            return Some(Cut::from_mask(g, mask));
        }
    }
    if n <= EXHAUSTIVE_LIMIT {
        return brute_max_cut(g).ok().map(|r| r.cut);
    }
    solve_ucf(g, &VertexWeights::zeros(n)).ok().map(|(_, cut)| cut)
}

/// The common edge weight if `g` minus `skip` is a uniform clique (1 for a
/// clique without edges).
fn uniform_clique_weight(g: &WeightedGraph, skip: Option<Vertex>) -> Option<Weight> {
    let keep = |t: Vertex| Some(t) != skip;
    let size = (0..g.n()).filter(|&t| keep(t)).count();
    let mut c = None;
    let mut edges = 0;
    for (a, b, w) in g.edges() {
        if keep(a) && keep(b) {
            if *c.get_or_insert(w) != w {
                return None;
            }
            edges += 1;
        }
    }
    (edges == size * size.saturating_sub(1) / 2).then_some(c.unwrap_or(1))
}

fn apex_candidates(g: &WeightedGraph) -> Vec<Vertex> {
    let n = g.n();
    if n <= EXHAUSTIVE_LIMIT {
        return (0..n).collect();
    }
    let mut out: Vec<Vertex> = (0..n).min_by_key(|&t| (g.degree(t), t)).into_iter().collect();
    let mut counts: HashMap<Weight, usize> = HashMap::new();
    for (_, _, w) in g.edges() {
        *counts.entry(w).or_default() += 1;
    }
    if let Some((&major, _)) = counts.iter().max_by_key(|&(&w, &k)| (k, std::cmp::Reverse(w))) {
        if let Some((a, b, _)) = g.edges().find(|&(_, _, w)| w != major) {
            out.extend([a, b]);
        }
    }
    out
}

/// Edges of one step, indexed for lookup.
struct Payload<'a> {
    step: &'a ReductionStep,
    weights: HashMap<(Vertex, Vertex), Weight>,
}

impl<'a> Payload<'a> {
    fn new(step: &'a ReductionStep, n: usize) -> Result<Self, ReconstructError> {
        let bad = |m: String| ReconstructError::MalformedPayload(m);
        let removed: HashSet<Vertex> = step.removed.iter().copied().collect();
        if step.instance.removed() != step.removed {
            return Err(bad("removed set differs from the instance".into()));
        }
        if let Some(&t) = step.instance.vertices().iter().find(|&&t| t >= n) {
            return Err(bad(format!("vertex {t} outside the cut")));
        }
        let mut weights = HashMap::new();
        for &(a, b, w) in &step.payload {
            if a >= n || b >= n || a == b || w <= 0 {
                return Err(bad(format!("edge ({a}, {b}, {w})")));
            }
            if !removed.contains(&a) && !removed.contains(&b) {
                return Err(bad(format!("edge ({a}, {b}) avoids the removed set")));
            }
            weights.insert((a.min(b), a.max(b)), w);
        }
        Ok(Payload { step, weights })
    }

    fn w(&self, a: Vertex, b: Vertex) -> Option<Weight> {
        self.weights.get(&(a.min(b), a.max(b))).copied()
    }

    fn need(&self, a: Vertex, b: Vertex) -> Result<Weight, ReconstructError> {
        self.w(a, b)
            .ok_or_else(|| ReconstructError::MalformedPayload(format!("missing edge ({a}, {b})")))
    }

    /// `G[vertices]` rebuilt from the payload, relabeled by position.
    fn local_graph(&self, vertices: &[Vertex]) -> WeightedGraph {
        let mut edges = Vec::new();
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if let Some(w) = self.w(vertices[i], vertices[j]) {
                    edges.push((i, j, w));
                }
            }
        }
        WeightedGraph::from_edges(vertices.len(), &edges).expect("payload edges are valid")
    }

    /// Crossing weight of the payload under `side`.
    fn score(&self, side: &[bool]) -> Weight {
        self.step
            .payload
            .iter()
            .filter(|&&(a, b, _)| side[a] != side[b])
            .map(|&(_, _, w)| w)
            .sum()
    }
}

/// Extends `ctx.survivors_cut` to the graph before `ctx.step`.
///
/// If the survivors' cut meets the reduced target, the result meets the
/// original one; among the admissible placements the heaviest is returned,
/// ties going to the placement with the lexicographically smaller set of
/// removed vertices on side 1.
pub fn extend_cut(ctx: &ExtensionContext) -> Result<Cut, ReconstructError> {
    let step = &ctx.step;
    let n = ctx.survivors_cut.mask().len();
    let p = Payload::new(step, n)?;
    let mut base = ctx.survivors_cut.mask().to_vec();
    for &r in &step.removed {
        base[r] = false;
    }
    let candidates = placements(&p, &base)?;
    let mut best: Option<(Weight, Vec<Vertex>, Vec<bool>)> = None;
    for cand in candidates {
        let mut side = base.clone();
        for &(t, s) in &cand {
            side[t] = s;
        }
        let score = p.score(&side);
        let mut ones: Vec<Vertex> = step.removed.iter().copied().filter(|&t| side[t]).collect();
        ones.sort_unstable();
        let better = match &best {
            None => true,
            Some((bs, bo, _)) => score > *bs || (score == *bs && ones < *bo),
        };
        if better {
            best = Some((score, ones, side));
        }
    }
    let (score, _, side) = best.expect("every rule yields a placement");
    Ok(Cut::from_parts(side, ctx.survivors_cut.weight() + score))
}

type Placement = Vec<(Vertex, bool)>;

/// The side-`s` and opposite-side split used by balanced placements: the
/// first `k` of `vs` get `first`, the rest `!first`.
fn split(vs: &[Vertex], k: usize, first: bool) -> Placement {
    vs.iter().enumerate().map(|(i, &t)| (t, if i < k { first } else { !first })).collect()
}

/// Places a cut of `G[vertices]` (local ids) so that `anchor` keeps its side.
fn oriented(local: &Cut, vertices: &[Vertex], anchor: Vertex, anchor_side: bool) -> Placement {
    let pos = vertices.iter().position(|&t| t == anchor).expect("anchor in block");
    let flip = local.contains(pos) != anchor_side;
    vertices
        .iter()
        .enumerate()
        .filter(|&(_, &t)| t != anchor)
        .map(|(i, &t)| (t, local.contains(i) != flip))
        .collect()
}

/// [`claim18_cut`] on `G[block]` with the first admissible pair in
/// `(center, other)` order, oriented to `v`'s side.
fn claim18_block(p: &Payload<'_>, block: &[Vertex], v: Vertex, side_v: bool) -> Result<Placement, ReconstructError> {
    let h = p.local_graph(block);
    for center in 0..h.n() {
        let adj = h.neighbors(center);
        for &(other, w) in adj {
            if !adj.iter().any(|&(x, wx)| x != other && wx < w) {
                continue;
            }
            let rest: Vec<Vertex> = (0..h.n()).filter(|&t| t != other && t != center).collect();
            if !h.induced(&rest).is_connected() {
                continue;
            }
            let cut = claim18_cut(&h, other, center)?;
            return Ok(oriented(&cut, block, v, side_v));
        }
    }
    Err(ReconstructError::MalformedPayload(
        "no admissible pair in a non-uniform block".into(),
    ))
}

fn with_anchor(rest: &[Vertex], v: Vertex) -> Vec<Vertex> {
    let mut block = rest.to_vec();
    block.push(v);
    block.sort_unstable();
    block
}

fn placements(p: &Payload<'_>, side: &[bool]) -> Result<Vec<Placement>, ReconstructError> {
    use RuleInstance::*;
    let out = match &p.step.instance {
        Rule1 { x, y, .. } => vec![vec![(*x, true), (*y, false)], vec![(*x, false), (*y, true)]],
        Rule2 { rest, v } => {
            let mut xs = rest.clone();
            xs.sort_unstable();
            let opposite = xs.len().div_ceil(2);
            vec![split(&xs, opposite, !side[*v])]
        }
        Rule3 { rest, v } => vec![claim18_block(p, &with_anchor(rest, *v), *v, side[*v])?],
        Rule4 { rest, v } => {
            let block = with_anchor(rest, *v);
            let weights: HashSet<Weight> = p.step.payload.iter().map(|e| e.2).collect();
            if weights.len() == 1 {
                let c = *weights.iter().next().unwrap();
                let mut xs = rest.clone();
                xs.sort_unstable();
                let apex: Vec<Weight> = xs.iter().map(|&t| p.w(t, *v).unwrap_or(0)).collect();
                let local = clique_apex_maxcut(c, &apex);
                let mut order = xs.clone();
                order.push(*v);
                // `oriented` wants positions in `order`
                vec![oriented(&local, &order, *v, side[*v])]
            } else {
                vec![claim18_block(p, &block, *v, side[*v])?]
            }
        }
        Rule5 { rest, v, x, y, c } => rule5_placements(p, rest, *v, *x, *y, *c, side)?,
        Rule6 { a, b, c } => vec![
            vec![(*a, true), (*c, true), (*b, false)],
            vec![(*a, false), (*c, false), (*b, true)],
        ],
        Rule7 { v, a, b, c } => {
            let o = !side[*v];
            vec![
                vec![(*a, o), (*b, o), (*c, o)],
                vec![(*a, o), (*b, !o), (*c, o)],
            ]
        }
        Rule8 { component, x, y, v, .. } => {
            let o = !side[*v];
            let nb = component.len();
            let q = if nb % 2 == 1 { nb.div_ceil(2) } else { nb / 2 + 1 };
            let mut xs = component.clone();
            xs.sort_unstable();
            let mut pl = split(&xs, q, !o);
            pl.extend([(*x, o), (*y, o)]);
            vec![pl]
        }
    };
    Ok(out)
}

fn rule5_placements(
    p: &Payload<'_>,
    rest: &[Vertex],
    v: Vertex,
    x: Vertex,
    y: Vertex,
    c: Weight,
    side: &[bool],
) -> Result<Vec<Placement>, ReconstructError> {
    let (xv, yv, xy) = (p.need(x, v)?, p.need(y, v)?, p.need(x, y)?);
    if xv > c || yv > c {
        let block = with_anchor(rest, v);
        let h = p.local_graph(&block);
        let pos = |t: Vertex| block.iter().position(|&b| b == t).unwrap();
        let center = if xv > c { x } else { y };
        let cut = claim18_cut(&h, pos(v), pos(center))?;
        return Ok(vec![oriented(&cut, &block, v, side[v])]);
    }
    let o = !side[v];
    let mut xs: Vec<Vertex> = rest.iter().copied().filter(|&t| t != x && t != y).collect();
    xs.sort_unstable();
    let n = xs.len();
    let mut out = Vec::new();
    if n == 1 {
        let u = xs[0];
        if xy > 2 * c {
            out.push(vec![(x, o), (y, !o), (u, !o)]);
            out.push(vec![(y, o), (x, !o), (u, !o)]);
        } else {
            out.push(vec![(x, o), (y, o), (u, !o)]);
        }
    } else if xy >= 2 * c {
        for first in [true, false] {
            let inner = split(&xs, n / 2, first);
            for (one, other) in [(x, y), (y, x)] {
                let mut pl = inner.clone();
                pl.extend([(one, o), (other, !o)]);
                out.push(pl);
            }
        }
    } else {
        let k = if n % 2 == 1 { (n - 1) / 2 } else { n / 2 - 1 };
        let mut pl = split(&xs, k, o);
        pl.extend([(x, o), (y, o)]);
        out.push(pl);
    }
    Ok(out)
}
