//! Deciding and constructing cuts above the Poljak-Turzík bound.
//!
//! [`decide`] reduces until the excess is used up (then the bound answers
//! yes) or the graph is edgeless, and otherwise tries every placement of the
//! marked set `S` with the uniform-clique-forest solver on `G − S`. [`solve`]
//! always reduces fully so it can also replay the trace into a witness.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{msf_weight, target_quarters, Cut, Quarters, Vertex, Weight, WeightedGraph};
use crate::reconstruct::{extend_cut, ExtensionContext, ReconstructError};
use crate::reduction::{reduce, Mode, ReductionError};
use crate::ucf::{solve_ucf, UcfError, VertexWeights};

/// Largest marked set the enumeration accepts.
pub const MAX_MARKED: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DriverError {
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Reconstruct(#[from] ReconstructError),
    #[error(transparent)]
    Ucf(#[from] UcfError),
    #[error("placement contains vertex {0}, which is not in the marked set")]
    SubsetNotContained(Vertex),
    #[error("marked set has {0} vertices; enumerating its placements is infeasible")]
    TooManyMarked(usize),
    #[error("replayed cut of weight {weight} misses the target {target}")]
    ReplayBelowTarget { weight: Weight, target: Quarters },
}

/// A graph and an excess `k` in quarter units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: WeightedGraph,
    pub k_quarters: i64,
}

impl Instance {
    pub fn new(graph: WeightedGraph, k_quarters: i64) -> Self {
        Instance { graph, k_quarters }
    }

    /// `2·w(G) + w_MSF(G) + k`: the answer is yes iff `4·μ(G)` reaches it.
    pub fn target(&self) -> Quarters {
        target_quarters(&self.graph, self.k_quarters)
    }

    pub fn decide(&self) -> Result<Verdict, DriverError> {
        decide(&self.graph, self.k_quarters)
    }

    pub fn solve(&self) -> Result<Verdict, DriverError> {
        solve(&self.graph, self.k_quarters)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictPath {
    /// The reduction consumed the excess, so the bound settles the instance.
    BoundImplied,
    /// Placements of the marked set were enumerated.
    Enumerated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub answer: bool,
    pub witness: Option<Cut>,
    pub path: VerdictPath,
    pub target: Quarters,
    /// Size of the marked set when enumeration ran.
    pub marked: usize,
}

/// Whether `G` has a cut of weight at least `(2·w(G) + w_MSF(G) + k)/4`.
pub fn decide(g: &WeightedGraph, k_quarters: i64) -> Result<Verdict, DriverError> {
    let target = target_quarters(g, k_quarters);
    let bound = |marked| Verdict {
        answer: true,
        witness: None,
        path: VerdictPath::BoundImplied,
        target,
        marked,
    };
    if k_quarters <= 0 {
        return Ok(bound(0));
    }
    let out = reduce(g, k_quarters, Mode::Decide)?;
    if out.stopped_early {
        return Ok(bound(out.marked.len()));
    }
    let s = &out.marked;
    check_marked(s)?;
    let rest = g.without(s.iter().copied());
    let hit = (0..1u64 << s.len())
        .into_par_iter()
        .map(|bits| placement_value(g, &rest, s, bits).map(|(v, _)| target.met_by(v)))
        .find_any(|r| !matches!(r, Ok(false)));
    Ok(Verdict {
        answer: hit.transpose()?.is_some(),
        witness: None,
        path: VerdictPath::Enumerated,
        target,
        marked: s.len(),
    })
}

/// [`decide`] with the excess given as a whole number `k`, i.e. `4k` quarters.
pub fn decide_k(g: &WeightedGraph, k: i64) -> Result<Verdict, DriverError> {
    decide(g, k.saturating_mul(4))
}

/// Whether `G` has a cut of weight at least `c`.
pub fn decide_target(g: &WeightedGraph, c: Weight) -> Result<Verdict, DriverError> {
    decide(g, k_for_target(g, c))
}

/// The excess in quarters that makes the target equal to `c`.
pub fn k_for_target(g: &WeightedGraph, c: Weight) -> i64 {
    let k = 4 * c as i128 - 2 * g.total_weight() as i128 - msf_weight(g) as i128;
    k.clamp(i64::MIN as i128, i64::MAX as i128) as i64
}

/// Like [`decide`], but returns a witness cut whenever the answer is yes.
pub fn solve(g: &WeightedGraph, k_quarters: i64) -> Result<Verdict, DriverError> {
    let target = target_quarters(g, k_quarters);
    let out = reduce(g, k_quarters, Mode::Full)?;
    if out.k_remaining_quarters <= 0 {
        let mut cut = Cut::empty(g.n());
        for step in out.trace.iter().rev() {
            let ctx = ExtensionContext {
                step: step.clone(),
                survivors_cut: cut,
            };
            cut = extend_cut(&ctx)?;
        }
        if !target.met_by(cut.weight()) {
            return Err(DriverError::ReplayBelowTarget {
                weight: cut.weight(),
                target,
            });
        }
        return Ok(Verdict {
            answer: true,
            witness: Some(cut),
            path: VerdictPath::BoundImplied,
            target,
            marked: out.marked.len(),
        });
    }
    let s = &out.marked;
    check_marked(s)?;
    let rest = g.without(s.iter().copied());
    let best = (0..1u64 << s.len())
        .into_par_iter()
        .map(|bits| placement_value(g, &rest, s, bits).map(|(v, cut)| (v, bits, cut)))
        .try_reduce_with(|a, b| {
            // larger value wins, then the smaller placement index
            Ok(if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a })
        })
        .expect("at least the empty placement")?;
    let (value, _, cut) = best;
    debug_assert_eq!(cut.weight(), value);
    let answer = target.met_by(value);
    Ok(Verdict {
        answer,
        witness: answer.then_some(cut),
        path: VerdictPath::Enumerated,
        target,
        marked: s.len(),
    })
}

fn check_marked(s: &[Vertex]) -> Result<(), DriverError> {
    if s.len() > MAX_MARKED {
        return Err(DriverError::TooManyMarked(s.len()));
    }
    Ok(())
}

/// Best cut of `G` among those whose intersection with `S` is given by the
/// bits of `bits`.
fn placement_value(
    g: &WeightedGraph,
    rest: &WeightedGraph,
    s: &[Vertex],
    bits: u64,
) -> Result<(Weight, Cut), DriverError> {
    let s1: Vec<Vertex> = s
        .iter()
        .enumerate()
        .filter(|&(j, _)| bits >> j & 1 == 1)
        .map(|(_, &v)| v)
        .collect();
    let (vw, base) = combine_subset(g, s, &s1)?;
    let (value, inner) = solve_ucf(rest, &vw)?;
    let mut mask = inner.mask().to_vec();
    for &v in s {
        mask[v] = false;
    }
    for &v in &s1 {
        mask[v] = true;
    }
    Ok((value + base, Cut::from_mask(g, mask)))
}

/// Vertex weights on `G − S` for the placement putting `s1` on side 1 and
/// `S ∖ s1` on side 0, plus the weight `w(s1, S ∖ s1)` cut inside `S`.
///
/// Weights are indexed by the original vertex ids; entries for `S` are zero.
pub fn combine_subset(
    g: &WeightedGraph,
    s: &[Vertex],
    s1: &[Vertex],
) -> Result<(VertexWeights, Weight), DriverError> {
    let n = g.n();
    let mut in_s = vec![false; n];
    let mut in_s1 = vec![false; n];
    for &v in s {
        g.check_vertex(v).map_err(ReductionError::from)?;
        in_s[v] = true;
    }
    for &v in s1 {
        if v >= n || !in_s[v] {
            return Err(DriverError::SubsetNotContained(v));
        }
        in_s1[v] = true;
    }
    let mut vw = VertexWeights::zeros(n);
    let mut base = 0;
    for &a in s {
        for &(b, w) in g.neighbors(a) {
            if !in_s[b] {
                if in_s1[a] {
                    vw.w0[b] += w;
                } else {
                    vw.w1[b] += w;
                }
            } else if in_s1[a] && !in_s1[b] {
                base += w;
            }
        }
    }
    Ok((vw, base))
}
