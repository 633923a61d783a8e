//! Exhaustive ground truth for small graphs.
//!
//! Both searches walk all cuts in Gray-code order, so each step flips one
//! vertex and updates the objective in time proportional to its degree.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{poljak_turzik_quarters, Cut, Weight, WeightedGraph};
use crate::ucf::VertexWeights;

pub const MAX_CUT_VERTICES: usize = 24;
pub const MAX_WEIGHTED_VERTICES: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, the exhaustive search allows at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("vertex weights cover {got} vertices, graph has {expected}")]
    WeightsLength { expected: usize, got: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub value: Weight,
    pub cut: Cut,
}

/// `a` precedes `b` when the sorted member lists of the two masks compare
/// lexicographically.
fn lex_less(a: u32, b: u32) -> bool {
    if a == b {
        return false;
    }
    let d = (a ^ b).trailing_zeros();
    let above = !((2u64 << d) - 1) as u32;
    if a >> d & 1 == 1 {
        b & above != 0
    } else {
        a & above == 0
    }
}

/// Walks all masks over `free` low bits in Gray-code order and returns the
/// best objective with its lexicographically smallest mask. `delta(v, mask)`
/// is the objective change from flipping `v` in `mask`.
fn gray_search(free: usize, start: Weight, mut delta: impl FnMut(usize, u32) -> Weight) -> (Weight, u32) {
    let (mut value, mut mask) = (start, 0u32);
    let (mut best, mut best_mask) = (start, 0u32);
    for i in 1u64..(1u64 << free) {
        let v = i.trailing_zeros() as usize;
        value += delta(v, mask);
        mask ^= 1 << v;
        if value > best || (value == best && lex_less(mask, best_mask)) {
            best = value;
            best_mask = mask;
        }
    }
    (best, best_mask)
}

fn to_cut(g: &WeightedGraph, mask: u32, shift: usize) -> Cut {
    let bits = (0..g.n()).map(|v| v >= shift && mask >> (v - shift) & 1 == 1).collect();
    Cut::from_mask(g, bits)
}

/// Maximum cut by enumeration. Vertex 0 stays outside the cut set; among
/// optimal cuts with that property the lexicographically smallest set wins.
pub fn brute_max_cut(g: &WeightedGraph) -> Result<OracleResult, OracleError> {
    let n = g.n();
    if n > MAX_CUT_VERTICES {
        return Err(OracleError::TooLarge {
            n,
            limit: MAX_CUT_VERTICES,
        });
    }
    if n <= 1 {
        return Ok(OracleResult {
            value: 0,
            cut: Cut::empty(n),
        });
    }
    // bit i of the mask is vertex i + 1
    let (value, mask) = gray_search(n - 1, 0, |bit, mask| {
        let v = bit + 1;
        let inside = mask >> bit & 1 == 1;
        g.neighbors(v)
            .iter()
            .map(|&(u, w)| {
                let u_inside = u > 0 && mask >> (u - 1) & 1 == 1;
                if u_inside == inside { w } else { -w }
            })
            .sum()
    });
    Ok(OracleResult {
        value,
        cut: to_cut(g, mask, 1),
    })
}

/// Exact maximum of `w(C) + Σ_{v∈C} w1(v) + Σ_{v∉C} w0(v)` by enumeration,
/// ties broken toward the lexicographically smallest `C`.
pub fn brute_maxcut_vertex_weights(g: &WeightedGraph, vw: &VertexWeights) -> Result<OracleResult, OracleError> {
    let n = g.n();
    if n > MAX_WEIGHTED_VERTICES {
        return Err(OracleError::TooLarge {
            n,
            limit: MAX_WEIGHTED_VERTICES,
        });
    }
    if vw.w0.len() != n || vw.w1.len() != n {
        return Err(OracleError::WeightsLength {
            expected: n,
            got: vw.w0.len().min(vw.w1.len()),
        });
    }
    let start = vw.w0.iter().sum();
    let (value, mask) = gray_search(n, start, |v, mask| {
        let inside = mask >> v & 1 == 1;
        let edges: Weight = g
            .neighbors(v)
            .iter()
            .map(|&(u, w)| if (mask >> u & 1 == 1) == inside { w } else { -w })
            .sum();
        let bonus = if inside { vw.w0[v] - vw.w1[v] } else { vw.w1[v] - vw.w0[v] };
        edges + bonus
    });
    Ok(OracleResult {
        value,
        cut: to_cut(g, mask, 0),
    })
}

/// Whether the maximum cut reaches the Poljak-Turzík bound.
pub fn assert_pt_bound(g: &WeightedGraph) -> Result<bool, OracleError> {
    let mu = brute_max_cut(g)?.value;
    Ok(poljak_turzik_quarters(g).met_by(mu))
}
