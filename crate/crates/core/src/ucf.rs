//! MaxCut with vertex weights on uniform-clique-forests, in linear time.
//!
//! Every block of a uniform-clique-forest is a clique with a single edge
//! weight, so within a block only the number of vertices on each side
//! matters. Blocks are peeled leaf-first: for a block with attachment vertex
//! `t` and remaining vertices `X`, the best split of `X` is a prefix of `X`
//! sorted by `w1 − w0`, evaluated for both sides of `t` and folded into
//! `t`'s bonuses.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{decompose, Cut, Vertex, Weight, WeightedGraph};

/// Per-vertex bonuses: `w0[v]` is earned when `v` is outside the cut set,
/// `w1[v]` when it is inside.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexWeights {
    pub w0: Vec<Weight>,
    pub w1: Vec<Weight>,
}

impl VertexWeights {
    pub fn zeros(n: usize) -> Self {
        VertexWeights {
            w0: vec![0; n],
            w1: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.w0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w0.is_empty()
    }

    /// `w(C) + Σ_{v∈C} w1(v) + Σ_{v∉C} w0(v)`.
    pub fn objective(&self, g: &WeightedGraph, cut: &Cut) -> Weight {
        let bonus: Weight = (0..g.n())
            .map(|v| if cut.contains(v) { self.w1[v] } else { self.w0[v] })
            .sum();
        g.cut_weight_mask(cut.mask()) + bonus
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UcfError {
    #[error("graph is not a uniform-clique-forest")]
    NotUcf,
    #[error("vertex weights cover {got} vertices, graph has {expected}")]
    WeightsLength { expected: usize, got: usize },
}

struct Peel {
    top: Vertex,
    /// Block vertices other than `top`, best candidates for side 1 first.
    order: Vec<Vertex>,
    /// Optimal prefix length when `top` is outside / inside the cut set.
    take: [usize; 2],
}

/// Maximizes the vertex-weighted cut objective on a uniform-clique-forest.
/// Returns the optimum and a cut attaining it.
pub fn solve_ucf(g: &WeightedGraph, vw: &VertexWeights) -> Result<(Weight, Cut), UcfError> {
    let n = g.n();
    if vw.w0.len() != n || vw.w1.len() != n {
        return Err(UcfError::WeightsLength {
            expected: n,
            got: vw.w0.len().min(vw.w1.len()),
        });
    }
    let (blocks, _) = decompose(g, 0..n);
    let mut w0 = vw.w0.clone();
    let mut w1 = vw.w1.clone();
    let mut is_root = vec![true; n];
    let mut peels = Vec::with_capacity(blocks.len());

    for b in &blocks {
        if b.edges == 0 {
            continue;
        }
        if !b.is_uniform_clique() {
            return Err(UcfError::NotUcf);
        }
        let c = b.min_weight;
        let t = b.top;
        let mut order: Vec<Vertex> = b.vertices.iter().copied().filter(|&x| x != t).collect();
        order.sort_by_key(|&x| (std::cmp::Reverse(w1[x] - w0[x]), x));
        let k = order.len() as Weight;
        let base: Weight = order.iter().map(|&x| w0[x]).sum();
        let mut best = [(Weight::MIN, 0usize); 2];
        let mut pref = 0;
        for p in 0..=order.len() {
            if p > 0 {
                let x = order[p - 1];
                pref += w1[x] - w0[x];
            }
            let pw = p as Weight;
            let inner = pw * (k - pw);
            let vals = [
                w0[t] + base + pref + c * (inner + pw),
                w1[t] + base + pref + c * (inner + (k - pw)),
            ];
            for side in 0..2 {
                if vals[side] > best[side].0 {
                    best[side] = (vals[side], p);
                }
            }
        }
        for &x in &order {
            is_root[x] = false;
        }
        w0[t] = best[0].0;
        w1[t] = best[1].0;
        peels.push(Peel {
            top: t,
            order,
            take: [best[0].1, best[1].1],
        });
    }

    let mut mask = vec![false; n];
    let mut value = 0;
    for v in 0..n {
        if is_root[v] {
            mask[v] = w1[v] > w0[v];
            value += w0[v].max(w1[v]);
        }
    }
    for p in peels.iter().rev() {
        let side = mask[p.top] as usize;
        for (i, &x) in p.order.iter().enumerate() {
            mask[x] = i < p.take[side];
        }
    }
    Ok((value, Cut::from_mask(g, mask)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize, i64)]) -> WeightedGraph {
        WeightedGraph::from_edges(n, e).unwrap()
    }

    fn check(gr: &WeightedGraph, vw: &VertexWeights) -> Weight {
        let (value, cut) = solve_ucf(gr, vw).unwrap();
        assert_eq!(vw.objective(gr, &cut), value);
        value
    }

    #[test]
    fn single_vertex_takes_larger_bonus() {
        let vw = VertexWeights {
            w0: vec![3],
            w1: vec![5],
        };
        let (value, cut) = solve_ucf(&WeightedGraph::new(1), &vw).unwrap();
        assert_eq!(value, 5);
        assert_eq!(cut.side1(), vec![0]);
    }

    #[test]
    fn small_examples() {
        let tri = g(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]);
        assert_eq!(check(&tri, &VertexWeights::zeros(3)), 2);
        let path = g(3, &[(0, 1, 2), (1, 2, 2)]);
        let (value, cut) = solve_ucf(&path, &VertexWeights::zeros(3)).unwrap();
        assert_eq!(value, 4);
        assert_eq!(cut.weight(), 4);
    }

    #[test]
    fn balanced_split_of_uniform_clique() {
        for n in 1..9usize {
            let mut e = vec![];
            for u in 0..n {
                for v in u + 1..n {
                    e.push((u, v, 3));
                }
            }
            let k = g(n, &e);
            let expected = 3 * (n.div_ceil(2) * (n / 2)) as i64;
            assert_eq!(check(&k, &VertexWeights::zeros(n)), expected);
        }
    }

    #[test]
    fn bonuses_can_beat_cutting() {
        // cutting the edge earns 1, keeping both outside earns 10
        let e = g(2, &[(0, 1, 1)]);
        let vw = VertexWeights {
            w0: vec![5, 5],
            w1: vec![0, 0],
        };
        assert_eq!(check(&e, &vw), 10);
    }

    #[test]
    fn rejects_non_ucf() {
        let c4 = g(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]);
        assert_eq!(solve_ucf(&c4, &VertexWeights::zeros(4)), Err(UcfError::NotUcf));
        assert!(matches!(
            solve_ucf(&c4, &VertexWeights::zeros(2)),
            Err(UcfError::WeightsLength { .. })
        ));
    }
}
