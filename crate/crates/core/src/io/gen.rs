//! Instance generators. Random families use ChaCha8 seeded from `seed`, so
//! equal parameters always give the same edge list.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Vertex, Weight, WeightedGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// Path on `i + 1` vertices with every edge of weight 2.
    WeightTwoTree { i: usize },
    /// Unit-weight clique on `2t + 1` vertices.
    OddClique { t: usize },
    /// Connected graph with `n` vertices, `m` edges and weights in `1..=wmax`.
    Random {
        n: usize,
        m: usize,
        wmax: Weight,
        seed: u64,
    },
    /// Connected uniform-clique-forest built from `blocks` cliques of 2 to
    /// `maxblock` vertices.
    Ucf {
        blocks: usize,
        maxblock: usize,
        wmax: Weight,
        seed: u64,
    },
    /// A small instance whose first selected rule is `rule`.
    RuleGallery { rule: u8, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad generator parameters: {0}")]
pub struct BadParameters(pub String);

fn bad(msg: impl Into<String>) -> BadParameters {
    BadParameters(msg.into())
}

pub fn generate(family: &Family) -> Result<WeightedGraph, BadParameters> {
    match *family {
        Family::WeightTwoTree { i } => {
            if i == 0 {
                return Err(bad("obs6-tree needs i >= 1"));
            }
            let edges: Vec<_> = (0..i).map(|u| (u, u + 1, 2)).collect();
            Ok(WeightedGraph::from_edges(i + 1, &edges).expect("path is simple"))
        }
        Family::OddClique { t } => {
            if t == 0 {
                return Err(bad("odd-clique needs t >= 1"));
            }
            Ok(clique(2 * t + 1, 1))
        }
        Family::Random { n, m, wmax, seed } => random_connected(n, m, wmax, seed),
        Family::Ucf {
            blocks,
            maxblock,
            wmax,
            seed,
        } => random_ucf(blocks, maxblock, wmax, seed),
        Family::RuleGallery { rule, seed } => rule_gallery(rule, seed),
    }
}

fn clique(n: usize, w: Weight) -> WeightedGraph {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, w));
        }
    }
    WeightedGraph::from_edges(n, &edges).expect("clique is simple")
}

fn random_connected(n: usize, m: usize, wmax: Weight, seed: u64) -> Result<WeightedGraph, BadParameters> {
    if n == 0 || wmax < 1 {
        return Err(bad("random needs n >= 1 and wmax >= 1"));
    }
    let max_m = n as u128 * (n as u128 - 1) / 2;
    if m + 1 < n || m as u128 > max_m {
        return Err(bad(format!("random needs {} <= m <= {max_m}", n - 1)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for i in 1..n {
        let (u, v) = (order[i], order[rng.gen_range(0..i)]);
        seen.insert((u.min(v), u.max(v)));
        edges.push((u, v, rng.gen_range(1..=wmax)));
    }
    if 2 * m as u128 > max_m {
        // dense: sample from the complement of the tree directly
        let mut rest: Vec<(Vertex, Vertex)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|p| !seen.contains(p))
            .collect();
        rest.shuffle(&mut rng);
        for (u, v) in rest.into_iter().take(m + 1 - n) {
            edges.push((u, v, rng.gen_range(1..=wmax)));
        }
    } else {
        while edges.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && seen.insert((u.min(v), u.max(v))) {
                edges.push((u, v, rng.gen_range(1..=wmax)));
            }
        }
    }
    Ok(WeightedGraph::from_edges(n, &edges).expect("edges are distinct"))
}

fn random_ucf(blocks: usize, maxblock: usize, wmax: Weight, seed: u64) -> Result<WeightedGraph, BadParameters> {
    if blocks == 0 || maxblock < 2 || wmax < 1 {
        return Err(bad("ucf needs blocks >= 1, maxblock >= 2 and wmax >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = 1;
    let mut edges = Vec::new();
    for _ in 0..blocks {
        let attach = rng.gen_range(0..n);
        let size = rng.gen_range(2..=maxblock);
        let w = rng.gen_range(1..=wmax);
        let members: Vec<Vertex> = std::iter::once(attach).chain(n..n + size - 1).collect();
        n += size - 1;
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                edges.push((u, v, w));
            }
        }
    }
    Ok(WeightedGraph::from_edges(n, &edges).expect("blocks share single vertices"))
}

/// Crafted instances, one shape per rule. The seed only scales the weights,
/// which leaves every rule condition unchanged.
fn rule_gallery(rule: u8, seed: u64) -> Result<WeightedGraph, BadParameters> {
    let base: (usize, Vec<(Vertex, Vertex, Weight)>) = match rule {
        1 => (4, vec![(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 5), (1, 3, 1), (2, 3, 1)]),
        2 => (3, vec![(0, 1, 2), (1, 2, 2)]),
        3 => (4, vec![(0, 1, 2), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]),
        4 => (4, vec![(0, 1, 1), (0, 2, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]),
        5 => (4, vec![(0, 1, 1), (0, 2, 1), (1, 2, 3), (1, 3, 1), (2, 3, 1)]),
        6 => (5, vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (0, 4, 1)]),
        7 => (5, vec![(0, 1, 1), (1, 2, 1), (0, 3, 2), (1, 3, 2), (2, 3, 2), (3, 4, 1)]),
        8 => (4, vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]),
        _ => return Err(bad(format!("rule-gallery needs a rule in 1..=8, got {rule}"))),
    };
    let scale = 1 + (seed % 4) as Weight;
    let edges: Vec<_> = base.1.into_iter().map(|(u, v, w)| (u, v, w * scale)).collect();
    Ok(WeightedGraph::from_edges(base.0, &edges).expect("gallery graphs are simple"))
}
