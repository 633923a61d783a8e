use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Weight, WeightedGraph};

/// A cut size scaled by four. Every bound and target is compared in these
/// units so that `w/2 + w_MSF/4 + k/4` stays an integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Quarters(pub i128);

impl Quarters {
    pub fn of_weight(w: Weight) -> Self {
        Quarters(4 * w as i128)
    }

    /// True if a cut of weight `w` reaches this many quarters.
    pub fn met_by(self, w: Weight) -> bool {
        4 * w as i128 >= self.0
    }
}

impl fmt::Display for Quarters {
    /// Renders as `q/4 (=p/r)` with the reduced fraction, `q/4 (=p)` when
    /// integral and plain `q/4` when the fraction does not reduce.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.0;
        let g = gcd(q.unsigned_abs(), 4) as i128;
        let (num, den) = (q / g, 4 / g);
        if den == 1 {
            write!(f, "{q}/4 (={num})")
        } else if den == 4 {
            write!(f, "{q}/4")
        } else {
            write!(f, "{q}/4 (={num}/{den})")
        }
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Weight of a minimum spanning forest (Kruskal, ties by endpoint ids).
pub fn msf_weight(g: &WeightedGraph) -> Weight {
    let mut edges: Vec<_> = g.edges().collect();
    edges.sort_unstable_by_key(|&(u, v, w)| (w, u, v));
    let mut dsu = DisjointSets::new(g.n());
    let mut total = 0;
    for (u, v, w) in edges {
        if dsu.union(u, v) {
            total += w;
        }
    }
    total
}

/// `4 · (w(G)/2 + w_MSF(G)/4) = 2·w(G) + w_MSF(G)`.
pub fn poljak_turzik_quarters(g: &WeightedGraph) -> Quarters {
    Quarters(2 * g.total_weight() as i128 + msf_weight(g) as i128)
}

/// `2·w(G) + (n − #components)`, the weighted Edwards-Erdős bound in quarters.
/// Kept for comparison; the solver never uses it.
pub fn edwards_erdos_quarters(g: &WeightedGraph) -> Quarters {
    let (_, comps) = g.components();
    Quarters(2 * g.total_weight() as i128 + (g.n() - comps) as i128)
}

/// Decision threshold `2·w(G) + w_MSF(G) + k` for excess `k` in quarters.
pub fn target_quarters(g: &WeightedGraph, k_quarters: i64) -> Quarters {
    Quarters(poljak_turzik_quarters(g).0 + k_quarters as i128)
}
