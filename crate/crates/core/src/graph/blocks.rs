//! Biconnected components via a single iterative low-link DFS.

use serde::{Deserialize, Serialize};

use super::{Vertex, Weight, WeightedGraph};

/// Read access to an adjacency structure in which some vertices may have
/// been deleted lazily.
pub(crate) trait Adjacent {
    fn vertex_count(&self) -> usize;
    /// Sorted adjacency, possibly including dead neighbors.
    fn raw_neighbors(&self, u: Vertex) -> &[(Vertex, Weight)];
    fn is_live(&self, u: Vertex) -> bool;
}

impl Adjacent for WeightedGraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }
    fn raw_neighbors(&self, u: Vertex) -> &[(Vertex, Weight)] {
        self.neighbors(u)
    }
    fn is_live(&self, _u: Vertex) -> bool {
        true
    }
}

/// One biconnected component as found by the DFS.
#[derive(Clone, Debug)]
pub(crate) struct Block {
    /// Sorted ascending.
    pub vertices: Vec<Vertex>,
    /// The vertex through which the DFS entered the block; for root blocks,
    /// the DFS root.
    pub top: Vertex,
    pub edges: usize,
    pub min_weight: Weight,
    pub max_weight: Weight,
}

impl Block {
    pub fn is_uniform_clique(&self) -> bool {
        let s = self.vertices.len();
        self.edges == s * (s - 1) / 2 && self.min_weight == self.max_weight
    }
}

/// Decomposes the components reachable from `roots` into blocks.
///
/// Blocks are emitted in DFS post-order: every block appears after all blocks
/// hanging below its non-top vertices. An isolated root yields a singleton
/// block with no edges. Returns the blocks and a per-vertex articulation flag.
pub(crate) fn decompose<A, I>(g: &A, roots: I) -> (Vec<Block>, Vec<bool>)
where
    A: Adjacent + ?Sized,
    I: IntoIterator<Item = Vertex>,
{
    let n = g.vertex_count();
    let mut disc = vec![0u32; n];
    let mut low = vec![0u32; n];
    let mut stamp = vec![u32::MAX; n];
    let mut articulation = vec![false; n];
    let mut blocks = Vec::new();
    let mut time = 0u32;
    // (vertex, parent, next adjacency index)
    let mut stack: Vec<(Vertex, Vertex, usize)> = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex, Weight)> = Vec::new();

    for root in roots {
        if !g.is_live(root) || disc[root] != 0 {
            continue;
        }
        time += 1;
        disc[root] = time;
        low[root] = time;
        let mut root_children = 0usize;
        stack.push((root, usize::MAX, 0));
        while let Some(frame) = stack.last_mut() {
            let (u, parent, idx) = *frame;
            let adj = g.raw_neighbors(u);
            if idx < adj.len() {
                frame.2 += 1;
                let (w, wt) = adj[idx];
                if !g.is_live(w) {
                    continue;
                }
                if disc[w] == 0 {
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    edge_stack.push((u, w, wt));
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w, wt));
                    low[u] = low[u].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            let Some(&(p, _, _)) = stack.last() else {
                break;
            };
            low[p] = low[p].min(low[u]);
            if low[u] >= disc[p] {
                if p != root {
                    articulation[p] = true;
                }
                let id = blocks.len() as u32;
                let mut vertices = Vec::new();
                let (mut edges, mut min_w, mut max_w) = (0usize, Weight::MAX, Weight::MIN);
                while let Some((a, b, wt)) = edge_stack.pop() {
                    edges += 1;
                    min_w = min_w.min(wt);
                    max_w = max_w.max(wt);
                    for x in [a, b] {
                        if stamp[x] != id {
                            stamp[x] = id;
                            vertices.push(x);
                        }
                    }
                    if a == p && b == u {
                        break;
                    }
                }
                vertices.sort_unstable();
                blocks.push(Block {
                    vertices,
                    top: p,
                    edges,
                    min_weight: min_w,
                    max_weight: max_w,
                });
            }
        }
        if root_children >= 2 {
            articulation[root] = true;
        }
        if root_children == 0 {
            blocks.push(Block {
                vertices: vec![root],
                top: root,
                edges: 0,
                min_weight: 0,
                max_weight: 0,
            });
        }
    }
    (blocks, articulation)
}

/// Bipartite forest of blocks and cut vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCutForest {
    /// Vertex sets of the blocks, each sorted; isolated vertices are
    /// singleton blocks.
    pub blocks: Vec<Vec<Vertex>>,
    /// Number of edges inside each block.
    pub block_edges: Vec<usize>,
    pub cut_vertices: Vec<Vertex>,
    /// `(block index, cut vertex)` incidences.
    pub forest_edges: Vec<(usize, Vertex)>,
    /// Blocks with at most one cut vertex (leaves or isolated nodes of the forest).
    pub leaf_blocks: Vec<usize>,
}

impl BlockCutForest {
    /// The cut vertex of a leaf block, if it has one.
    pub fn leaf_cut_vertex(&self, block: usize) -> Option<Vertex> {
        self.forest_edges
            .iter()
            .find(|&&(b, _)| b == block)
            .map(|&(_, v)| v)
    }
}

pub fn block_cut_forest(g: &WeightedGraph) -> BlockCutForest {
    let (mut raw, articulation) = decompose(g, 0..g.n());
    raw.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let mut forest_edges = Vec::new();
    let mut leaf_blocks = Vec::new();
    for (i, b) in raw.iter().enumerate() {
        let mut cuts = 0;
        for &v in &b.vertices {
            if articulation[v] {
                forest_edges.push((i, v));
                cuts += 1;
            }
        }
        if cuts <= 1 {
            leaf_blocks.push(i);
        }
    }
    BlockCutForest {
        block_edges: raw.iter().map(|b| b.edges).collect(),
        blocks: raw.into_iter().map(|b| b.vertices).collect(),
        cut_vertices: (0..g.n()).filter(|&v| articulation[v]).collect(),
        forest_edges,
        leaf_blocks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, e: &[(usize, usize)]) -> WeightedGraph {
        let e: Vec<_> = e.iter().map(|&(u, v)| (u, v, 1)).collect();
        WeightedGraph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn path_has_two_bridge_blocks() {
        let f = block_cut_forest(&graph(3, &[(0, 1), (1, 2)]));
        assert_eq!(f.blocks, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(f.cut_vertices, vec![1]);
        assert_eq!(f.leaf_blocks, vec![0, 1]);
    }

    #[test]
    fn triangle_is_one_block() {
        let f = block_cut_forest(&graph(3, &[(0, 1), (1, 2), (0, 2)]));
        assert_eq!(f.blocks, vec![vec![0, 1, 2]]);
        assert!(f.cut_vertices.is_empty());
    }

    #[test]
    fn bowtie() {
        let g = graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        let f = block_cut_forest(&g);
        assert_eq!(f.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(f.cut_vertices, vec![2]);
        assert_eq!(f.block_edges, vec![3, 3]);
        assert_eq!(f.forest_edges, vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn isolated_vertices_are_singleton_blocks() {
        let f = block_cut_forest(&graph(3, &[(0, 1)]));
        assert_eq!(f.blocks, vec![vec![0, 1], vec![2]]);
        assert_eq!(f.block_edges, vec![1, 0]);
    }

    #[test]
    fn root_articulation() {
        // star centered at the DFS root
        let f = block_cut_forest(&graph(4, &[(0, 1), (0, 2), (0, 3)]));
        assert_eq!(f.cut_vertices, vec![0]);
        assert_eq!(f.blocks.len(), 3);
    }

    #[test]
    fn post_order_tops() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]);
        let (blocks, _) = decompose(&g, 0..5);
        // blocks below vertex 2 come before the triangle rooted at 0
        let order: Vec<_> = blocks.iter().map(|b| (b.vertices.clone(), b.top)).collect();
        assert_eq!(
            order,
            vec![(vec![3, 4], 3), (vec![2, 3], 2), (vec![0, 1, 2], 0)]
        );
    }
}
