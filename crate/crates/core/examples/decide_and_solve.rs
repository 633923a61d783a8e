//! Decide and solve a small weighted instance for a range of excess values.

use ptcut::{decide, solve, target_quarters, WeightedGraph};

fn main() {
    // a 5-cycle with one heavy chord
    let g = WeightedGraph::from_edges(5, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (0, 4, 1), (1, 3, 3)])
        .expect("valid graph");
    for k in [0, 2, 4, 6, 8] {
        let d = decide(&g, k).expect("decide");
        let s = solve(&g, k).expect("solve");
        let witness = s
            .witness
            .map(|c| format!("weight {} with side {:?}", c.weight(), c.side1()))
            .unwrap_or_else(|| "none".into());
        println!(
            "k={k} quarters: target {}, answer {}, path {:?}, |S|={}, witness {witness}",
            target_quarters(&g, k),
            d.answer,
            d.path,
            s.marked
        );
    }
}
