//! MaxCut with vertex weights on a uniform-clique-forest, checked against
//! exhaustive search.

use ptcut::io::gen::{generate, Family};
use ptcut::oracle::brute_maxcut_vertex_weights;
use ptcut::{solve_ucf, VertexWeights};

fn main() {
    let g = generate(&Family::Ucf { blocks: 5, maxblock: 4, wmax: 3, seed: 5 }).expect("valid parameters");
    let n = g.n();
    let vw = VertexWeights {
        w0: (0..n as i64).map(|v| v % 3).collect(),
        w1: (0..n as i64).map(|v| (v * 5) % 4).collect(),
    };
    let (value, cut) = solve_ucf(&g, &vw).expect("input is a uniform-clique-forest");
    println!("{n} vertices, {} edges", g.m());
    println!("optimum {value}, side 1 = {:?}", cut.side1());
    if n <= 22 {
        let brute = brute_maxcut_vertex_weights(&g, &vw).expect("small graph");
        println!("exhaustive search agrees: {}", brute.value == value);
    }
}
