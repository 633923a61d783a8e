//! Generate one instance of every family, write it in the text format and
//! read it back.

use ptcut::io::gen::{generate, Family};
use ptcut::io::{parse_graph, serialize_graph};

fn main() {
    let families = [
        Family::WeightTwoTree { i: 4 },
        Family::OddClique { t: 2 },
        Family::Random { n: 8, m: 12, wmax: 5, seed: 1 },
        Family::Ucf { blocks: 3, maxblock: 3, wmax: 2, seed: 1 },
        Family::RuleGallery { rule: 7, seed: 0 },
    ];
    for f in &families {
        let g = generate(f).expect("valid parameters");
        let text = serialize_graph(&g);
        let back = parse_graph(&text).expect("own output parses");
        println!("{f:?}: n={}, m={}, round trip ok: {}", g.n(), g.m(), back == g);
    }
    let merged = parse_graph("c parallel edges merge\np edge 2 2\ne 1 2 1\ne 2 1 4\n").expect("valid");
    print!("{}", serialize_graph(&merged));
    println!("{}", parse_graph("p edge 2 1\ne 2 2 1\n").unwrap_err());
}
