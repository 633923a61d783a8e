//! Run the reduction on a random graph and print each step with the marked
//! set it contributes.

use ptcut::io::gen::{generate, Family};
use ptcut::{reduce, verify_ucf, Mode};

fn main() {
    let g = generate(&Family::Random { n: 14, m: 24, wmax: 3, seed: 11 }).expect("valid parameters");
    let out = reduce(&g, 8, Mode::Full).expect("reduction");
    for (i, step) in out.trace.iter().enumerate() {
        println!(
            "{:>2}: rule {} removes {:?}, marks {:?}, costs {} quarter(s)",
            i + 1,
            step.rule_id(),
            step.removed,
            step.marked,
            step.k_delta_quarters
        );
    }
    let rest = g.without(out.marked.iter().copied());
    println!("S = {:?}, k left = {} quarters", out.marked, out.k_remaining_quarters);
    println!("G - S is a uniform-clique-forest: {}", verify_ucf(&rest));

    let early = reduce(&g, 2, Mode::Decide).expect("reduction");
    println!(
        "decide mode with k = 2 quarters stops after {} steps (early: {})",
        early.trace.len(),
        early.stopped_early
    );
}
