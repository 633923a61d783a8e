//! Replay a reduction trace backwards to build a cut that meets the target
//! without enumerating the marked set.

use ptcut::io::gen::{generate, Family};
use ptcut::reconstruct::{claim18_stats, extend_cut, ExtensionContext};
use ptcut::{poljak_turzik_quarters, reduce, Cut, Mode};

fn main() {
    let g = generate(&Family::Random { n: 40, m: 90, wmax: 4, seed: 3 }).expect("valid parameters");
    let out = reduce(&g, 0, Mode::Full).expect("reduction");
    let mut cut = Cut::empty(g.n());
    for step in out.trace.iter().rev() {
        let ctx = ExtensionContext {
            step: step.clone(),
            survivors_cut: cut,
        };
        cut = extend_cut(&ctx).expect("extension");
    }
    let pt = poljak_turzik_quarters(&g);
    let excess = 4 * cut.weight() as i128 - pt.0;
    println!("{} steps replayed", out.trace.len());
    println!("cut weight {} against bound {pt}", cut.weight());
    println!(
        "excess {excess} quarters, guaranteed at least {}",
        -out.k_remaining_quarters
    );
    let (calls, violations) = claim18_stats();
    println!("pair cuts built: {calls}, contract violations: {violations}");
}
