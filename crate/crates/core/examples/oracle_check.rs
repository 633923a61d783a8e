//! Cross-check the decision procedure against exhaustive search on random
//! graphs.

use ptcut::io::gen::{generate, Family};
use ptcut::oracle::brute_max_cut;
use ptcut::{decide, target_quarters};

fn main() {
    let mut mismatches = 0;
    let mut total = 0;
    for seed in 0..200 {
        let n = 3 + seed as usize % 8;
        let m = (n - 1 + seed as usize % 7).min(n * (n - 1) / 2);
        let g = generate(&Family::Random { n, m, wmax: 4, seed }).expect("valid parameters");
        let mu = brute_max_cut(&g).expect("small graph").value;
        for k in 0..12 {
            let expected = target_quarters(&g, k).met_by(mu);
            if decide(&g, k).expect("decide").answer != expected {
                mismatches += 1;
            }
            total += 1;
        }
    }
    println!("{total} decisions, {mismatches} mismatches");
}
