//! Compare the Poljak-Turzík and Edwards-Erdős bounds on weight-2 paths,
//! where the former is strictly larger.

use ptcut::io::gen::{generate, Family};
use ptcut::oracle::brute_max_cut;
use ptcut::{edwards_erdos_quarters, msf_weight, poljak_turzik_quarters};

fn main() {
    println!("{:>3} {:>14} {:>14} {:>4} {:>4}", "i", "PT", "EE", "msf", "mu");
    for i in 1..=10 {
        let g = generate(&Family::WeightTwoTree { i }).expect("valid parameters");
        let mu = brute_max_cut(&g).expect("small graph").value;
        println!(
            "{i:>3} {:>14} {:>14} {:>4} {mu:>4}",
            poljak_turzik_quarters(&g).to_string(),
            edwards_erdos_quarters(&g).to_string(),
            msf_weight(&g)
        );
    }
}
