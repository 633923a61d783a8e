mod common;

use common::{any_graph, connected_graph};
use proptest::prelude::*;
use ptcut::driver::{combine_subset, decide, solve};
use ptcut::graph::target_quarters;
use ptcut::oracle::brute_max_cut;
use ptcut::reduction::{reduce, Mode};
use ptcut::ucf::solve_ucf;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn decide_and_solve_match_oracle(g in connected_graph(2, 10, 5), k in -4i64..24) {
        let mu = brute_max_cut(&g).unwrap().value;
        let target = target_quarters(&g, k);
        let expected = target.met_by(mu);
        let d = decide(&g, k).unwrap();
        prop_assert_eq!(d.answer, expected);
        let s = solve(&g, k).unwrap();
        prop_assert_eq!(s.answer, expected);
        if let Some(c) = &s.witness {
            prop_assert!(c.verify(&g));
            prop_assert!(target.met_by(c.weight()));
        }
        prop_assert_eq!(s.witness.is_some(), expected);
    }

    #[test]
    fn disconnected_inputs(g in any_graph(9, 4), k in -4i64..16) {
        let mu = brute_max_cut(&g).unwrap().value;
        let expected = target_quarters(&g, k).met_by(mu);
        prop_assert_eq!(decide(&g, k).unwrap().answer, expected);
        prop_assert_eq!(solve(&g, k).unwrap().answer, expected);
    }

    #[test]
    fn enumeration_recovers_max_cut(g in connected_graph(2, 10, 5)) {
        let out = reduce(&g, 0, Mode::Full).unwrap();
        let s = &out.marked;
        let rest = g.without(s.iter().copied());
        let mut best = 0;
        for bits in 0u32..1 << s.len() {
            let s1: Vec<_> = s.iter().enumerate().filter(|&(j, _)| bits >> j & 1 == 1).map(|(_, &v)| v).collect();
            let (vw, base) = combine_subset(&g, s, &s1).unwrap();
            best = best.max(solve_ucf(&rest, &vw).unwrap().0 + base);
        }
        prop_assert_eq!(best, brute_max_cut(&g).unwrap().value);
    }

    #[test]
    fn monotone_in_k(g in connected_graph(2, 9, 4), k in 0i64..20) {
        if decide(&g, k + 1).unwrap().answer {
            prop_assert!(decide(&g, k).unwrap().answer);
        }
    }
}
