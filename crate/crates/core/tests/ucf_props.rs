mod common;

use common::random_ucf_instance;
use proptest::prelude::*;
use ptcut::oracle::brute_maxcut_vertex_weights;
use ptcut::reduction::verify_ucf;
use ptcut::ucf::{solve_ucf, VertexWeights};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn matches_exhaustive_search(seed in any::<u64>()) {
        let (g, vw) = random_ucf_instance(seed, 12, 6);
        prop_assert!(verify_ucf(&g));
        let (value, cut) = solve_ucf(&g, &vw).unwrap();
        prop_assert_eq!(vw.objective(&g, &cut), value);
        prop_assert_eq!(value, brute_maxcut_vertex_weights(&g, &vw).unwrap().value);
    }

    #[test]
    fn zero_weights_give_max_cut(seed in any::<u64>()) {
        let (g, _) = random_ucf_instance(seed, 12, 0);
        let (value, cut) = solve_ucf(&g, &VertexWeights::zeros(g.n())).unwrap();
        prop_assert_eq!(cut.weight(), value);
        prop_assert_eq!(value, ptcut::oracle::brute_max_cut(&g).unwrap().value);
    }
}
