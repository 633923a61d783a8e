mod common;

use common::{any_graph, connected_graph};
use proptest::prelude::*;
use ptcut::graph::block_cut_forest;
use ptcut::reduction::{apply_rule, check_rule, reduce, select_rule, verify_ucf, Mode};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1500))]

    #[test]
    fn selection_is_total_and_valid(g in connected_graph(2, 12, 4)) {
        let inst = select_rule(&g, &block_cut_forest(&g)).unwrap();
        prop_assert!(check_rule(&g, &inst).unwrap());
    }

    #[test]
    fn full_reduction_ends_in_ucf(g in any_graph(12, 4)) {
        let out = reduce(&g, 0, Mode::Full).unwrap();
        let non2 = out.trace.iter().filter(|s| s.rule_id() != 2).count();
        prop_assert!(out.marked.len() <= 3 * non2);
        prop_assert_eq!(out.k_remaining_quarters, -(non2 as i64));
        prop_assert!(verify_ucf(&g.without(out.marked.iter().copied())));
        let removed: usize = out.trace.iter().map(|s| s.removed.len()).sum();
        prop_assert_eq!(removed + out.residual_vertices.len(), g.n());
        for s in &out.trace {
            prop_assert!(s.marked.len() <= 3);
            if s.rule_id() == 2 {
                prop_assert!(s.marked.is_empty());
            }
        }
    }

    #[test]
    fn trace_replays_through_apply_rule(g in connected_graph(2, 10, 3)) {
        let out = reduce(&g, 0, Mode::Full).unwrap();
        let mut cur = g.clone();
        let mut k = 0;
        for s in &out.trace {
            let (next, step, k2) = apply_rule(&cur, &s.instance, k).unwrap();
            prop_assert_eq!(&step, s);
            prop_assert_eq!(cur.total_weight() - next.total_weight(), step.removed_weight());
            cur = next;
            k = k2;
        }
        prop_assert_eq!(cur.m(), 0);
    }

    #[test]
    fn reduce_is_deterministic(g in any_graph(10, 3), k in -2i64..12) {
        prop_assert_eq!(reduce(&g, k, Mode::Decide).unwrap(), reduce(&g, k, Mode::Decide).unwrap());
    }
}
