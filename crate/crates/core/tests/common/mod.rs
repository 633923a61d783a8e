#![allow(dead_code)]

use proptest::prelude::*;
use ptcut::graph::WeightedGraph;

/// Connected graphs: a random spanning tree plus a random share of the
/// remaining pairs.
pub fn connected_graph(min_n: usize, max_n: usize, max_w: i64) -> impl Strategy<Value = WeightedGraph> {
    (min_n..=max_n)
        .prop_flat_map(move |n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)),
                proptest::collection::vec(1..=max_w, n.saturating_sub(1)),
                proptest::collection::vec((0u32..100, 1..=max_w), pairs),
                0u32..100,
            )
        })
        .prop_map(|(n, parents, tree_w, extra, density)| {
            let mut edges = Vec::new();
            let mut present = vec![vec![false; n]; n];
            for v in 1..n {
                let p = parents[v - 1].index(v);
                edges.push((p, v, tree_w[v - 1]));
                present[p][v] = true;
            }
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    let (coin, w) = extra[idx];
                    idx += 1;
                    if !present[u][v] && coin < density {
                        edges.push((u, v, w));
                    }
                }
            }
            WeightedGraph::from_edges(n, &edges).unwrap()
        })
}

/// Possibly disconnected graphs with independent edges.
pub fn any_graph(max_n: usize, max_w: i64) -> impl Strategy<Value = WeightedGraph> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec((0u32..100, 1..=max_w), pairs), 0u32..100)
        })
        .prop_map(|(n, extra, density)| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    let (coin, w) = extra[idx];
                    idx += 1;
                    if coin < density {
                        edges.push((u, v, w));
                    }
                }
            }
            WeightedGraph::from_edges(n, &edges).unwrap()
        })
}

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ptcut::graph::{block_cut_forest, poljak_turzik_quarters, Cut};
use ptcut::io::gen::{generate, Family};
use ptcut::reconstruct::{extend_cut, ExtensionContext};
use ptcut::reduction::{apply_rule, check_rule, reduce, select_rule, Mode, RuleInstance};

/// Up to `want` distinct `(graph, instance)` pairs with at most `max_n`
/// vertices on which rule `rule` applies. Sources: gallery shapes with a
/// random outside part grafted on, then intermediate graphs of reduction
/// traces of random graphs.
pub fn extension_cases(rule: u8, want: usize, max_n: usize) -> Vec<(WeightedGraph, RuleInstance)> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut push = |g: WeightedGraph, inst: RuleInstance, out: &mut Vec<_>| {
        let key = (format!("{:?}", g.edges().collect::<Vec<_>>()), inst.clone());
        if g.n() <= max_n && seen.insert(key) {
            out.push((g, inst));
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(rule as u64);
    for seed in 0..4 * want as u64 {
        if out.len() >= want {
            return out;
        }
        let base = generate(&Family::RuleGallery { rule, seed }).unwrap();
        let inst = select_rule(&base, &block_cut_forest(&base)).unwrap();
        if seed < 4 {
            push(base.clone(), inst.clone(), &mut out);
            continue;
        }
        let removed = inst.removed();
        let anchors: Vec<usize> = (0..base.n()).filter(|u| !removed.contains(u)).collect();
        let extra = rng.gen_range(1..=max_n - base.n());
        let n = base.n() + extra;
        let mut edges: Vec<_> = base.edges().collect();
        for t in base.n()..n {
            let p = if t == base.n() || rng.gen_bool(0.5) {
                anchors[rng.gen_range(0..anchors.len())]
            } else {
                rng.gen_range(base.n()..t)
            };
            edges.push((p, t, rng.gen_range(1..=4)));
        }
        let g = WeightedGraph::from_edges(n, &edges).unwrap();
        if check_rule(&g, &inst).unwrap() {
            push(g, inst, &mut out);
        }
    }
    for seed in 0..5000u64 {
        if out.len() >= want {
            break;
        }
        let n = 4 + (seed as usize % (max_n - 3));
        let maxm = n * (n - 1) / 2;
        let m = n - 1 + (seed as usize * 7) % (maxm - n + 2);
        let mut g = generate(&Family::Random { n, m, wmax: 1 + seed as i64 % 3, seed }).unwrap();
        for step in reduce(&g, 0, Mode::Full).unwrap().trace {
            let next = apply_rule(&g, &step.instance, 0).unwrap().0;
            if step.rule_id() == rule {
                push(g.clone(), step.instance.clone(), &mut out);
            }
            g = next;
        }
    }
    out
}

/// For every cut `C'` of the reduced graph, the extended cut `C` must satisfy
/// `4w(C) − PT(G) ≥ 4w(C') − PT(G') + δ` in quarters. That covers every
/// excess `k` at once. Returns the number of cuts checked.
pub fn check_extension(g: &WeightedGraph, inst: &RuleInstance) -> Result<usize, String> {
    let (gp, step, _) = apply_rule(g, inst, 0).map_err(|e| e.to_string())?;
    let pt = poljak_turzik_quarters(g).0;
    let pt_red = poljak_turzik_quarters(&gp).0;
    let delta = step.k_delta_quarters as i128;
    let live: Vec<usize> = (0..g.n()).filter(|v| !step.removed.contains(v)).collect();
    for bits in 0u32..1 << live.len() {
        let mut mask = vec![false; g.n()];
        for (j, &v) in live.iter().enumerate() {
            mask[v] = bits >> j & 1 == 1;
        }
        let reduced = Cut::from_mask(&gp, mask);
        let ctx = ExtensionContext {
            step: step.clone(),
            survivors_cut: reduced.clone(),
        };
        let full = extend_cut(&ctx).map_err(|e| e.to_string())?;
        if !full.verify(g) {
            return Err(format!("extended cut has a wrong weight for {inst:?}"));
        }
        for &v in &live {
            if full.contains(v) != reduced.contains(v) {
                return Err(format!("survivor {v} moved for {inst:?}"));
            }
        }
        let lhs = 4 * full.weight() as i128 - pt;
        let rhs = 4 * reduced.weight() as i128 - pt_red + delta;
        if lhs < rhs {
            return Err(format!(
                "{inst:?} on {:?}: reduced cut {:?} has excess {}, extension {:?} only {}",
                g.edges().collect::<Vec<_>>(),
                reduced.side1(),
                rhs - delta,
                full.side1(),
                lhs
            ));
        }
    }
    Ok(1 << live.len())
}

/// Seeded uniform-clique-forest (possibly several trees) with at most
/// `max_n` vertices and vertex weights in `0..=wmax_vertex`.
pub fn random_ucf_instance(seed: u64, max_n: usize, wmax_vertex: i64) -> (WeightedGraph, ptcut::ucf::VertexWeights) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut n = 0;
    while n < max_n {
        let room = max_n - n;
        let blocks = rng.gen_range(1..=4);
        let tree = generate(&Family::Ucf {
            blocks,
            maxblock: rng.gen_range(2..=5),
            wmax: rng.gen_range(1..=4),
            seed: rng.gen(),
        })
        .unwrap();
        if tree.n() > room {
            if n > 0 {
                break;
            }
            continue;
        }
        edges.extend(tree.edges().map(|(u, v, w)| (u + n, v + n, w)));
        n += tree.n();
        if rng.gen_bool(0.4) {
            break;
        }
    }
    let g = WeightedGraph::from_edges(n, &edges).unwrap();
    let vw = ptcut::ucf::VertexWeights {
        w0: (0..n).map(|_| rng.gen_range(0..=wmax_vertex)).collect(),
        w1: (0..n).map(|_| rng.gen_range(0..=wmax_vertex)).collect(),
    };
    (g, vw)
}

/// Every generator family over a spread of parameters.
pub fn generator_corpus() -> Vec<Family> {
    let mut f = Vec::new();
    for i in 1..=10 {
        f.push(Family::WeightTwoTree { i });
    }
    for t in 1..=5 {
        f.push(Family::OddClique { t });
    }
    for seed in 0..20 {
        let n = 2 + seed as usize;
        f.push(Family::Random {
            n,
            m: (n + 3 * seed as usize).min(n * (n - 1) / 2),
            wmax: 1 + seed as i64 % 7,
            seed,
        });
        f.push(Family::Ucf {
            blocks: 1 + seed as usize,
            maxblock: 2 + seed as usize % 4,
            wmax: 3,
            seed,
        });
    }
    for rule in 1..=8 {
        for seed in 0..4 {
            f.push(Family::RuleGallery { rule, seed });
        }
    }
    f
}
