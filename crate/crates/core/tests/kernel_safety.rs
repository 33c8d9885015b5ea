mod common;

use proptest::prelude::*;

use bpd::generate::random_instance;
use bpd::kernel::{kernelize_with, replay, rr1_components, rr2_bridge, rr3_heavy_edge, rr4_far_vertex, KernelConfig};
use bpd::{kernelize, lift_solution, Color, ColoredGraph, DeletionSet, Edge, Instance, KernelTrace};
use common::*;

type Rule = fn(&Instance) -> (Instance, KernelTrace);

const RULES: [(&str, Rule); 5] = [
    ("component", rr1_components),
    ("bridge", rr2_bridge),
    ("heavy edge", rr3_heavy_edge),
    ("far vertex", rr4_far_vertex),
    ("full", kernelize),
];

fn answer(inst: &Instance) -> bool {
    !inst.is_no_instance() && brute_decide(&inst.graph, inst.k)
}

fn instance() -> impl Strategy<Value = Instance> {
    (3usize..=9, 0.2f64..0.8, 0.2f64..0.8, any::<u64>(), 0i64..8)
        .prop_map(|(n, p, b, seed, k)| Instance::new(random_instance(n, p, b, seed).unwrap(), k))
}

/// An optimal solution of the kernel, found by exhaustive search.
fn kernel_solution(kernel: &Instance) -> Option<DeletionSet> {
    let m = Mat::of(&kernel.graph);
    let edges = m.edges();
    let mut best: Option<Vec<usize>> = None;
    let mut chosen = Vec::new();
    fn go(m: &mut Mat, edges: &[(usize, usize, u8)], i: usize, k: usize, chosen: &mut Vec<usize>, best: &mut Option<Vec<usize>>) {
        if best.is_some() {
            return;
        }
        if m.p3_free() {
            *best = Some(chosen.clone());
            return;
        }
        if i == edges.len() || chosen.len() == k {
            return;
        }
        let (u, v, c) = edges[i];
        m.set(u, v, NONE);
        chosen.push(i);
        go(m, edges, i + 1, k, chosen, best);
        chosen.pop();
        m.set(u, v, c);
        go(m, edges, i + 1, k, chosen, best);
    }
    go(&mut m.clone(), &edges, 0, kernel.k.max(0) as usize, &mut chosen, &mut best);
    best.map(|ids| {
        DeletionSet::new(
            ids.iter()
                .map(|&i| {
                    let (u, v, c) = edges[i];
                    Edge::new(u, v, if c == RED { Color::Red } else { Color::Blue })
                })
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn each_rule_keeps_the_answer(inst in instance()) {
        let want = answer(&inst);
        for (name, rule) in RULES {
            let (out, trace) = rule(&inst);
            prop_assert_eq!(answer(&out), want, "{} changed the answer", name);
            prop_assert!(out.k <= inst.k);
            prop_assert!(out.graph.n() <= inst.graph.n());
            let replayed = replay(&inst, &trace).unwrap();
            prop_assert_eq!(&replayed, &out, "{} does not replay", name);
        }
    }

    #[test]
    fn lifted_solutions_verify(inst in instance()) {
        let (kernel, trace) = kernelize_with(&inst, KernelConfig { bridge_rule: true });
        if let Some(s) = (!kernel.is_no_instance()).then(|| kernel_solution(&kernel)).flatten() {
            let lifted = lift_solution(&trace, &s).unwrap();
            prop_assert!(is_solution(&inst.graph, &lifted.pairs(), inst.k));
        } else {
            prop_assert!(!answer(&inst));
        }
    }

    #[test]
    fn kernelize_is_idempotent(inst in instance()) {
        let (once, _) = kernelize(&inst);
        if !once.is_no_instance() {
            let (twice, trace) = kernelize(&once);
            prop_assert_eq!(trace.total_cost(), 0, "{:?}", trace.steps);
            prop_assert_eq!(twice, once);
        }
    }

    #[test]
    fn reported_bound_matches(inst in instance()) {
        let (kernel, trace) = kernelize(&inst);
        if let Some(b) = trace.bound {
            prop_assert_eq!(b.n, kernel.graph.n());
            prop_assert_eq!(b.bound, kernel_size_bound(kernel.k, kernel.graph.max_degree()));
        }
    }
}

#[test]
fn p3_free_graph_vanishes() {
    let free = ColoredGraph::from_edges(3, [(0, 1, Color::Red), (1, 2, Color::Red)]).unwrap();
    let (kernel, trace) = kernelize(&Instance::new(free, 0));
    assert_eq!(kernel.graph.n(), 0);
    assert_eq!(kernel.k, 0);
    assert!(lift_solution(&trace, &DeletionSet::default()).unwrap().is_empty());
}

#[test]
fn disjoint_p3s_over_budget_stay_no() {
    for count in 1..=5usize {
        let mut edges = Vec::new();
        for i in 0..count {
            edges.push((3 * i, 3 * i + 1, Color::Red));
            edges.push((3 * i + 1, 3 * i + 2, Color::Blue));
        }
        let g = ColoredGraph::from_edges(3 * count, edges).unwrap();
        let k = count as i64 - 1;
        let (kernel, _) = kernelize(&Instance::new(g.clone(), k));
        assert!(!answer(&kernel), "{count} P3s accepted with budget {k}");
        let (kernel, trace) = kernelize(&Instance::new(g.clone(), count as i64));
        let lifted = lift_solution(&trace, &kernel_solution(&kernel).unwrap()).unwrap();
        assert!(is_solution(&g, &lifted.pairs(), count as i64));
    }
}

#[test]
fn bad_trace_is_rejected() {
    let g = random_instance(8, 0.5, 0.5, 7).unwrap();
    let inst = Instance::new(g, 4);
    let (_, mut trace) = kernelize(&inst);
    trace.kernel_k += 1;
    assert!(replay(&inst, &trace).is_err());
    let (_, trace) = kernelize(&inst);
    let outside = DeletionSet::new(vec![Edge::new(0, 40, Color::Red)]);
    assert!(lift_solution(&trace, &outside).is_err());
}
