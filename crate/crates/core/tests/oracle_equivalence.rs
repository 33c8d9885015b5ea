mod common;

use proptest::prelude::*;

use bpd::solve::{
    oracle_min_deletions, solve_branching, solve_degree_two, solve_endangered_free, solve_mono_free, solve_nice,
    solve_with, AutoConfig, BranchConfig, MethodChoice,
};
use bpd::{detect, solve_auto, Color, ColoredGraph, Mode, SolveResult};
use common::*;

/// Graphs on up to `max_n` vertices; each pair is absent, red or blue.
fn graph(max_n: usize) -> impl Strategy<Value = ColoredGraph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |cells| {
            let mut edges = Vec::new();
            let mut it = cells.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    match it.next().unwrap() {
                        1 => edges.push((u, v, Color::Red)),
                        2 => edges.push((u, v, Color::Blue)),
                        _ => {}
                    }
                }
            }
            ColoredGraph::from_edges(n, edges).unwrap()
        })
    })
}

fn check(g: &ColoredGraph, r: &SolveResult, k: i64, opt: usize) -> Result<(), TestCaseError> {
    prop_assert_eq!(r.answer, opt as i64 <= k, "k = {}, optimum {}", k, opt);
    if r.answer {
        let pairs = r.solution.as_ref().unwrap().pairs();
        prop_assert!(is_solution(g, &pairs, k));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn branching_matches_brute_force(g in graph(8)) {
        let opt = brute_opt(&g);
        for cfg in [BranchConfig::default(), BranchConfig::plain()] {
            let r = solve_branching(&g, Mode::Optimize, &cfg).unwrap();
            prop_assert_eq!(r.optimum, Some(opt));
            for k in opt.saturating_sub(1)..=opt + 1 {
                check(&g, &solve_branching(&g, Mode::Decide(k as i64), &cfg).unwrap(), k as i64, opt)?;
            }
        }
    }

    #[test]
    fn auto_and_oracle_match_brute_force(g in graph(8)) {
        let opt = brute_opt(&g);
        prop_assert_eq!(oracle_min_deletions(&g, None).optimum, Some(opt));
        let r = solve_auto(&g, Mode::Optimize, &AutoConfig::default()).unwrap();
        prop_assert_eq!(r.optimum, Some(opt));
        prop_assert!(is_solution(&g, &r.solution.unwrap().pairs(), opt as i64));
        for k in [opt as i64 - 1, opt as i64] {
            check(&g, &solve_auto(&g, Mode::Decide(k), &AutoConfig::default()).unwrap(), k, opt)?;
        }
    }

    #[test]
    fn parallel_branching_agrees(g in graph(8)) {
        let cfg = BranchConfig { parallel: true, ..BranchConfig::default() };
        let r = solve_branching(&g, Mode::Optimize, &cfg).unwrap();
        prop_assert_eq!(r.optimum, Some(brute_opt(&g)));
    }

    #[test]
    fn negative_budget_is_no(g in graph(6)) {
        let r = solve_auto(&g, Mode::Decide(-1), &AutoConfig::default()).unwrap();
        prop_assert!(!r.answer);
        prop_assert!(r.solution.is_none());
    }

    #[test]
    fn special_solvers_on_their_classes(g in graph(8)) {
        let opt = brute_opt(&g);
        let flags = detect::classify(&g);
        if flags.endangered_k3_free {
            prop_assert_eq!(solve_endangered_free(&g, Mode::Optimize).unwrap().optimum, Some(opt));
        } else {
            prop_assert!(solve_endangered_free(&g, Mode::Optimize).is_err());
        }
        if flags.max_degree_le_2 {
            prop_assert_eq!(solve_degree_two(&g, Mode::Optimize).unwrap().optimum, Some(opt));
        }
        if flags.mono_free {
            prop_assert_eq!(solve_mono_free(&g, Mode::Optimize).unwrap().optimum, Some(opt));
        }
        if detect::is_nice(&g) {
            prop_assert_eq!(solve_nice(&g, Mode::Optimize).unwrap().optimum, Some(opt));
        }
    }

    #[test]
    fn every_method_choice_agrees_when_applicable(g in graph(7)) {
        let opt = brute_opt(&g);
        for choice in [MethodChoice::Auto, MethodChoice::Branch, MethodChoice::Oracle, MethodChoice::Vc,
                       MethodChoice::Deg2, MethodChoice::Monofree] {
            if let Ok(r) = solve_with(&g, Mode::Optimize, choice, &AutoConfig::default()) {
                prop_assert_eq!(r.optimum, Some(opt), "{:?}", choice);
            }
        }
    }
}
