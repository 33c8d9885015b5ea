mod common;

use proptest::prelude::*;

use bpd::detect::{self, StructureKind};
use bpd::solve::{bipartite_min_vertex_cover, build_conflict_graph, max_packing_bound, maximum_matching};
use bpd::{Color, ColoredGraph};
use common::*;

fn graph(max_n: usize) -> impl Strategy<Value = ColoredGraph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |cells| {
            let mut m = Mat::new(n);
            let mut it = cells.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    m.set(u, v, it.next().unwrap());
                }
            }
            from_mat(&m)
        })
    })
}

/// Smallest vertex cover of the conflict graph by trying subsets in size order.
fn brute_cover(nl: usize, nr: usize, pairs: &[(usize, usize)]) -> usize {
    let total = nl + nr;
    (0..=total)
        .find(|&size| {
            (0u32..1 << total).filter(|s| s.count_ones() as usize == size).any(|s| {
                pairs.iter().all(|&(l, r)| s & (1 << l) != 0 || s & (1 << (nl + r)) != 0)
            })
        })
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matching_and_cover_are_optimal(g in graph(6)) {
        let cg = build_conflict_graph(&g);
        let mut adj = vec![Vec::new(); cg.left.len()];
        for &(l, r) in &cg.adjacency {
            adj[l].push(r);
        }
        let matching = maximum_matching(&cg);
        prop_assert_eq!(matching.len(), kuhn_matching(cg.left.len(), cg.right.len(), &adj));
        for &(l, r) in &matching {
            prop_assert!(cg.adjacency.contains(&(l, r)));
        }
        let cover = bipartite_min_vertex_cover(&cg);
        prop_assert_eq!(cover.len(), matching.len());
        prop_assert_eq!(cover.len(), brute_cover(cg.left.len(), cg.right.len(), &cg.adjacency));
        for &(l, r) in &cg.adjacency {
            prop_assert!(cover.contains(&cg.left[l]) || cover.contains(&cg.right[r]));
        }
    }

    #[test]
    fn conflict_graph_is_the_p3_relation(g in graph(7)) {
        let m = Mat::of(&g);
        let cg = build_conflict_graph(&g);
        prop_assert!(cg.left.iter().all(|e| e.color == Color::Red));
        prop_assert!(cg.right.iter().all(|e| e.color == Color::Blue));
        let mut from_lib: Vec<((usize, usize), (usize, usize))> =
            cg.adjacency.iter().map(|&(l, r)| (cg.left[l].pair(), cg.right[r].pair())).collect();
        let mut want: Vec<((usize, usize), (usize, usize))> = m
            .p3s()
            .into_iter()
            .map(|(u, v, w)| {
                let (a, b) = ((u.min(v), u.max(v)), (v.min(w), v.max(w)));
                if m.get(u, v) == RED { (a, b) } else { (b, a) }
            })
            .collect();
        from_lib.sort_unstable();
        from_lib.dedup();
        want.sort_unstable();
        want.dedup();
        prop_assert_eq!(from_lib, want);
    }

    #[test]
    fn packing_never_exceeds_optimum(g in graph(8)) {
        let bound = max_packing_bound(&g);
        prop_assert_eq!(bound, max_disjoint_p3(&Mat::of(&g)));
        prop_assert!(bound <= brute_opt(&g));
    }

    #[test]
    fn detection_matches_brute_force(g in graph(7)) {
        let m = Mat::of(&g);
        prop_assert_eq!(detect::count_bicolored_p3(&g), m.p3s().len());
        prop_assert_eq!(detect::is_p3_free(&g), m.p3_free());
        for kind in [StructureKind::LCDiamond, StructureKind::LODiamond, StructureKind::IIZDiamond, StructureKind::CCHourglass] {
            let found = detect::enumerate_pattern(&g, kind);
            prop_assert_eq!(!found.is_empty(), has_pattern(&m, kind), "{:?}", kind);
            for s in &found {
                prop_assert!(detect::match_template(&g, kind, &s.witness).is_some());
            }
        }
        prop_assert_eq!(detect::is_nice(&g), nice_brute(&m));
        let flags = detect::classify(&g);
        prop_assert_eq!(flags.mono_free, mono_free(&m));
        prop_assert_eq!(flags.max_degree_le_2, g.max_degree() <= 2);
        prop_assert_eq!(flags.bicolored_p3_free, m.p3_free());
    }
}
